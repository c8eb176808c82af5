import itertools
from fractions import Fraction

import pytest

from corpus import all_matroids, random_corpus, tutte_deletion_contraction
from matroid_valuations.catalog import table2_matroids
from matroid_valuations.errors import EmptyMatroid, InternalDisagreement, InvalidParameters
from matroid_valuations.formal import FormalSum, Polynomial2, UniPoly
from matroid_valuations.geometry import HPolytope, p_as_polytope
from matroid_valuations.matroid import ActivityRecord, SubsetRankPair, matroid_from_bases, schubert, uniform
from matroid_valuations.valuations import (
    GEOMETRIC_CHECK_MAX_N,
    activity_specialization,
    basis_count,
    constant,
    dual_mode,
    ehrhart,
    elementary_valuations,
    f_activities,
    f_rank,
    flags_to_jumps,
    g_bei,
    g_bei_decomposed,
    g_bei_direct,
    g_derksen,
    h_flags,
    i_bar,
    i_x,
    ordered_set_partitions,
    pbei_intersects,
    pbei_witness,
    qs_bjr,
    rank_indicator,
    tutte,
    volume,
)

EMPTY = matroid_from_bases(3, [])
M6 = table2_matroids()[5]


def test_i_x_examples():
    for n, bases in [(n, b) for n in range(1, 4) for b in all_matroids(n)]:
        M = matroid_from_bases(n, bases)
        assert i_x(M, HPolytope.cube(n)) == 1
        assert i_x(M, HPolytope.cube(n), method="facets") == 1
    assert i_x(uniform(2, 4), p_as_polytope([1, 2], 3, 4)) == 0
    M = matroid_from_bases(4, [[1, 3], [1, 4]])
    assert i_x(M, HPolytope.point((1, 0, 1, 0))) == 1
    assert i_bar(M, HPolytope.point((0, 1, 1, 0))) == 1
    assert i_x(EMPTY, HPolytope.cube(3)) == 0
    with pytest.raises(InvalidParameters):
        i_x(M, HPolytope.cube(3))


def test_i_x_methods_agree():
    for n, bases in random_corpus(30, 4, seed=7):
        M = matroid_from_bases(n, bases)
        for k in range(n + 1):
            for A in itertools.combinations(range(1, n + 1), k):
                for s in range(k + 1):
                    X = p_as_polytope(A, s, n)
                    assert i_x(M, X) == i_x(M, X, method="facets")


def test_rank_indicator_examples():
    assert rank_indicator(uniform(2, 4), [1, 2], 2) == 1
    assert rank_indicator(uniform(2, 4), [1, 2], 3) == 0
    assert rank_indicator(M6, [1, 4], 2) == 1
    assert rank_indicator(EMPTY, [1], 0) == 0


def test_rank_indicator_exhaustive():
    # runs the polytope computation for every (M, A, s): any disagreement raises
    for n, bases in [(n, b) for n in range(1, 5) for b in all_matroids(n)]:
        M = matroid_from_bases(n, bases)
        for k in range(n + 1):
            for A in itertools.combinations(range(1, n + 1), k):
                values = [rank_indicator(M, A, s) for s in range(k + 2)]
                assert sum(values) == 1


def test_dual_mode_guard():
    assert dual_mode(GEOMETRIC_CHECK_MAX_N) == "dual"
    assert dual_mode(GEOMETRIC_CHECK_MAX_N + 1) == "combinatorial"
    # above the guard only the combinatorial side runs
    assert rank_indicator(uniform(2, 7), [1, 2, 3], 2) == 1


def test_f_rank():
    value = f_rank(uniform(1, 2))
    assert value == FormalSum.of([SubsetRankPair((), 0), SubsetRankPair((1,), 1),
                                  SubsetRankPair((2,), 1), SubsetRankPair((1, 2), 1)])
    m1 = table2_matroids()[0]
    assert f_rank(m1).coefficient(SubsetRankPair((1, 2, 3, 4), 1)) == 1
    for n, bases in random_corpus(20, 6, seed=8):
        M = matroid_from_bases(n, bases)
        v = f_rank(M)
        assert v.total() == 2 ** n
        assert v.coefficient(SubsetRankPair(tuple(range(1, n + 1)), M.r)) == 1
    assert f_rank(EMPTY).is_zero()


def test_f_activities():
    assert f_activities(uniform(1, 1)) == FormalSum.of([ActivityRecord((1,), (), (1,))])
    assert len(f_activities(uniform(3, 6))) == 20
    for n, bases in random_corpus(20, 6, seed=9):
        assert f_activities(matroid_from_bases(n, bases)).total() == len(bases)
    assert f_activities(EMPTY).is_zero()


def test_tutte_examples():
    assert tutte(uniform(2, 4)) == Polynomial2({(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1})
    assert tutte(uniform(1, 1)) == Polynomial2({(1, 0): 1})
    assert tutte(uniform(2, 4))(1, 1) == 6
    with pytest.raises(EmptyMatroid):
        tutte(EMPTY)
    with pytest.raises(InvalidParameters):
        tutte(uniform(1, 1), method="bogus")


def test_tutte_against_deletion_contraction():
    corpus = [(n, b) for n in range(1, 5) for b in all_matroids(n)] + random_corpus(60, 6, seed=10)
    for n, bases in corpus:
        M = matroid_from_bases(n, bases)
        expected = Polynomial2(tutte_deletion_contraction(range(1, n + 1), bases))
        assert tutte(M) == expected
        assert tutte(M, method="activities") == expected
        assert activity_specialization(f_activities(M)) == expected
        assert tutte(M)(1, 1) == len(bases)


def test_pbei_examples():
    B, E, I = [1, 3], [2], [3]
    m1 = matroid_from_bases(4, [[1, 2], [1, 4], [2, 3], [3, 4]])
    m2 = matroid_from_bases(4, [[1, 3], [1, 4], [3, 4]])
    m3 = matroid_from_bases(4, [[1, 3], [2, 3], [3, 4]])
    assert not pbei_intersects(m1, B, E, I)
    assert not pbei_intersects(m2, B, E, I)
    assert pbei_intersects(m3, B, E, I)
    assert pbei_witness(m3, B, E, I) == (Fraction(1, 2), Fraction(1, 2), 1, 0)
    with pytest.raises(InvalidParameters):
        pbei_intersects(m3, B, [1], I)


def test_pbei_exhaustive_small():
    for n, bases in [(n, b) for n in range(1, 4) for b in all_matroids(n)]:
        M = matroid_from_bases(n, bases)
        for k in range(n + 1):
            for B in itertools.combinations(range(1, n + 1), k):
                rest = [i for i in range(1, n + 1) if i not in B]
                for E in _subsets(rest):
                    for I in _subsets(B):
                        pbei_intersects(M, B, E, I)  # raises on disagreement


def _subsets(items):
    return [c for k in range(len(items) + 1) for c in itertools.combinations(items, k)]


def test_g_bei_examples():
    m1 = schubert(6, [2, 4, 6])
    assert g_bei(m1, [1, 2, 6], [5], [1, 2]) == 1
    assert g_bei(m1, [1, 2, 6], [], [1, 2]) == 0
    assert g_bei(uniform(2, 4), [1, 2], [], [1, 2]) == 1
    not_basis = matroid_from_bases(4, [[1, 2], [1, 3]])
    assert g_bei(not_basis, [3, 4], [], []) == 0


def test_g_bei_decomposition_on_small_matroids():
    small = [[[1, 2], [1, 4], [2, 3], [3, 4]], [[1, 3], [1, 4], [3, 4]], [[1, 3], [2, 3], [3, 4]]]
    for bases in small:
        M = matroid_from_bases(4, bases)
        for B in itertools.combinations(range(1, 5), 2):
            rest = [i for i in range(1, 5) if i not in B]
            for E in _subsets(rest):
                for I in _subsets(B):
                    assert g_bei_direct(M, B, E, I) == g_bei_decomposed(M, B, E, I)


def test_g_bei_sums_to_basis_indicator():
    # summing G(B,E,I) over all (E,I) gives [B is a basis]
    for n, bases in random_corpus(8, 4, seed=11):
        M = matroid_from_bases(n, bases)
        for B in itertools.combinations(range(1, n + 1), M.r):
            rest = [i for i in range(1, n + 1) if i not in B]
            total = sum(g_bei(M, B, E, I) for E in _subsets(rest) for I in _subsets(B))
            assert total == int(B in M.bases)


def test_flags():
    assert h_flags(uniform(1, 2)) == FormalSum.of([
        (SubsetRankPair((1,), 1), SubsetRankPair((1, 2), 1)),
        (SubsetRankPair((2,), 1), SubsetRankPair((1, 2), 1)),
    ])
    assert h_flags(uniform(1, 1)) == FormalSum.of([(SubsetRankPair((1,), 1),)])
    assert h_flags(EMPTY).is_zero()


def test_flags_double_count_rank_terms():
    # each set of size i lies in i!(n-i)! maximal flags
    from math import factorial
    for n, bases in random_corpus(10, 5, seed=12):
        M = matroid_from_bases(n, bases)
        counts: dict = {}
        for flag, c in h_flags(M):
            for pair in flag:
                counts[pair] = counts.get(pair, 0) + c
        for pair, c in f_rank(M):
            if pair.subset:
                i = len(pair.subset)
                assert counts[pair] == c * factorial(i) * factorial(n - i)


def test_derksen():
    assert g_derksen(uniform(1, 1)) == FormalSum.of([(1,)])
    assert g_derksen(uniform(1, 2)) == FormalSum({(1, 0): 2})
    for n, bases in random_corpus(15, 5, seed=13):
        M = matroid_from_bases(n, bases)
        G = g_derksen(M)
        assert all(sum(seq) == M.r for seq in G.support())
        assert flags_to_jumps(h_flags(M)) == G


def test_ordered_set_partitions_count():
    fubini = [1, 1, 3, 13, 75, 541]
    for n in range(1, 6):
        parts = ordered_set_partitions(n)
        assert len(parts) == fubini[n] and len(set(parts)) == fubini[n]


def test_qs():
    assert qs_bjr(uniform(1, 1)) == FormalSum.of([(1,)])
    assert qs_bjr(uniform(1, 2)) == FormalSum({(1, 1): 2})
    assert qs_bjr(uniform(2, 2)) == FormalSum({(2,): 1, (1, 1): 2})
    assert qs_bjr(EMPTY).is_zero()


def test_qs_brute_force_weights():
    # compare against genericity of explicit weight functions f: [n] -> {1..n}
    for n, bases in random_corpus(6, 4, seed=14):
        M = matroid_from_bases(n, bases)
        expected: dict = {}
        for f in itertools.product(range(1, n + 1), repeat=n):
            used = sorted(set(f))
            if used != list(range(1, len(used) + 1)):
                continue  # only surjections onto an initial segment
            totals = sorted(sum(f[e - 1] for e in B) for B in bases)
            if len(totals) == 1 or totals[0] < totals[1]:
                comp = tuple(f.count(v) for v in used)
                expected[comp] = expected.get(comp, 0) + 1
        assert qs_bjr(M) == FormalSum(expected)


def test_elementary():
    assert basis_count(uniform(3, 6)) == 20
    assert volume(uniform(2, 4)) == 4
    assert constant(uniform(2, 4)) == 1 and constant(EMPTY) == 0
    assert volume(EMPTY) == 0 and ehrhart(EMPTY) == UniPoly()
    assert elementary_valuations(uniform(2, 4), "ehrhart")(1) == 6
    with pytest.raises(InvalidParameters):
        elementary_valuations(uniform(2, 4), "area")


def test_internal_disagreement_is_an_assertion():
    assert issubclass(InternalDisagreement, AssertionError)
