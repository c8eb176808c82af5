"""Matroid functions that behave as valuations under matroid subdivisions.

Where a function has a geometric decomposition into indicator functions
``i_X`` (``rank_indicator``, ``pbei_intersects``, ``g_bei``) both the
combinatorial value and the geometric one are computed and compared.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .errors import EmptyMatroid, InternalDisagreement, InvalidParameters
from .formal import FormalSum, Polynomial2, UniPoly
from .geometry import (
    HPolytope,
    affine_dimension,
    ehrhart_polynomial,
    lp_feasible,
    matroid_polytope_h,
    matroid_polytope_vertices,
    normalized_volume,
    p_as_polytope,
    pbei_polytope,
    vpolytopes_intersect,
)
from .matroid import Matroid, SubsetRankPair, activities, from_mask, indicator, to_mask

# the geometric side of the dual computations runs only up to this ground-set size
GEOMETRIC_CHECK_MAX_N = 6


def dual_mode(n: int) -> str:
    return "dual" if n <= GEOMETRIC_CHECK_MAX_N else "combinatorial"


# ---------------------------------------------------------------------------
# indicator functions of convex sets


def _lifted(M: Matroid, X: HPolytope) -> HPolytope:
    """``X`` pulled back to convex-combination weights on the bases of ``M``."""
    k = len(M.bases)
    points = [indicator(b, M.n) for b in M.bases]
    rows = [([1] * k, "=", 1)]
    for i in range(k):
        rows.append(([1 if j == i else 0 for j in range(k)], ">=", 0))
    for c in X.constraints:
        normal = [sum(a * x for a, x in zip(c.normal, p)) for p in points]
        rows.append((normal, c.rel, c.bound))
    return HPolytope.build(k, rows)


def i_x(M: Matroid, X: HPolytope, method: str = "vertices") -> int:
    """1 if ``Q(M)`` meets ``X``, else 0 (and 0 for the empty matroid).

    ``method="vertices"`` writes points of ``Q(M)`` as convex combinations
    of basis indicators; ``method="facets"`` joins ``X`` with the inequality
    description of ``Q(M)``.  Both are exact.
    """
    if X.n != M.n:
        raise InvalidParameters("X must live in R^n for the matroid's n")
    if M.is_empty:
        return 0
    if method == "vertices":
        return int(lp_feasible(_lifted(M, X)))
    if method == "facets":
        return int(lp_feasible(matroid_polytope_h(M).join(X)))
    raise InvalidParameters(f"unknown method {method!r}")


def i_bar(M: Matroid, X: HPolytope, method: str = "vertices") -> int:
    return 1 - i_x(M, X, method)


# ---------------------------------------------------------------------------
# subset ranks


def rank_indicator(M: Matroid, A, s: int) -> int:
    """``[r_M(A) = s]``, cross-checked against ``i_{P(A,s)} - i_{P(A,s+1)}``."""
    A = tuple(sorted(A))
    if M.is_empty:
        combinatorial = 0
    else:
        combinatorial = int(M.rank_of_mask(to_mask(A)) == s)
    if M.n <= GEOMETRIC_CHECK_MAX_N:
        geometric = i_x(M, p_as_polytope(A, s, M.n)) - i_x(M, p_as_polytope(A, s + 1, M.n))
        if geometric != combinatorial:
            raise InternalDisagreement(
                f"rank indicator for A={A}, s={s}: rank says {combinatorial}, polytopes say {geometric}")
    return combinatorial


def f_rank(M: Matroid) -> FormalSum:
    """``sum_A (A, r_M(A))`` over all subsets ``A``."""
    if M.is_empty:
        return FormalSum()
    return FormalSum.of(SubsetRankPair(from_mask(m), M.rank_of_mask(m)) for m in range(1 << M.n))


# ---------------------------------------------------------------------------
# basis activities


def f_activities(M: Matroid) -> FormalSum:
    return FormalSum.of(activities(M, B) for B in M.bases)


def tutte(M: Matroid, method: str = "corank-nullity") -> Polynomial2:
    if M.is_empty:
        raise EmptyMatroid("Tutte polynomial of the empty matroid")
    if method == "corank-nullity":
        r = M.r
        total = Polynomial2()
        for m in range(1 << M.n):
            rA = M.rank_of_mask(m)
            total = total + Polynomial2.shifted_power_product(r - rA, m.bit_count() - rA)
        return total
    if method == "activities":
        return activity_specialization(f_activities(M))
    raise InvalidParameters(f"unknown method {method!r}")


def activity_specialization(value: FormalSum) -> Polynomial2:
    """Send each ``(B, E, I)`` to ``x^|I| y^|E|``."""
    return Polynomial2(((len(k.internal), len(k.external)), c) for k, c in value)


def pbei_intersects_combinatorial(M: Matroid, B, E, I) -> bool:
    B = tuple(sorted(B))
    if not M.is_basis(B):
        return False
    rec = activities(M, B)
    return not (set(E) <= set(rec.external) and set(I) <= set(rec.internal))


def pbei_witness(M: Matroid, B, E, I):
    """A point of ``Q(M) & P(B,E,I)`` from the exact LP, or ``None``."""
    if M.is_empty:
        return None
    return vpolytopes_intersect(matroid_polytope_vertices(M), pbei_polytope(B, E, I, M.n))


@lru_cache(maxsize=None)
def _pbei_geometric(M: Matroid, B: tuple, E: tuple, I: tuple) -> bool:
    return pbei_witness(M, B, E, I) is not None


def _check_bei(n, B, E, I):
    B, E, I = (tuple(sorted(set(x))) for x in (B, E, I))
    if set(E) & set(B) or not set(I) <= set(B):
        raise InvalidParameters("need E disjoint from B and I inside B")
    if any(not 1 <= i <= n for i in B + E):
        raise InvalidParameters("elements out of range")
    return B, E, I


def pbei_intersects(M: Matroid, B, E, I) -> bool:
    """Whether ``Q(M)`` meets ``P(B,E,I)``; LP answer checked against activities."""
    B, E, I = _check_bei(M.n, B, E, I)
    combinatorial = pbei_intersects_combinatorial(M, B, E, I)
    if M.n <= GEOMETRIC_CHECK_MAX_N:
        geometric = _pbei_geometric(M, B, E, I)
        if geometric != combinatorial:
            raise InternalDisagreement(
                f"P(B,E,I) test for B={B}, E={E}, I={I}: LP says {geometric}, activities say {combinatorial}")
    return combinatorial


@lru_cache(maxsize=None)
def _ibar_point(M: Matroid, B: tuple) -> int:
    return i_bar(M, HPolytope.point(indicator(B, M.n)))


def g_bei_direct(M: Matroid, B, E, I) -> int:
    B = tuple(sorted(B))
    if not M.is_basis(B):
        return 0
    rec = activities(M, B)
    return int(rec.external == tuple(sorted(E)) and rec.internal == tuple(sorted(I)))


def g_bei_decomposed(M: Matroid, B, E, I) -> int:
    """Inclusion-exclusion over ``E <= X <= [n]-B`` and ``I <= Y <= B`` of
    ``ibar(P(B,X,Y)) - ibar({e_B})``, every indicator decided by an LP."""
    B, E, I = _check_bei(M.n, B, E, I)
    outside = [i for i in range(1, M.n + 1) if i not in B and i not in E]
    inside = [i for i in B if i not in I]
    point = _ibar_point(M, B)
    total = 0
    for xs in _subsets(outside):
        X = tuple(sorted(E + xs))
        for ys in _subsets(inside):
            Y = tuple(sorted(I + ys))
            term = (0 if _pbei_geometric(M, B, X, Y) else 1) - point
            total += (-1) ** (len(xs) + len(ys)) * term
    return total


def _subsets(items):
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def g_bei(M: Matroid, B, E, I) -> int:
    B, E, I = _check_bei(M.n, B, E, I)
    direct = g_bei_direct(M, B, E, I)
    if M.n <= GEOMETRIC_CHECK_MAX_N:
        decomposed = g_bei_decomposed(M, B, E, I)
        if decomposed != direct:
            raise InternalDisagreement(
                f"G(B,E,I) for B={B}, E={E}, I={I}: direct {direct}, decomposition {decomposed}")
    return direct


# ---------------------------------------------------------------------------
# flags, Derksen, quasi-symmetric


def _flag_ranks(M: Matroid):
    """Yield ``(masks, ranks)`` of the maximal flag of every permutation."""
    for perm in itertools.permutations(range(1, M.n + 1)):
        mask = 0
        masks = []
        for e in perm:
            mask |= 1 << (e - 1)
            masks.append(mask)
        yield masks, [M.rank_of_mask(m) for m in masks]


def h_flags(M: Matroid) -> FormalSum:
    """``sum`` over maximal flags of ``((A_1, r(A_1)), ..., (A_n, r(A_n)))``."""
    if M.is_empty:
        return FormalSum()
    return FormalSum.of(
        tuple(SubsetRankPair(from_mask(m), r) for m, r in zip(masks, ranks))
        for masks, ranks in _flag_ranks(M))


def g_derksen(M: Matroid) -> FormalSum:
    """Rank-jump sequences over all maximal flags, in the free module on sequences."""
    if M.is_empty:
        return FormalSum()
    return FormalSum.of(tuple(b - a for a, b in zip([0] + ranks, ranks))
                        for _, ranks in _flag_ranks(M))


def flags_to_jumps(value: FormalSum) -> FormalSum:
    """Forget the sets of each flag term, keeping its rank jumps."""
    def jumps(flag):
        ranks = [p.rank for p in flag]
        return tuple(b - a for a, b in zip([0] + ranks, ranks))
    return value.map_keys(jumps)


def ordered_set_partitions(n: int):
    """All ordered set partitions of ``{1..n}`` as tuples of sorted blocks."""
    def rec(items):
        if not items:
            yield ()
            return
        first, rest = items[0], items[1:]
        for part in rec(rest):
            # put ``first`` in an existing block
            for k in range(len(part)):
                yield part[:k] + (tuple(sorted((first,) + part[k])),) + part[k + 1:]
            # or in a new singleton block at any position
            for k in range(len(part) + 1):
                yield part[:k] + ((first,),) + part[k:]
    return list(rec(list(range(1, n + 1))))


def qs_bjr(M: Matroid) -> FormalSum:
    """Monomial quasi-symmetric expansion keyed by compositions.

    Each ordered set partition contributes ``M_(|P_1|,...,|P_k|)`` when the
    weights ``f = i on P_i`` have a unique minimum-weight basis.
    """
    if M.is_empty:
        return FormalSum()
    keys = []
    for blocks in ordered_set_partitions(M.n):
        weight = {}
        for i, block in enumerate(blocks, 1):
            for e in block:
                weight[e] = i
        totals = sorted(sum(weight[e] for e in B) for B in M.bases)
        if len(totals) == 1 or totals[0] < totals[1]:
            keys.append(tuple(len(b) for b in blocks))
    return FormalSum.of(keys)


# ---------------------------------------------------------------------------
# elementary valuations


def volume(M: Matroid) -> Fraction:
    """Normalized volume of ``Q(M)`` in its own affine lattice.

    To use volume as a valuation on a subdivision of a ``d``-dimensional
    polytope, use :func:`full_dimensional_volume` so that lower-dimensional
    intersections count as zero.
    """
    if M.is_empty:
        return Fraction(0)
    return normalized_volume(matroid_polytope_vertices(M))


def full_dimensional_volume(M: Matroid, dim: int) -> Fraction:
    """Volume counted only in dimension ``dim`` (0 for lower-dimensional polytopes)."""
    if M.is_empty:
        return Fraction(0)
    Q = matroid_polytope_vertices(M)
    return normalized_volume(Q) if affine_dimension(Q) == dim else Fraction(0)


def basis_count(M: Matroid) -> int:
    return len(M.bases)


def constant(M: Matroid) -> int:
    return 0 if M.is_empty else 1


def ehrhart(M: Matroid) -> UniPoly:
    return UniPoly() if M.is_empty else ehrhart_polynomial(M)


def elementary_valuations(M: Matroid, which: str):
    table = {"volume": volume, "basis_count": basis_count, "constant": constant, "ehrhart": ehrhart}
    try:
        return table[which](M)
    except KeyError:
        raise InvalidParameters(f"unknown elementary valuation {which!r}") from None
