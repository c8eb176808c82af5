import pytest

from corpus import split_subdivisions
from matroid_valuations.catalog import generate_u_a_ab, octahedron_subdivision, u36_subdivision
from matroid_valuations.errors import DimensionMismatch, InvalidParameters, NotValidated
from matroid_valuations.geometry import separating_functional
from matroid_valuations.matroid import matroid_from_bases, uniform
from matroid_valuations.subdivision import (
    BOTTOM,
    TOP,
    Subdivision,
    alternating_sum,
    crosscut_all,
    face_poset,
    interior_face_sum,
    interior_faces,
    intersection_lattice,
    topology_check,
    topology_failures,
    valuation_check,
    validate_subdivision,
    verify_valuation,
)
from matroid_valuations.valuations import (
    basis_count,
    constant,
    f_activities,
    f_rank,
    full_dimensional_volume,
    tutte,
)

LOWER = matroid_from_bases(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]])
UPPER = matroid_from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])


@pytest.fixture(scope="module")
def octa():
    return octahedron_subdivision().validate()


@pytest.fixture(scope="module")
def u36():
    return u36_subdivision().validate()


def test_octahedron_valid(octa):
    r = octa.report
    assert r.valid and r.ambient_volume == 4 and r.cell_volumes == [2, 2]
    assert octa.cells == (LOWER, UPPER)


def test_u36_valid(u36):
    assert u36.validated and u36.report.ambient_volume == 66
    assert u36.report.cell_volumes == [22, 22, 22]


def test_u_a_ab_with_a2_b2_is_the_octahedron():
    assert generate_u_a_ab(2, 2) == octahedron_subdivision()


def test_more_u_a_ab_members_validate():
    assert generate_u_a_ab(2, 3).validate().validated
    assert generate_u_a_ab(1, 4).validate().validated


def test_overlapping_cells_rejected():
    r = validate_subdivision(uniform(2, 4), [LOWER, uniform(2, 4)])
    assert not r.valid and not r.faces and not r.coverage
    # same volumes as a real subdivision, but both cells are the same pyramid
    r = validate_subdivision(uniform(2, 4), [LOWER, LOWER])
    assert not r.valid and r.coverage and not r.faces
    assert r.counterexamples[0]["kind"] == "OverlappingCells"


def test_improper_meeting_detected_by_separator():
    # a square cut along both diagonals: the triangles cross in the interior
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    a = [square[0], square[1], square[2]]
    b = [square[1], square[2], square[3]]
    assert separating_functional(a, b, [square[1], square[2]]) is None
    c = [square[0], square[2], square[3]]
    assert separating_functional(a, c, [square[0], square[2]]) is not None


def test_missing_cell_rejected():
    r = validate_subdivision(uniform(2, 4), [LOWER])
    assert not r.coverage and r.counterexamples[-1]["kind"] == "VolumeMismatch"


def test_lower_dimensional_and_outside_cells_rejected():
    square = matroid_from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4]])
    r = validate_subdivision(uniform(2, 4), [LOWER, UPPER, square])
    assert not r.containment
    assert any(c["kind"] == "LowerDimensionalCell" for c in r.counterexamples)
    r = validate_subdivision(LOWER, [uniform(2, 4)])
    assert any(c["kind"] == "BasesOutsideAmbient" for c in r.counterexamples)


def test_malformed_input_raises():
    with pytest.raises(DimensionMismatch):
        validate_subdivision(uniform(2, 4), [uniform(2, 5)])
    with pytest.raises(InvalidParameters):
        validate_subdivision(uniform(2, 4), [matroid_from_bases(4, [])])


def test_unvalidated_input_refused():
    S = octahedron_subdivision()
    with pytest.raises(NotValidated):
        intersection_lattice(S)
    bad = Subdivision(uniform(2, 4), (LOWER,)).validate()
    with pytest.raises(NotValidated):
        interior_faces(bad)


def test_intersection_lattice(octa, u36):
    L = intersection_lattice(octa)
    assert L.get({1, 2}).bases == ((1, 3), (1, 4), (2, 3), (2, 4))
    assert L.get(set()) == octa.ambient
    M123 = intersection_lattice(u36).get({1, 2, 3})
    assert M123.bases == ((1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6),
                          (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6))


def test_interior_faces(octa, u36):
    faces = interior_faces(octa)
    assert [(f.witness, f.dim, len(f.matroid)) for f in faces] == [((1,), 3, 5), ((2,), 3, 5), ((1, 2), 2, 4)]
    faces = interior_faces(u36)
    assert [f.witness for f in faces] == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    assert [f.dim for f in faces] == [5, 5, 5, 4, 4, 4, 3]
    single = Subdivision(uniform(2, 4), (uniform(2, 4),)).validate()
    assert [f.matroid for f in interior_faces(single)] == [uniform(2, 4)]


def test_identity_examples(octa):
    assert alternating_sum(constant, octa) == 0
    assert alternating_sum(basis_count, octa) == 0
    assert interior_face_sum(constant, octa) == 1
    assert interior_face_sum(basis_count, octa) == 6
    assert alternating_sum(lambda M: full_dimensional_volume(M, 3), octa) == 0
    single = Subdivision(uniform(2, 4), (uniform(2, 4),)).validate()
    assert interior_face_sum(basis_count, single) == 6


def test_non_valuation_detected(octa):
    # squared basis count is not a valuation: 36 - 50 + 16 = 2
    check = valuation_check(lambda M: len(M) ** 2, octa)
    assert check["alternating_sum"] == 2 and not check["alternating_ok"]
    assert not verify_valuation(lambda M: len(M) ** 2, octa)


def test_verify_valuation_examples(octa, u36):
    assert verify_valuation(f_rank, octa)
    assert verify_valuation(f_activities, u36)
    assert verify_valuation(tutte, octa) and verify_valuation(tutte, u36)


def test_face_poset_octahedron(octa):
    fp = face_poset(octa)
    P = fp.poset
    coatoms = [x for x, y in P.covers() if y == TOP]
    assert sorted(sorted(c) for c in coatoms) == [sorted(LOWER.bases), sorted(UPPER.bases)]
    interior = {frozenset(f) for f in fp.interior()}
    assert interior == {frozenset(f.matroid.bases) for f in interior_faces(octa)}
    # facets of the pyramids other than the square lie on the boundary
    for f in fp.faces():
        if fp.dims[f] == 2 and len(f) == 3:
            assert fp.boundary[f]
    assert P.mobius(BOTTOM, TOP) == 0


def test_face_poset_interior_matches_lattice(u36):
    fp = face_poset(u36)
    assert {frozenset(f) for f in fp.interior()} == {frozenset(f.matroid.bases) for f in interior_faces(u36)}


def test_topology(octa, u36):
    assert topology_check(octa)
    assert topology_failures(u36) == []
    segment = Subdivision(uniform(1, 2), (uniform(1, 2),)).validate()
    assert topology_check(segment)
    assert crosscut_all(octa) and crosscut_all(u36)


def test_two_forms_agree_on_splits():
    # for every split of a small hypersimplex both identity forms hold for each valuation,
    # and they agree with each other even for a function that is not a valuation
    valuations = [f_rank, f_activities, tutte, basis_count, constant]
    for n, k, bases, low, high in split_subdivisions(5):
        S = Subdivision(uniform(k, n), (matroid_from_bases(n, low), matroid_from_bases(n, high))).validate()
        assert S.validated, (n, k)
        assert topology_check(S)
        for f in valuations + [lambda M: full_dimensional_volume(M, S.dim)]:
            check = valuation_check(f, S)
            assert check["alternating_ok"] and check["interior_ok"]
        bad = valuation_check(lambda M: len(M) ** 2, S)
        assert bad["alternating_ok"] == bad["interior_ok"]


def test_json_round_trip(u36):
    S = u36_subdivision()
    assert Subdivision.from_json(S.to_json()) == S
