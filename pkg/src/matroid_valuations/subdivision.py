"""Matroid polytope subdivisions: validation, the intersection lattice
``{M_A}``, interior faces, the face poset and the two valuation identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable

from .errors import DimensionMismatch, InvalidParameters, NotValidated
from .formal import is_zero
from .geometry import (
    affine_dimension,
    enumerate_faces,
    matroid_polytope_vertices,
    normalized_volume,
    separating_functional,
    VPolytope,
)
from .matroid import Matroid, indicator, matroid_from_bases
from .poset import Poset, crosscut_check

BOTTOM = "0^"
TOP = "1^"


@dataclass
class ValidationReport:
    containment: bool
    faces: bool
    coverage: bool
    counterexamples: list[dict] = field(default_factory=list)
    ambient_volume: int | None = None
    cell_volumes: list[int] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.containment and self.faces and self.coverage

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "containment": self.containment,
            "faces": self.faces,
            "coverage": self.coverage,
            "ambient_volume": self.ambient_volume,
            "cell_volumes": self.cell_volumes,
            "counterexamples": self.counterexamples,
        }


@dataclass(frozen=True)
class Subdivision:
    ambient: Matroid
    cells: tuple[Matroid, ...]
    report: ValidationReport | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))

    @property
    def validated(self) -> bool:
        return self.report is not None and self.report.valid

    def validate(self) -> "Subdivision":
        """Copy of this subdivision carrying its validation report."""
        return replace(self, report=validate_subdivision(self.ambient, list(self.cells)))

    @property
    def dim(self) -> int:
        return affine_dimension(matroid_polytope_vertices(self.ambient))

    def to_json(self) -> dict:
        return {"ambient": self.ambient.to_json(), "cells": [c.to_json() for c in self.cells]}

    @classmethod
    def from_json(cls, data: dict) -> "Subdivision":
        return cls(Matroid.from_json(data["ambient"]),
                   tuple(Matroid.from_json(c) for c in data["cells"]))


def validate_subdivision(M: Matroid, cells: list[Matroid]) -> ValidationReport:
    """Run the containment, pairwise-face and volume-coverage checks.

    Failures are reported with witnesses rather than raised; only malformed
    input (different ground sets, empty cells) raises.
    """
    if M.is_empty:
        raise InvalidParameters("cannot subdivide the empty matroid")
    for k, c in enumerate(cells, 1):
        if c.n != M.n:
            raise DimensionMismatch(f"cell {k} lives on {c.n} elements, ambient on {M.n}")
        if c.is_empty:
            raise InvalidParameters(f"cell {k} is the empty matroid")

    bad: list[dict] = []
    Q = matroid_polytope_vertices(M)
    dim = affine_dimension(Q)
    containment = True
    for k, c in enumerate(cells, 1):
        outside = [list(b) for b in c.bases if b not in set(M.bases)]
        if outside:
            containment = False
            bad.append({"check": "containment", "kind": "BasesOutsideAmbient",
                        "cell": k, "bases": outside})
        cdim = affine_dimension(matroid_polytope_vertices(c))
        if cdim != dim:
            containment = False
            bad.append({"check": "containment", "kind": "LowerDimensionalCell",
                        "cell": k, "dim": cdim, "ambient_dim": dim})

    faces = True
    for (i, a), (j, b) in itertools.combinations(enumerate(cells, 1), 2):
        common = sorted(set(a.bases) & set(b.bases))
        if common and affine_dimension(VPolytope(tuple(indicator(x, M.n) for x in common))) == dim:
            # full-dimensional overlap: the cells share interior points
            faces = False
            bad.append({"check": "faces", "kind": "OverlappingCells",
                        "cells": [i, j], "common_bases": [list(x) for x in common]})
            continue
        witness = separating_functional([indicator(x, M.n) for x in a.bases],
                                        [indicator(x, M.n) for x in b.bases],
                                        [indicator(x, M.n) for x in common])
        if witness is None:
            faces = False
            bad.append({"check": "faces", "kind": "ImproperIntersection",
                        "cells": [i, j], "common_bases": [list(x) for x in common]})

    ambient_volume = int(normalized_volume(Q))
    volumes = [int(normalized_volume(matroid_polytope_vertices(c))) for c in cells]
    coverage = sum(volumes) == ambient_volume
    if not coverage:
        bad.append({"check": "coverage", "kind": "VolumeMismatch",
                    "ambient_volume": ambient_volume, "cell_volume_sum": sum(volumes)})
    return ValidationReport(containment, faces, coverage, bad, ambient_volume, volumes)


def _require_validated(S: Subdivision):
    if not S.validated:
        raise NotValidated("run Subdivision.validate() first (and make sure it passed)")


@dataclass(frozen=True)
class IntersectionLattice:
    """``entries[A]`` is ``M_A`` for every ``A`` (subset of cell labels 1..m)
    whose intersection is nonempty; ``entries[frozenset()]`` is the ambient."""

    m: int
    entries: dict

    def get(self, A):
        return self.entries.get(frozenset(A))

    def __iter__(self):
        return iter(sorted(self.entries.items(), key=lambda t: _subset_key(t[0])))


def _subset_key(A) -> tuple:
    return (len(A), sorted(A))


def _lex_key(A) -> tuple:
    return tuple(sorted(A))


def intersection_lattice(S: Subdivision) -> IntersectionLattice:
    _require_validated(S)
    entries = {frozenset(): S.ambient}
    m = len(S.cells)
    for k in range(1, m + 1):
        for A in itertools.combinations(range(1, m + 1), k):
            common = set(S.cells[A[0] - 1].bases)
            for a in A[1:]:
                common &= set(S.cells[a - 1].bases)
            if common:
                entries[frozenset(A)] = matroid_from_bases(S.ambient.n, sorted(common))
    return IntersectionLattice(m, entries)


@dataclass(frozen=True)
class InteriorFace:
    matroid: Matroid
    dim: int
    witness: tuple[int, ...]


def _outer_facets(M: Matroid) -> list[frozenset]:
    """Facets of ``Q(M)`` as basis sets."""
    lattice = enumerate_faces(matroid_polytope_vertices(M))
    return [frozenset(M.bases[i] for i in f) for f in lattice.facets()]


def interior_faces(S: Subdivision) -> list[InteriorFace]:
    """Distinct ``M_A`` over nonempty ``A`` not lying in a facet of ``Q(M)``,
    each with its lexicographically least witness ``A``; ordered by
    decreasing dimension, then witness."""
    lattice = intersection_lattice(S)
    outer = _outer_facets(S.ambient)
    seen: dict[tuple, tuple] = {}
    for A, MA in lattice.entries.items():
        if not A or any(set(MA.bases) <= g for g in outer):
            continue
        key = MA.bases
        if key not in seen or _lex_key(A) < seen[key][0]:
            seen[key] = (_lex_key(A), MA)
    out = [InteriorFace(MA, affine_dimension(matroid_polytope_vertices(MA)), A)
           for A, MA in seen.values()]
    out.sort(key=lambda f: (-f.dim, f.witness))
    return out


def alternating_sum(f: Callable[[Matroid], object], S: Subdivision):
    """``sum_A (-1)^|A| f(M_A)``; empty intersections contribute nothing."""
    total = 0
    for A, MA in intersection_lattice(S):
        value = f(MA)
        total = total + (value if len(A) % 2 == 0 else -value)
    return total


def interior_face_sum(f: Callable[[Matroid], object], S: Subdivision):
    """``sum_F (-1)^(dim Q - dim F) f(M(F))`` over interior faces ``F``."""
    dim = S.dim
    total = 0
    for F in interior_faces(S):
        value = f(F.matroid)
        total = total + (value if (dim - F.dim) % 2 == 0 else -value)
    return total


def valuation_check(f: Callable[[Matroid], object], S: Subdivision) -> dict:
    """Both identity forms with their values, for reporting."""
    alt = alternating_sum(f, S)
    fM = f(S.ambient)
    interior = interior_face_sum(f, S)
    return {
        "alternating_sum": alt,
        "f_ambient": fM,
        "interior_face_sum": interior,
        "alternating_ok": is_zero(alt),
        "interior_ok": is_zero(interior - fM),
    }


def verify_valuation(f: Callable[[Matroid], object], S: Subdivision) -> bool:
    check = valuation_check(f, S)
    return check["alternating_ok"] and check["interior_ok"]


# ---------------------------------------------------------------------------
# face poset and topology


@dataclass(frozen=True)
class FacePosetWithTop:
    """Faces of all cells (as basis sets) plus ``BOTTOM`` and ``TOP``."""

    poset: Poset
    dims: dict
    boundary: dict
    ambient_dim: int

    def rank(self, x) -> int:
        if x == BOTTOM:
            return -1
        if x == TOP:
            return self.ambient_dim + 1
        return self.dims[x]

    def faces(self) -> list:
        return [e for e in self.poset.elements if e not in (BOTTOM, TOP)]

    def interior(self) -> list:
        return [e for e in self.faces() if not self.boundary[e]]


def _faces_by_bases(M: Matroid) -> list[tuple[frozenset, int]]:
    lattice = enumerate_faces(matroid_polytope_vertices(M))
    return [(frozenset(M.bases[i] for i in f), d) for f, d in lattice.faces if d >= 0]


def face_poset(S: Subdivision) -> FacePosetWithTop:
    _require_validated(S)
    dims: dict = {}
    for cell in S.cells:
        for f, d in _faces_by_bases(cell):
            dims[f] = d
    outer = _outer_facets(S.ambient)
    boundary = {f: any(f <= g for g in outer) for f in dims}
    faces = sorted(dims, key=lambda f: (dims[f], sorted(f)))
    elements = [BOTTOM] + faces + [TOP]

    def leq(a, b):
        if a == BOTTOM or b == TOP:
            return True
        if a == TOP or b == BOTTOM:
            return False
        return a <= b

    return FacePosetWithTop(Poset(elements, leq), dims, boundary, S.dim)


def mobius(P: Poset, x, y) -> int:
    return P.mobius(x, y)


def topology_failures(S: Subdivision, fp: FacePosetWithTop | None = None) -> list[dict]:
    """Every place where the face poset departs from the Möbius values of a
    cell decomposition of a ball.

    With ``l(x, y) = rank(y) - rank(x)`` (cover steps in a maximal chain):
    ``mu(0, 1) = 0``; ``mu(x, 1) = 0`` on boundary faces; otherwise
    ``mu(x, y) = (-1)^l(x, y)``.  Also checks that every cover step raises
    the rank by exactly one.
    """
    fp = fp or face_poset(S)
    P = fp.poset
    out = []
    for x, y in P.covers():
        if fp.rank(y) != fp.rank(x) + 1:
            out.append({"kind": "NotGraded", "x": _show(x), "y": _show(y)})
    for x in P.elements:
        for y in P.elements:
            if not P.leq(x, y):
                continue
            mu = P.mobius(x, y)
            if x == BOTTOM and y == TOP:
                expected = 0
            elif y == TOP and x not in (BOTTOM, TOP) and fp.boundary[x]:
                expected = 0
            else:
                expected = (-1) ** (fp.rank(y) - fp.rank(x))
            if mu != expected:
                out.append({"kind": "Mobius", "x": _show(x), "y": _show(y),
                            "mu": mu, "expected": expected})
    return out


def topology_check(S: Subdivision) -> bool:
    return not topology_failures(S)


def crosscut_all(S: Subdivision, fp: FacePosetWithTop | None = None) -> bool:
    """Crosscut identity at every element of the upside-down face lattice."""
    fp = fp or face_poset(S)
    L = fp.poset.dual()
    return all(crosscut_check(L, x) for x in L.elements)


def _show(x):
    if x in (BOTTOM, TOP):
        return x
    return sorted(list(b) for b in x)
