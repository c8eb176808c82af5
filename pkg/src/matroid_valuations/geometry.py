"""Exact rational polyhedral geometry at desk scale.

Everything is computed over :class:`fractions.Fraction` or plain integers.
Face lattices come from a double description run on the homogenized point
set; volumes from a pulling triangulation measured in the lattice of the
affine hull.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from . import lp
from .errors import EmptyMatroid, EmptyPolytope, InternalDisagreement, NonLatticeVertices, ScaleExceeded
from .formal import UniPoly
from .matroid import Matroid, indicator

MAX_DIM = 6
MAX_VERTICES = 60

RELATIONS = ("<=", "<", "=")


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(q) -> str:
    q = _frac(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Constraint:
    normal: tuple[Fraction, ...]
    bound: Fraction
    rel: str = "<="

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.rel!r}")
        object.__setattr__(self, "normal", tuple(_frac(a) for a in self.normal))
        object.__setattr__(self, "bound", _frac(self.bound))

    def satisfied_by(self, x: Sequence) -> bool:
        lhs = sum(a * xi for a, xi in zip(self.normal, x))
        if self.rel == "<=":
            return lhs <= self.bound
        if self.rel == "<":
            return lhs < self.bound
        return lhs == self.bound


@dataclass(frozen=True)
class HPolytope:
    """Intersection of halfspaces (``<=``, strict ``<``) and hyperplanes (``=``)."""

    n: int
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        cons = tuple(self.constraints)
        for c in cons:
            if len(c.normal) != self.n:
                raise ValueError("constraint normal has wrong length")
        object.__setattr__(self, "constraints", cons)

    @classmethod
    def build(cls, n: int, rows: Iterable[tuple[Sequence, str, object]]) -> "HPolytope":
        """Rows are ``(normal, rel, bound)``; ``>=`` and ``>`` are flipped."""
        out = []
        for normal, rel, bound in rows:
            if rel in (">=", ">"):
                normal = [-_frac(a) for a in normal]
                bound = -_frac(bound)
                rel = "<=" if rel == ">=" else "<"
            out.append(Constraint(tuple(normal), bound, rel))
        return cls(n, tuple(out))

    @classmethod
    def point(cls, p: Sequence) -> "HPolytope":
        n = len(p)
        return cls.build(n, (([1 if j == i else 0 for j in range(n)], "=", p[i]) for i in range(n)))

    @classmethod
    def cube(cls, n: int) -> "HPolytope":
        return cls.build(n, _box_rows(n))

    def join(self, other: "HPolytope") -> "HPolytope":
        if other.n != self.n:
            raise ValueError("ambient dimensions differ")
        return HPolytope(self.n, self.constraints + other.constraints)

    def scaled(self, t) -> "HPolytope":
        return HPolytope(self.n, tuple(Constraint(c.normal, c.bound * t, c.rel)
                                       for c in self.constraints))

    def contains(self, x: Sequence) -> bool:
        return all(c.satisfied_by(x) for c in self.constraints)

    def to_json(self) -> dict:
        return {"n": self.n, "constraints": [
            {"normal": [format_rational(a) for a in c.normal],
             "bound": format_rational(c.bound), "rel": c.rel} for c in self.constraints]}

    @classmethod
    def from_json(cls, data: dict) -> "HPolytope":
        return cls(data["n"], tuple(Constraint(tuple(_frac(a) for a in c["normal"]),
                                               _frac(c["bound"]), c["rel"])
                                    for c in data["constraints"]))


def _box_rows(n):
    for i in range(n):
        e = [0] * n
        e[i] = 1
        yield e, ">=", 0
        yield e, "<=", 1


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite list of distinct rational points."""

    vertices: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(_frac(x) for x in v) for v in self.vertices)
        if len(set(pts)) != len(pts):
            raise ValueError("vertices must be pairwise distinct")
        if len({len(p) for p in pts}) > 1:
            raise ValueError("vertices live in different dimensions")
        object.__setattr__(self, "vertices", pts)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def n(self) -> int | None:
        return len(self.vertices[0]) if self.vertices else None

    def __len__(self):
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [[format_rational(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "VPolytope":
        return cls(tuple(tuple(_frac(x) for x in v) for v in data["vertices"]))


@dataclass(frozen=True)
class FaceLattice:
    """Faces as point-index sets with their dimensions.

    ``faces`` is sorted by ``(dim, sorted indices)`` and always starts with
    the empty face (dimension -1) and ends with the whole polytope.
    """

    points: tuple[tuple[Fraction, ...], ...]
    faces: tuple[tuple[frozenset[int], int], ...]
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {f: k for k, (f, _) in enumerate(self.faces)})

    @property
    def dim(self) -> int:
        return self.faces[-1][1]

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for _, d in self.faces:
            if d >= 0:
                counts[d] += 1
        return counts

    def of_dim(self, d: int) -> list[frozenset[int]]:
        return [f for f, k in self.faces if k == d]

    def facets(self) -> list[frozenset[int]]:
        return self.of_dim(self.dim - 1)

    def dim_of(self, face: frozenset[int]) -> int:
        return self.faces[self._index[face]][1]

    def __contains__(self, face) -> bool:
        return frozenset(face) in self._index

    def incidence(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` of face positions with ``faces[i]`` strictly inside ``faces[j]``."""
        out = []
        for i, (f, _) in enumerate(self.faces):
            for j, (g, _) in enumerate(self.faces):
                if i != j and f < g:
                    out.append((i, j))
        return out


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _rank(rows: Sequence[Sequence]) -> int:
    m = [[_frac(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / p[c]
                m[i] = [a - f * b for a, b in zip(m[i], p)]
        rank += 1
    return rank


def _det(rows: Sequence[Sequence]) -> Fraction:
    m = [[_frac(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def _independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Greedy indices of a maximal linearly independent subfamily."""
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    for k, r in enumerate(rows):
        if _rank(basis + [list(r)]) > len(basis):
            basis.append(list(r))
            chosen.append(k)
    return chosen


def _differences(points):
    p0 = points[0]
    return [[a - b for a, b in zip(p, p0)] for p in points[1:]]


def _chart(points) -> tuple[int, list[int]]:
    """Affine dimension and coordinate indices on which projection is injective."""
    diffs = _differences(points)
    if not diffs:
        return 0, []
    d = _rank(diffs)
    cols = _independent_rows(list(zip(*diffs))) if d else []
    return d, cols


def _integerize(points) -> list[tuple[int, ...]]:
    den = reduce(lambda a, b: a * b // gcd(a, b),
                 (x.denominator for p in points for x in p), 1)
    return [tuple(int(x * den) for x in p) for p in points]


def _primitive(v):
    g = reduce(gcd, (abs(x) for x in v), 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polytopes of matroids


def matroid_polytope_vertices(M: Matroid) -> VPolytope:
    if M.is_empty:
        raise EmptyMatroid("the empty matroid has no polytope")
    return VPolytope(tuple(indicator(b, M.n) for b in M.bases))


def matroid_polytope_h(M: Matroid) -> HPolytope:
    """Inequality description: ``0 <= x``, ``x(A) <= r(A)`` for every nonempty
    proper ``A`` (singletons give ``x_i <= r({i}) <= 1``), ``x([n]) = r``."""
    if M.is_empty:
        raise EmptyMatroid("the empty matroid has no polytope")
    n = M.n
    rows = []
    for i in range(n):
        rows.append(([1 if j == i else 0 for j in range(n)], ">=", 0))
    for mask in range(1, (1 << n) - 1):
        normal = [(mask >> j) & 1 for j in range(n)]
        rows.append((normal, "<=", M.rank_of_mask(mask)))
    rows.append(([1] * n, "=", M.r))
    return HPolytope.build(n, rows)


def p_as_polytope(A: Iterable[int], s: int, n: int) -> HPolytope:
    """``{x in [0,1]^n : sum_{i in A} x_i >= s}``."""
    A = set(A)
    rows = list(_box_rows(n))
    if A or s:
        rows.append(([1 if i + 1 in A else 0 for i in range(n)], ">=", s))
    return HPolytope.build(n, rows)


def pbei_vertex_sets(B: Iterable[int], E: Iterable[int], I: Iterable[int], n: int) -> list[tuple]:
    """Sets ``A = B - b + a`` with (``a in E`` and ``a > b``) or (``b in I`` and ``a < b``)."""
    B, E, I = set(B), set(E), set(I)
    if E & B or not I <= B:
        raise ValueError("need E disjoint from B and I inside B")
    out = set()
    for a in range(1, n + 1):
        if a in B:
            continue
        for b in B:
            if (a in E and a > b) or (b in I and a < b):
                out.add(tuple(sorted(B - {b} | {a})))
    return sorted(out)


def pbei_polytope(B, E, I, n: int) -> VPolytope:
    """Convex hull of the midpoints ``(e_A + e_B)/2`` over :func:`pbei_vertex_sets`."""
    eB = indicator(B, n)
    half = Fraction(1, 2)
    return VPolytope(tuple(tuple((a + b) * half for a, b in zip(indicator(A, n), eB))
                           for A in pbei_vertex_sets(B, E, I, n)))


# ---------------------------------------------------------------------------
# linear programming front ends


def lp_feasible(P: HPolytope) -> bool:
    """Exact feasibility; strict rows are handled with a common slack ``delta``."""
    return feasible_point(P) is not None


def feasible_point(P: HPolytope) -> tuple[Fraction, ...] | None:
    if not P.constraints:
        return tuple(Fraction(0) for _ in range(P.n))
    n = P.n
    strict = any(c.rel == "<" for c in P.constraints)
    rows = []
    for c in P.constraints:
        coeffs = list(c.normal)
        if strict:
            coeffs.append(1 if c.rel == "<" else 0)
        rows.append((coeffs, "=" if c.rel == "=" else "<=", c.bound))
    free = range(n)
    if not strict:
        res = lp.solve(n, rows, free=free)
        return res.x if res.feasible else None
    rows.append(([0] * n + [1], "<=", 1))
    res = lp.solve(n + 1, rows, objective=[0] * n + [1], free=free)
    if not res.feasible or res.value <= 0:
        return None
    return res.x[:n]


def supporting_functional(whole: Sequence[Sequence], C: Sequence[Sequence]):
    """``(w, c)`` with ``w.v = c`` on ``C`` and ``w.v <= c - 1`` on the rest, or ``None``.

    The witness exists exactly when ``conv(C)`` is a face of ``conv(whole)``
    cut out by a hyperplane missing every other point of ``whole``.
    """
    whole = [tuple(_frac(x) for x in v) for v in whole]
    C = {tuple(_frac(x) for x in v) for v in C}
    n = len(whole[0]) if whole else 0
    if not C:
        return tuple([Fraction(0)] * n), Fraction(1)
    if C >= set(whole):
        return tuple([Fraction(0)] * n), Fraction(0)
    rows = []
    for v in whole:
        rows.append((list(v) + [-1], "=" if v in C else "<=", 0 if v in C else -1))
    res = lp.solve(n + 1, rows, free=range(n + 1))
    if not res.feasible:
        return None
    return res.x[:n], res.x[n]


def separating_functional(P: Sequence[Sequence], Q: Sequence[Sequence], common: Sequence[Sequence]):
    """``(w, c)`` with ``w = c`` on ``common``, ``<= c-1`` on the rest of ``P``
    and ``>= c+1`` on the rest of ``Q``; ``None`` if no such functional exists.

    Its existence certifies ``conv P  &  conv Q = conv(common)`` and that this
    set is a face of both (empty ``common`` means strict separation).
    """
    P = [tuple(_frac(x) for x in v) for v in P]
    Q = [tuple(_frac(x) for x in v) for v in Q]
    common = {tuple(_frac(x) for x in v) for v in common}
    n = len((P or Q)[0])
    rows = []
    for v in common:
        rows.append((list(v) + [-1], "=", 0))
    for v in P:
        if v not in common:
            rows.append((list(v) + [-1], "<=", -1))
    for v in Q:
        if v not in common:
            rows.append((list(v) + [-1], ">=", 1))
    res = lp.solve(n + 1, rows, free=range(n + 1))
    if not res.feasible:
        return None
    return res.x[:n], res.x[n]


def vpolytopes_intersect(P: VPolytope, Q: VPolytope) -> tuple[Fraction, ...] | None:
    """A common point of ``conv P`` and ``conv Q`` (convex-combination LP), or ``None``."""
    if P.is_empty or Q.is_empty:
        return None
    p, q = len(P), len(Q)
    n = P.n
    rows = [([1] * p + [0] * q, "=", 1), ([0] * p + [1] * q, "=", 1)]
    for i in range(n):
        rows.append(([v[i] for v in P.vertices] + [-u[i] for u in Q.vertices], "=", 0))
    res = lp.solve(p + q, rows)
    if not res.feasible:
        return None
    lam = res.x[:p]
    return tuple(sum((l * v[i] for l, v in zip(lam, P.vertices)), Fraction(0)) for i in range(n))


# ---------------------------------------------------------------------------
# face lattices


def affine_dimension(P: VPolytope) -> int:
    if P.is_empty:
        raise EmptyPolytope("affine dimension of the empty polytope")
    return _chart(P.vertices)[0]


def _guard(P: VPolytope, d: int):
    if len(P) > MAX_VERTICES or d > MAX_DIM:
        raise ScaleExceeded(
            f"{len(P)} points in dimension {d}; limits are {MAX_VERTICES} points, dimension {MAX_DIM}")


def _facet_sets(points: list[tuple[int, ...]]) -> list[int]:
    """Double description on ``{(b, a) : b - a.p >= 0 for all p}``.

    ``points`` are integer and affinely span their space (dimension >= 1).
    Extreme rays of that cone are the facet inequalities; each is returned
    as a bitmask of the points it is tight on.
    """
    d = len(points[0])
    G = [(1,) + tuple(-x for x in p) for p in points]
    init = _independent_rows(G)
    assert len(init) == d + 1
    G0 = [[Fraction(x) for x in G[i]] for i in init]
    inv = _inverse(G0)
    rays = []
    for j in range(d + 1):
        col = [inv[i][j] for i in range(d + 1)]
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in col), 1)
        rays.append(_primitive(tuple(int(c * den) for c in col)))
    zero = []
    for r in rays:
        z = 0
        for i in init:
            if _dot(G[i], r) == 0:
                z |= 1 << i
        zero.append(z)

    for k in range(len(G)):
        if k in init:
            continue
        g = G[k]
        bit = 1 << k
        vals = [_dot(g, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = []
        new_zero = []
        for p in pos:
            for q in neg:
                common = zero[p] & zero[q]
                if common.bit_count() < d - 1:
                    continue
                if any(t != p and t != q and zero[t] & common == common for t in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                new_rays.append(_primitive(tuple(vp * a - vq * b for a, b in zip(rays[q], rays[p]))))
                new_zero.append(common | bit)
        zer_set = set(zer)
        keep = pos + zer
        rays = [rays[i] for i in keep] + new_rays
        zero = [zero[i] | (bit if i in zer_set else 0) for i in keep] + new_zero
    return zero


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def enumerate_faces(P: VPolytope) -> FaceLattice:
    """Complete face lattice of ``conv P`` including the empty face and ``P``."""
    if P.is_empty:
        raise EmptyPolytope("no faces to enumerate")
    pts = P.vertices
    d, cols = _chart(pts)
    _guard(P, d)
    everything = frozenset(range(len(pts)))
    if d == 0:
        return FaceLattice(pts, ((frozenset(), -1), (everything, 0)))
    proj = _integerize([tuple(p[c] for c in cols) for p in pts])
    facet_masks = _facet_sets(proj)
    facets = {frozenset(i for i in range(len(pts)) if m >> i & 1) for m in facet_masks}

    found = {everything} | facets
    frontier = list(facets)
    while frontier:
        nxt = []
        for f in frontier:
            for g in facets:
                h = f & g
                if h not in found:
                    found.add(h)
                    nxt.append(h)
        frontier = nxt
    found.add(frozenset())

    def face_dim(f):
        if not f:
            return -1
        return _chart([proj[i] for i in sorted(f)])[0]

    faces = sorted(((f, face_dim(f)) for f in found), key=lambda t: (t[1], sorted(t[0])))
    return FaceLattice(pts, tuple(faces))


# ---------------------------------------------------------------------------
# volume and lattice points


def pulling_triangulation(P: VPolytope, lattice: FaceLattice | None = None) -> list[tuple[int, ...]]:
    """Simplices (point-index tuples) of the pulling triangulation.

    Every face is triangulated by coning its lexicographically least point
    over the triangulations of its facets that avoid that point.
    """
    lattice = lattice or enumerate_faces(P)
    pts = P.vertices
    by_dim: dict[int, list[frozenset]] = {}
    for f, k in lattice.faces:
        by_dim.setdefault(k, []).append(f)
    memo: dict[frozenset, list[tuple[int, ...]]] = {}

    def tri(face: frozenset, k: int):
        if face in memo:
            return memo[face]
        if k == 0:
            out = [(min(face, key=lambda i: pts[i]),)]
        else:
            apex = min(face, key=lambda i: pts[i])
            out = []
            for g in by_dim.get(k - 1, []):
                if g < face and apex not in g:
                    out.extend((apex,) + s for s in tri(g, k - 1))
        memo[face] = out
        return out

    whole, d = lattice.faces[-1]
    return tri(whole, d)


def _lattice_index(points: list[tuple[int, ...]], d: int, cols: list[int]) -> Fraction:
    """``|det|`` on ``cols`` of a basis of the saturated lattice of the affine hull."""
    diffs = _differences(points)
    idx = _independent_rows(diffs)
    B = [diffs[i] for i in idx]
    minors = [abs(_det([[row[c] for c in cs] for row in B]))
              for cs in itertools.combinations(range(len(points[0])), d)]
    g = reduce(gcd, (int(m) for m in minors), 0)
    return abs(_det([[row[c] for c in cols] for row in B])) / g


def normalized_volume(P: VPolytope, lattice: FaceLattice | None = None) -> Fraction:
    """Volume in units of a unimodular simplex of the affine lattice of ``P``."""
    if P.is_empty:
        raise EmptyPolytope("volume of the empty polytope")
    if any(x.denominator != 1 for v in P.vertices for x in v):
        raise NonLatticeVertices("normalized volume needs lattice vertices")
    pts = [tuple(int(x) for x in v) for v in P.vertices]
    d, cols = _chart(pts)
    _guard(P, d)
    if d == 0:
        return Fraction(1)
    unit = _lattice_index(pts, d, cols)
    total = Fraction(0)
    for simplex in pulling_triangulation(P, lattice):
        base = pts[simplex[0]]
        edges = [[pts[i][c] - base[c] for c in cols] for i in simplex[1:]]
        vol = abs(_det(edges)) / unit
        if vol.denominator != 1:
            raise InternalDisagreement(f"simplex {simplex} has non-integral volume {vol}")
        total += vol
    return total


def simplex_volumes(P: VPolytope) -> list[Fraction]:
    """Normalized volume of each simplex of the pulling triangulation."""
    pts = [tuple(int(x) for x in v) for v in P.vertices]
    d, cols = _chart(pts)
    unit = _lattice_index(pts, d, cols)
    out = []
    for simplex in pulling_triangulation(P):
        base = pts[simplex[0]]
        out.append(abs(_det([[pts[i][c] - base[c] for c in cols] for i in simplex[1:]])) / unit)
    return out


def count_lattice_points(M: Matroid, t: int) -> int:
    """``|t Q(M) & Z^n|``: integer points of the box ``[0,t]^n`` with coordinate
    sum ``t r`` that satisfy every row of the scaled inequality description."""
    H = matroid_polytope_h(M).scaled(t)
    rows = [(tuple(int(a) for a in c.normal), int(c.bound), c.rel) for c in H.constraints]
    count = 0
    for x in _compositions(t * M.r, M.n, t):
        for normal, bound, rel in rows:
            lhs = _dot(normal, x)
            if lhs > bound or (rel == "=" and lhs != bound):
                break
        else:
            count += 1
    return count


def _compositions(total: int, parts: int, cap: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = max(0, total - cap * (parts - 1))
    for first in range(lo, min(cap, total) + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def _interpolate(ys: list[int]) -> UniPoly:
    """Polynomial through ``(t, ys[t])`` for ``t = 0..len(ys)-1`` (Lagrange)."""
    n = len(ys)
    coeffs = [Fraction(0)] * n
    for i, y in enumerate(ys):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= j * basis[k + 1]
            denom *= i - j
        for k, b in enumerate(basis):
            coeffs[k] += y * b / denom
    return UniPoly(coeffs)


def ehrhart_polynomial(M: Matroid) -> UniPoly:
    """Ehrhart polynomial of ``Q(M)`` by counting dilates ``t = 0..d`` and interpolating."""
    if M.is_empty:
        raise EmptyMatroid("the empty matroid has no polytope")
    Q = matroid_polytope_vertices(M)
    d = affine_dimension(Q)
    _guard(Q, d)
    return _interpolate([count_lattice_points(M, t) for t in range(d + 1)])
