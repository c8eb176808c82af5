"""Named subdivisions, activity tables and the rank-function syzygy.

These are the concrete objects the command line reproduces: the octahedron
split into two square pyramids, the three-cell subdivision of U(3,6) and its
``U(a, ab)`` generalization, and twelve rank-3-or-less matroids on four
elements whose rank functions satisfy a linear relation that Derksen's and
the quasi-symmetric invariants do not.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalDisagreement, InvalidParameters
from .formal import is_zero
from .geometry import format_rational
from .matroid import Matroid, from_mask, matroid_from_bases, relabel, schubert, uniform
from .subdivision import (
    Subdivision,
    crosscut_all,
    face_poset,
    interior_faces,
    intersection_lattice,
    topology_failures,
    valuation_check,
)
from .valuations import (
    basis_count,
    constant,
    ehrhart,
    f_activities,
    f_rank,
    full_dimensional_volume,
    g_derksen,
    h_flags,
    qs_bjr,
    tutte,
    volume,
)


def octahedron_subdivision() -> Subdivision:
    """U(2,4) cut along the square ``{13,14,23,24}`` into two pyramids."""
    return Subdivision(uniform(2, 4), (
        matroid_from_bases(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]),
        matroid_from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]),
    ))


def generate_u_a_ab(a: int, b: int) -> Subdivision:
    """``U(a, ab)`` split into the ``a`` images of ``SM_ab(b, 2b, ..., ab)``
    under powers of the cyclic shift ``i -> i + b (mod ab)``."""
    if a < 1 or b < 1:
        raise InvalidParameters("a and b must be positive")
    n = a * b
    first = schubert(n, [b * k for k in range(1, a + 1)])
    shift = [(i + b - 1) % n + 1 for i in range(1, n + 1)]
    cells = [first]
    for _ in range(a - 1):
        cells.append(relabel(cells[-1], shift))
    return Subdivision(uniform(a, n), tuple(cells))


def u36_subdivision() -> Subdivision:
    """``SM_6(2,4,6)`` and its images under ``345612`` subdividing U(3,6)."""
    return generate_u_a_ab(3, 2)


# ---------------------------------------------------------------------------
# valuations by name


def valuation_table(dim: int) -> dict:
    """Name -> matroid function, with volume measured in dimension ``dim``."""
    return {
        "rank": f_rank,
        "activities": f_activities,
        "tutte": tutte,
        "flags": h_flags,
        "derksen": g_derksen,
        "qs": qs_bjr,
        "volume": lambda M: full_dimensional_volume(M, dim),
        "ehrhart": ehrhart,
        "count": basis_count,
        "const": constant,
    }


VALUATION_NAMES = ("rank", "activities", "tutte", "flags", "derksen", "qs",
                   "volume", "ehrhart", "count", "const")


def value_to_json(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    return value.to_json()


def single_value(M: Matroid, name: str):
    """Value of one named function on one matroid (volume in its own dimension)."""
    if name == "volume":
        return volume(M)
    return valuation_table(0)[name](M)


# ---------------------------------------------------------------------------
# activity tables


def _label(A) -> str:
    return "M" + "".join(str(a) for a in sorted(A))


def _fmt_set(s) -> str:
    return "".join(str(x) for x in s) if s else "-"


def activity_table(S: Subdivision) -> tuple[list[str], list[list[str]]]:
    """Header and rows: one row per ambient basis, an ``(E, I)`` column pair per
    ``M_A`` with ``A`` in bitmask order; blank where the basis is missing."""
    lattice = intersection_lattice(S)
    m = len(S.cells)
    columns = [frozenset(from_mask(k)) for k in range(1 << m)]
    records = {}
    for A in columns:
        MA = lattice.get(A)
        records[A] = {} if MA is None else {r.basis: r for r, _ in f_activities(MA)}
    header = ["B"]
    for A in columns:
        header += [f"E({_label(A)})", f"I({_label(A)})"]
    rows = []
    for B in S.ambient.bases:
        row = ["".join(map(str, B))]
        for A in columns:
            rec = records[A].get(B)
            row += ["", ""] if rec is None else [_fmt_set(rec.external), _fmt_set(rec.internal)]
        rows.append(row)
    return header, rows


def activity_table_tsv(S: Subdivision) -> str:
    header, rows = activity_table(S)
    return "".join("\t".join(r) + "\n" for r in [header] + rows)


def parity_violations(S: Subdivision) -> list[dict]:
    """Rows where some ``(E, I)`` occurs a different number of times in
    ``M_A`` with ``|A|`` even than with ``|A|`` odd."""
    lattice = intersection_lattice(S)
    counts: dict = {}
    for A, MA in lattice.entries.items():
        for rec, _ in f_activities(MA):
            key = (rec.basis, rec.external, rec.internal)
            even, odd = counts.get(key, (0, 0))
            counts[key] = (even + 1, odd) if len(A) % 2 == 0 else (even, odd + 1)
    return [{"basis": list(B), "E": list(E), "I": list(I), "even": ev, "odd": od}
            for (B, E, I), (ev, od) in sorted(counts.items()) if ev != od]


# ---------------------------------------------------------------------------
# reports


def subdivision_report(S: Subdivision, names=VALUATION_NAMES, topology: bool = True) -> dict:
    """Validation plus both identity forms for every named valuation."""
    if S.report is None:
        S = S.validate()
    report = {"validation": S.report.to_json()}
    if not S.validated:
        report["verified"] = False
        return report
    dim = S.dim
    table = valuation_table(dim)
    lattice = intersection_lattice(S)
    checks = {}
    for name in names:
        c = valuation_check(table[name], S)
        checks[name] = {"alternating_sum_zero": c["alternating_ok"],
                        "interior_face_sum_equals_f": c["interior_ok"]}
    report["dim"] = dim
    report["valuations"] = checks
    report["lattice"] = [
        {"A": "".join(map(str, sorted(A))) or "-", "bases": len(MA),
         "volume": format_rational(full_dimensional_volume(MA, dim))}
        for A, MA in lattice]
    report["interior_faces"] = [
        {"A": "".join(map(str, F.witness)), "bases": len(F.matroid), "dim": F.dim}
        for F in interior_faces(S)]
    ok = all(v["alternating_sum_zero"] and v["interior_face_sum_equals_f"] for v in checks.values())
    if topology:
        fp = face_poset(S)
        failures = topology_failures(S, fp)
        crosscut = crosscut_all(S, fp)
        report["topology"] = {"faces": len(fp.faces()), "interior": len(fp.interior()),
                              "mobius_bottom_top": fp.poset.mobius("0^", "1^"),
                              "topology_check": not failures, "crosscut_check": crosscut}
        ok = ok and not failures and crosscut
    report["verified"] = ok
    return report


def interior_face_tsv(S: Subdivision) -> str:
    lines = ["A\tbases-count\tdim\n"]
    for F in interior_faces(S):
        lines.append(f"{''.join(map(str, F.witness))}\t{len(F.matroid)}\t{F.dim}\n")
    return "".join(lines)


# ---------------------------------------------------------------------------
# rank-function syzygy on four elements

# rank values in bitmask order: {}, 1, 2, 12, 3, 13, 23, 123, 4, 14, 24, 124, 34, 134, 234, 1234
TABLE2_RANKS = (
    (0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1),
    (0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 1, 2),
    (0, 1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2),
    (0, 0, 1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2),
    (0, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2),
    (0, 0, 1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 2, 2, 3, 3),
    (0, 1, 1, 2, 1, 2, 2, 3, 1, 1, 2, 2, 2, 2, 3, 3),
    (0, 1, 1, 2, 1, 1, 2, 2, 1, 2, 2, 3, 2, 2, 3, 3),
    (0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 2, 3, 3),
)
TABLE2_COEFFS = (-1, 1, -1, 1, 1, -1, -1, 1, 2, -2, -2, 2)


def matroid_from_rank_row(n: int, ranks) -> Matroid:
    """Recover bases (``|B| = r([n])`` and ``r(B) = |B|``), then re-derive every
    rank value from them and fail loudly on any mismatch."""
    r = ranks[(1 << n) - 1]
    bases = [from_mask(m) for m in range(1 << n)
             if m.bit_count() == r and ranks[m] == r]
    M = matroid_from_bases(n, bases)
    for m in range(1 << n):
        if M.rank_of_mask(m) != ranks[m]:
            raise InternalDisagreement(
                f"rank of {from_mask(m)} is {M.rank_of_mask(m)} but the row says {ranks[m]}")
    return M


def table2_matroids() -> list[Matroid]:
    return [matroid_from_rank_row(4, row) for row in TABLE2_RANKS]


def linear_combination(f, matroids, coeffs):
    total = 0
    for M, c in zip(matroids, coeffs):
        total = total + c * f(M)
    return total


def table2_report() -> dict:
    matroids = table2_matroids()
    sums = {name: linear_combination(f, matroids, TABLE2_COEFFS)
            for name, f in (("F", f_rank), ("G", g_derksen), ("QS", qs_bjr), ("H", h_flags))}
    rows_ok = all(tuple(M.rank_of_mask(m) for m in range(16)) == row
                  for M, row in zip(matroids, TABLE2_RANKS))
    out = {
        "rank_rows_match": rows_ok,
        "matroids": [M.to_json() for M in matroids],
        "coefficients": list(TABLE2_COEFFS),
        "F_sum_zero": is_zero(sums["F"]),
        "G_sum_nonzero": not is_zero(sums["G"]),
        "QS_sum_nonzero": not is_zero(sums["QS"]),
        "H_sum_nonzero": not is_zero(sums["H"]),
        "G_sum": sums["G"].to_json(),
        "QS_sum": sums["QS"].to_json(),
    }
    out["verified"] = (rows_ok and out["F_sum_zero"] and out["G_sum_nonzero"]
                       and out["QS_sum_nonzero"] and out["H_sum_nonzero"])
    return out
