"""Exact two-phase simplex over the rationals.

Small dense tableau with Bland's rule; intended for the few-dozen-row
systems that arise here, where exactness matters more than speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


def _pivot(T, basis, r, c):
    row = T[r]
    inv = 1 / row[c]
    if inv != 1:
        T[r] = row = [v * inv for v in row]
    nz = [(j, v) for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j, v in nz:
                    other[j] -= f * v
    basis[r] = c


def _run(T, basis, cost, allowed):
    """Minimize ``cost`` over the tableau; returns False if unbounded."""
    rhs = len(T[0]) - 1
    while True:
        # reduced costs d_j = c_j - c_B . column_j
        enter = None
        for j in allowed:
            d = cost[j]
            for i, b in enumerate(basis):
                cb = cost[b]
                if cb:
                    d -= cb * T[i][j]
            if d < 0:
                enter = j
                break
        if enter is None:
            return True
        leave = None
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[rhs] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(T, basis, leave, enter)


def solve(num_vars: int,
          constraints: Sequence[tuple[Sequence, str, object]],
          objective: Sequence | None = None,
          free: Sequence[int] = ()) -> LPResult:
    """Maximize ``objective . x`` subject to ``constraints``.

    Each constraint is ``(coefficients, rel, rhs)`` with ``rel`` one of
    ``"<="``, ``">="``, ``"="``.  Variables are nonnegative unless listed in
    ``free``.  With ``objective=None`` only feasibility is decided.
    """
    free = set(free)
    # column layout: original vars, then negative parts of free vars
    neg_col = {v: num_vars + k for k, v in enumerate(sorted(free))}
    ncols = num_vars + len(neg_col)

    rows = []
    kinds = []
    for coeffs, rel, rhs in constraints:
        row = [Fraction(0)] * ncols
        for j, a in enumerate(coeffs):
            if a:
                a = Fraction(a)
                row[j] = a
                if j in neg_col:
                    row[neg_col[j]] = -a
        rhs = Fraction(rhs)
        if rel == ">=":
            row = [-a for a in row]
            rhs = -rhs
            rel = "<="
        elif rel not in ("<=", "="):
            raise ValueError(f"unknown relation {rel!r}")
        rows.append((row, rhs))
        kinds.append(rel)

    m = len(rows)
    n_slack = kinds.count("<=")
    first_art = ncols + n_slack
    width = first_art + m + 1
    T = []
    basis = []
    slack = ncols
    art = first_art
    for (row, rhs), rel in zip(rows, kinds):
        full = row + [Fraction(0)] * (width - ncols)
        if rel == "<=":
            full[slack] = Fraction(1)
        if rhs < 0:
            full = [-v for v in full]
            rhs = -rhs
        full[-1] = rhs
        if rel == "<=" and full[slack] == 1:
            basis.append(slack)
        else:
            full[art] = Fraction(1)
            basis.append(art)
            art += 1
        if rel == "<=":
            slack += 1
        T.append(full)

    n_art = art - first_art
    # drop unused artificial columns
    keep = first_art + n_art
    if keep < width - 1:
        T = [row[:keep] + [row[-1]] for row in T]
    width = keep + 1
    allowed = list(range(keep))

    if n_art:
        cost1 = [Fraction(0)] * first_art + [Fraction(1)] * n_art
        _run(T, basis, cost1, allowed)
        phase1 = sum((T[i][-1] for i, b in enumerate(basis) if b >= first_art), Fraction(0))
        if phase1 > 0:
            return LPResult(INFEASIBLE)
        # drive remaining artificials out of the basis
        i = 0
        while i < len(T):
            if basis[i] >= first_art:
                j = next((j for j in range(first_art) if T[i][j] != 0), None)
                if j is None:
                    del T[i]
                    del basis[i]
                    continue
                _pivot(T, basis, i, j)
            i += 1
        T = [row[:first_art] + [row[-1]] for row in T]
    allowed = list(range(first_art))

    if objective is not None:
        cost = [Fraction(0)] * first_art
        for j, a in enumerate(objective):
            if a:
                cost[j] = -Fraction(a)
                if j in neg_col:
                    cost[neg_col[j]] = Fraction(a)
        if not _run(T, basis, cost, allowed):
            return LPResult(UNBOUNDED)

    values = [Fraction(0)] * first_art
    for i, b in enumerate(basis):
        values[b] = T[i][-1]
    x = [values[j] - (values[neg_col[j]] if j in neg_col else 0) for j in range(num_vars)]
    value = None
    if objective is not None:
        value = sum((Fraction(a) * xi for a, xi in zip(objective, x)), Fraction(0))
    return LPResult(OPTIMAL, value, tuple(x))
