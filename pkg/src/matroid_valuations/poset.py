"""Finite posets with Möbius functions, joins and crosscut sums.

Elements are indexed ``0..size-1``; up-sets and down-sets are kept as integer
bitmasks, which keeps interval queries cheap for posets of a few thousand
elements.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Callable, Hashable, Sequence

from .errors import NotALattice, NotComparable


class Poset:
    def __init__(self, elements: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        n = len(self.elements)
        up = [0] * n
        down = [0] * n
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                if i == j or leq(a, b):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self._up = up
        self._down = down

    @classmethod
    def from_masks(cls, elements, up: list[int]) -> "Poset":
        self = cls.__new__(cls)
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._up = list(up)
        down = [0] * len(up)
        for i, m in enumerate(up):
            for j in _bits(m):
                down[j] |= 1 << i
        self._down = down
        return self

    def __len__(self):
        return len(self.elements)

    def leq(self, x, y) -> bool:
        return bool(self._up[self.index[x]] >> self.index[y] & 1)

    def dual(self) -> "Poset":
        """The same set with the order turned upside down."""
        return Poset.from_masks(self.elements, self._down)

    def interval(self, x, y) -> list:
        i, j = self.index[x], self.index[y]
        return [self.elements[k] for k in _bits(self._up[i] & self._down[j])]

    @cached_property
    def _linear_extension(self) -> list[int]:
        return sorted(range(len(self)), key=lambda i: self._down[i].bit_count())

    @cached_property
    def _mobius_rows(self) -> list[dict[int, int]]:
        """``rows[i][j] = mu(i, j)`` from ``sum_{i <= a <= j} mu(i, a) = 0``."""
        order = self._linear_extension
        rows = []
        for i in range(len(self)):
            up_i = self._up[i]
            row = {i: 1}
            for j in order:
                if j == i or not up_i >> j & 1:
                    continue
                between = up_i & self._down[j] & ~(1 << j)
                row[j] = -sum(row[a] for a in _bits(between))
            rows.append(row)
        return rows

    def mobius(self, x, y) -> int:
        i, j = self.index[x], self.index[y]
        if not self._up[i] >> j & 1:
            raise NotComparable(f"{x!r} is not below {y!r}")
        return self._mobius_rows[i][j]

    def mobius_dual(self, x, y) -> int:
        """Möbius value from the other recursion ``sum_{x <= a <= y} mu(a, y) = 0``."""
        i, j = self.index[x], self.index[y]
        if not self._up[i] >> j & 1:
            raise NotComparable(f"{x!r} is not below {y!r}")
        memo = {j: 1}
        order = sorted(_bits(self._up[i] & self._down[j]),
                       key=lambda k: -self._down[k].bit_count())
        for a in order:
            if a == j:
                continue
            between = self._up[a] & self._down[j] & ~(1 << a)
            memo[a] = -sum(memo[b] for b in _bits(between))
        return memo[i]

    def minimal(self) -> list:
        return [e for i, e in enumerate(self.elements) if self._down[i] == 1 << i]

    def maximal(self) -> list:
        return [e for i, e in enumerate(self.elements) if self._up[i] == 1 << i]

    def bottom(self):
        mins = self.minimal()
        if len(mins) != 1:
            raise NotALattice("no unique minimum")
        return mins[0]

    def top(self):
        maxs = self.maximal()
        if len(maxs) != 1:
            raise NotALattice("no unique maximum")
        return maxs[0]

    def atoms(self) -> list:
        b = self.index[self.bottom()]
        out = []
        for k in _bits(self._up[b] & ~(1 << b)):
            if self._down[k] == (1 << k) | (1 << b):
                out.append(self.elements[k])
        return out

    def covers(self) -> list[tuple]:
        out = []
        for i in range(len(self)):
            for j in _bits(self._up[i] & ~(1 << i)):
                if self._up[i] & self._down[j] == (1 << i) | (1 << j):
                    out.append((self.elements[i], self.elements[j]))
        return out

    def join(self, elems) -> object:
        elems = list(elems)
        if not elems:
            return self.bottom()
        common = (1 << len(self)) - 1
        for e in elems:
            common &= self._up[self.index[e]]
        least = [k for k in _bits(common) if self._up[k] & common == common]
        if len(least) != 1:
            raise NotALattice(f"no join for {elems!r}")
        return self.elements[least[0]]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def crosscut_check(L: Poset, x, max_atoms: int = 20) -> bool:
    """``mu(0, x)`` equals the signed count of atom sets whose join is ``x``."""
    atoms = L.atoms()
    if len(atoms) > max_atoms:
        raise ValueError(f"{len(atoms)} atoms exceed the brute-force limit {max_atoms}")
    total = 0
    for k in range(len(atoms) + 1):
        for B in itertools.combinations(atoms, k):
            if L.join(B) == x:
                total += (-1) ** k
    return L.mobius(L.bottom(), x) == total


def boolean_lattice(k: int) -> Poset:
    elems = [frozenset(s) for r in range(k + 1) for s in itertools.combinations(range(k), r)]
    return Poset(elems, lambda a, b: a <= b)


def chain(k: int) -> Poset:
    return Poset(list(range(k + 1)), lambda a, b: a <= b)
