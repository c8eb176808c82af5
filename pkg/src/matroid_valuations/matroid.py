"""Matroids on the ground set ``{1..n}`` given by their bases.

Subsets are handled as sorted tuples at the API boundary and as bitmasks
internally (bit ``i-1`` stands for element ``i``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CardinalityMismatch,
    ElementOutOfRange,
    EmptyMatroid,
    ExchangeViolation,
    InvalidParameters,
    InvalidPermutation,
    NotABasis,
)

Subset = tuple  # sorted tuple of 1-based elements


def to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for i in subset:
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: int) -> Subset:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def all_subsets(n: int) -> list[Subset]:
    """All subsets of ``{1..n}`` in bitmask order (0, {1}, {2}, {1,2}, {3}, ...)."""
    return [from_mask(m) for m in range(1 << n)]


@dataclass(frozen=True, order=True)
class SubsetRankPair:
    subset: Subset
    rank: int

    def __post_init__(self):
        if list(self.subset) != sorted(set(self.subset)):
            raise InvalidParameters(f"subset {self.subset} must be sorted without repeats")
        if not 0 <= self.rank <= len(self.subset):
            raise InvalidParameters(f"rank {self.rank} out of range for {self.subset}")


@dataclass(frozen=True, order=True)
class ActivityRecord:
    basis: Subset
    external: Subset
    internal: Subset

    def __post_init__(self):
        if set(self.external) & set(self.basis):
            raise InvalidParameters("external activities must avoid the basis")
        if not set(self.internal) <= set(self.basis):
            raise InvalidParameters("internal activities must lie in the basis")


class Matroid:
    """A matroid on ``{1..n}`` stored as a canonically ordered tuple of bases.

    Construct through :func:`matroid_from_bases`, :func:`uniform`,
    :func:`schubert` or :func:`relabel`; the constructor itself trusts its
    input.  The empty matroid (no bases) is allowed and has ``r = None``.
    """

    __slots__ = ("n", "bases", "_masks", "__dict__")

    def __init__(self, n: int, bases: Iterable[Sequence[int]]):
        self.n = n
        self.bases: tuple[Subset, ...] = tuple(sorted({tuple(sorted(b)) for b in bases}))
        self._masks = frozenset(to_mask(b) for b in self.bases)

    @property
    def r(self) -> int | None:
        return len(self.bases[0]) if self.bases else None

    @property
    def is_empty(self) -> bool:
        return not self.bases

    @property
    def basis_masks(self) -> frozenset[int]:
        return self._masks

    def is_basis(self, subset: Iterable[int]) -> bool:
        return to_mask(subset) in self._masks

    @cached_property
    def _rank_table(self) -> tuple[int, ...]:
        if not self.bases:
            raise EmptyMatroid("the empty matroid has no rank function")
        masks = tuple(self._masks)
        return tuple(max((m & b).bit_count() for b in masks) for m in range(1 << self.n))

    def rank_of_mask(self, mask: int) -> int:
        return self._rank_table[mask]

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __len__(self):
        return len(self.bases)

    def __repr__(self):
        body = ",".join("".join(map(str, b)) if self.n < 10 else str(list(b)) for b in self.bases)
        return f"Matroid(n={self.n}, bases={{{body}}})"

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [list(b) for b in self.bases]}

    @classmethod
    def from_json(cls, data: dict) -> "Matroid":
        return matroid_from_bases(data["n"], data["bases"])


def _exchange_witness(masks: frozenset[int]):
    """Return ``(B1, B2, b1)`` violating basis exchange, or ``None``."""
    for b1, b2 in itertools.product(masks, repeat=2):
        only1 = b1 & ~b2
        only2 = b2 & ~b1
        x = only1
        while x:
            low = x & -x
            x ^= low
            rest = b1 ^ low
            y = only2
            ok = False
            while y:
                cand = y & -y
                y ^= cand
                if rest | cand in masks:
                    ok = True
                    break
            if not ok:
                return b1, b2, low.bit_length()
    return None


def matroid_from_bases(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Validate a basis collection and build the matroid.

    >>> matroid_from_bases(4, [[1, 2], [3, 4]])
    Traceback (most recent call last):
    ...
    matroid_valuations.errors.ExchangeViolation: exchange fails for B1=[1, 2], B2=[3, 4], b1=1: no b2 in B2-B1 makes B1-b1+b2 a basis
    """
    if n < 1:
        raise InvalidParameters("ground set size must be positive")
    canon = []
    for b in bases:
        b = tuple(sorted(set(b)))
        for i in b:
            if not isinstance(i, int) or not 1 <= i <= n:
                raise ElementOutOfRange(f"element {i!r} not in 1..{n}")
        canon.append(b)
    sizes = {len(b) for b in canon}
    if len(sizes) > 1:
        raise CardinalityMismatch(f"bases have sizes {sorted(sizes)}")
    masks = frozenset(to_mask(b) for b in canon)
    bad = _exchange_witness(masks)
    if bad is not None:
        b1, b2, e = bad
        raise ExchangeViolation(from_mask(b1), from_mask(b2), e)
    return Matroid(n, canon)


def is_matroid_basis_collection(masks: Iterable[int]) -> bool:
    """Exchange-axiom test on a collection of equal-size bitmasks."""
    return _exchange_witness(frozenset(masks)) is None


def uniform(k: int, n: int) -> Matroid:
    if not 0 <= k <= n or n < 1:
        raise InvalidParameters(f"U({k},{n}) needs 0 <= k <= n, n >= 1")
    return Matroid(n, itertools.combinations(range(1, n + 1), k))


def schubert(n: int, s: Sequence[int]) -> Matroid:
    """Schubert matroid: bases ``a_1 < ... < a_r`` with ``a_i <= s_i``."""
    s = list(s)
    if any(b <= a for a, b in zip(s, s[1:])) or (s and (s[0] < 1 or s[-1] > n)):
        raise InvalidParameters(f"need 1 <= s1 < ... < sr <= n, got {s} with n={n}")
    bases = [c for c in itertools.combinations(range(1, n + 1), len(s))
             if all(a <= bound for a, bound in zip(c, s))]
    return Matroid(n, bases)


def relabel(M: Matroid, sigma: Sequence[int]) -> Matroid:
    """Image of ``M`` under ``i -> sigma[i-1]``; ``sigma`` is one-line notation."""
    sigma = list(sigma)
    if sorted(sigma) != list(range(1, M.n + 1)):
        raise InvalidPermutation(f"{sigma} is not a permutation of 1..{M.n}")
    return Matroid(M.n, ([sigma[i - 1] for i in b] for b in M.bases))


def rank(M: Matroid, A: Iterable[int]) -> int:
    if M.is_empty:
        raise EmptyMatroid("rank of the empty matroid is undefined")
    A = tuple(A)
    for i in A:
        if not 1 <= i <= M.n:
            raise ElementOutOfRange(f"element {i} not in 1..{M.n}")
    return M.rank_of_mask(to_mask(A))


def activities(M: Matroid, B: Iterable[int]) -> ActivityRecord:
    B = tuple(sorted(B))
    bmask = to_mask(B)
    if bmask not in M.basis_masks:
        raise NotABasis(f"{B} is not a basis")
    outside = [i for i in range(1, M.n + 1) if i not in B]
    masks = M.basis_masks
    external = tuple(
        i for i in outside
        if all(i < j for j in B if (bmask ^ (1 << (j - 1)) | (1 << (i - 1))) in masks)
    )
    internal = tuple(
        i for i in B
        if all(i < j for j in outside if (bmask ^ (1 << (i - 1)) | (1 << (j - 1))) in masks)
    )
    return ActivityRecord(B, external, internal)


def adjacent_basis_pairs(M: Matroid) -> list[tuple[Subset, Subset]]:
    if M.is_empty:
        raise EmptyMatroid("the empty matroid has no bases")
    pairs = []
    for b1, b2 in itertools.combinations(M.bases, 2):
        if len(set(b1) - set(b2)) == 1:
            pairs.append((b1, b2))
    return pairs


def indicator(B: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(B)
    return tuple(1 if i in s else 0 for i in range(1, n + 1))


def gelfand_serganova_check(n: int, collection: Iterable[Iterable[int]]) -> bool:
    """True iff every edge of ``conv{e_B}`` is parallel to some ``e_i - e_j``.

    Works purely from the geometry (face enumeration of the point set), so it
    serves as an independent check of the exchange axiom.
    """
    from .geometry import VPolytope, enumerate_faces

    collection = sorted({tuple(sorted(b)) for b in collection})
    if len({len(b) for b in collection}) > 1:
        raise CardinalityMismatch("subsets must have equal cardinality")
    if len(collection) < 2:
        return True
    points = [indicator(b, n) for b in collection]
    lattice = enumerate_faces(VPolytope(points))
    for face, dim in lattice.faces:
        if dim != 1:
            continue
        i, j = sorted(face)
        diff = [a - b for a, b in zip(points[i], points[j])]
        if sorted(diff) != [-1] + [0] * (n - 2) + [1]:
            return False
    return True
