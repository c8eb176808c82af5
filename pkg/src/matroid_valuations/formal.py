"""Free abelian group elements and small exact polynomials.

All three value types here support ``+``, unary ``-``, multiplication by an
integer and :func:`is_zero`, which is everything the valuation engines need
from a group.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Any, Hashable, Iterable, Mapping

from .matroid import ActivityRecord, SubsetRankPair


class FormalSum:
    """Finite integer combination of hashable, mutually comparable keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def of(cls, keys: Iterable[Hashable]) -> "FormalSum":
        """Sum of the given keys, each with coefficient one (repeats add up)."""
        return cls((k, 1) for k in keys)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def support(self) -> list:
        return sorted(self._terms, key=sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def total(self) -> int:
        return sum(self._terms.values())

    def map_keys(self, fn) -> "FormalSum":
        """Push forward along ``fn``; coefficients of colliding images add."""
        return FormalSum((fn(k), c) for k, c in self._terms.items())

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return FormalSum(out)

    __radd__ = __add__

    def __neg__(self):
        return FormalSum({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return FormalSum({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda t: sort_key(t[0])))

    def __repr__(self):
        if not self._terms:
            return "FormalSum(0)"
        shown = " + ".join(f"{c}*{k!r}" for k, c in list(self)[:6])
        more = " + ..." if len(self._terms) > 6 else ""
        return f"FormalSum({shown}{more})"

    def to_json(self) -> list:
        return [{"key": encode_key(k), "coeff": c} for k, c in self]

    @classmethod
    def from_json(cls, data: list) -> "FormalSum":
        return cls((decode_key(item["key"]), int(item["coeff"])) for item in data)


def add(a: FormalSum, b: FormalSum) -> FormalSum:
    return a + b


def scale(a: FormalSum, c: int) -> FormalSum:
    return a * c


def sort_key(key: Any) -> tuple:
    """Total order on every key type, so mixed sums still iterate deterministically."""
    if isinstance(key, bool) or not isinstance(key, (int, SubsetRankPair, ActivityRecord, tuple)):
        raise TypeError(f"unsupported key {key!r}")
    if isinstance(key, int):
        return (0, key)
    if isinstance(key, SubsetRankPair):
        return (1, key.subset, key.rank)
    if isinstance(key, ActivityRecord):
        return (2, key.basis, key.external, key.internal)
    return (3, tuple(sort_key(k) for k in key))


def encode_key(key: Any):
    if isinstance(key, SubsetRankPair):
        return {"subset": list(key.subset), "rank": key.rank}
    if isinstance(key, ActivityRecord):
        return {"basis": list(key.basis), "external": list(key.external),
                "internal": list(key.internal)}
    if isinstance(key, tuple):
        return [encode_key(k) for k in key]
    if isinstance(key, int):
        return key
    raise TypeError(f"cannot serialize key {key!r}")


def decode_key(data: Any):
    if isinstance(data, dict):
        if "rank" in data:
            return SubsetRankPair(tuple(data["subset"]), data["rank"])
        return ActivityRecord(tuple(data["basis"]), tuple(data["external"]),
                              tuple(data["internal"]))
    if isinstance(data, list):
        return tuple(decode_key(d) for d in data)
    if isinstance(data, int):
        return data
    raise TypeError(f"cannot decode key {data!r}")


class Polynomial2:
    """Integer polynomial in ``x`` and ``y``; keys are ``(deg_x, deg_y)``."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[tuple[int, int], int] | Iterable = ()):
        acc: dict = {}
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        for k, c in items:
            acc[k] = acc.get(k, 0) + c
        self._c = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def shifted_power_product(cls, a: int, b: int) -> "Polynomial2":
        """Expansion of ``(x-1)^a (y-1)^b``."""
        return cls({(i, j): comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                    for i in range(a + 1) for j in range(b + 1)})

    @property
    def coefficients(self) -> dict:
        return dict(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x, y):
        return poly2_eval(self, x, y)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Polynomial2):
            return NotImplemented
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return Polynomial2(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial2({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return Polynomial2({k: c * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Polynomial2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for (i, j), c in sorted(self._c.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(p for p in (_power("x", i), _power("y", j)) if p)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {f"x^{i} y^{j}": c for (i, j), c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "Polynomial2":
        out = {}
        for name, c in data.items():
            xs, ys = name.split()
            out[(int(xs[2:]), int(ys[2:]))] = int(c)
        return cls(out)


def _power(var, e):
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def poly2_eval(p: Polynomial2, x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return sum((c * x ** i * y ** j for (i, j), c in p._c.items()), Fraction(0))


class UniPoly:
    """Univariate polynomial with rational coefficients, constant term first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [Fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        m = max(len(a), len(b))
        a = a + (Fraction(0),) * (m - len(a))
        b = b + (Fraction(0),) * (m - len(b))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return UniPoly(c * x for x in self.coefficients)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coefficients]})"

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    @classmethod
    def from_json(cls, data: list[str]) -> "UniPoly":
        return cls(Fraction(c) for c in data)


def is_zero(value) -> bool:
    """Zero test for any group value used by the engines (ints included)."""
    if isinstance(value, (int, Fraction)):
        return value == 0
    return value.is_zero()
