"""Exact slopes, fractional-linear maps and closed parameter intervals.

A *slope* is either a reduced :class:`fractions.Fraction`, the point at
infinity :data:`INF` (the slope 1/0), or :data:`EMPTY`, the marker for a
link component that carries no surface boundary.  Nothing in here ever
touches floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidInput, UndefinedValue, ZeroOverZero


class Special(enum.Enum):
    INF = "inf"
    EMPTY = "empty"
    # lower end of a parameter interval only; never a slope
    NEG_INF = "-inf"

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.value


INF = Special.INF
EMPTY = Special.EMPTY
NEG_INF = Special.NEG_INF

Slope = Union[Fraction, Special]


def frac_normalize(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator.

    >>> frac_normalize(6, -4)
    Fraction(-3, 2)
    """
    if num == 0 and den == 0:
        raise ZeroOverZero("0/0 is not a fraction")
    if den == 0:
        raise UndefinedValue(f"{num}/0 is the slope inf, not a fraction")
    return Fraction(num, den)


def make_slope(num: int, den: int) -> Slope:
    """Like :func:`frac_normalize` but maps n/0 to :data:`INF`."""
    if den == 0 and num != 0:
        return INF
    return frac_normalize(num, den)


def as_slope(value) -> Slope:
    if isinstance(value, Special):
        if value is NEG_INF:
            return INF
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a slope: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        from .grammar import parse_slope

        return parse_slope(value)
    raise InvalidInput(f"not a slope: {value!r}")


def is_finite(s: Slope) -> bool:
    return isinstance(s, Fraction)


def slope_str(s: Slope) -> str:
    if isinstance(s, Fraction):
        return f"{s.numerator}/{s.denominator}"
    return str(s)


def invert(s: Slope) -> Slope:
    """1/s with 1/0 = inf and 1/inf = 0."""
    if s is INF:
        return Fraction(0)
    if s is EMPTY:
        raise InvalidInput("empty slope has no inverse")
    if s == 0:
        return INF
    return 1 / s


@dataclass(frozen=True)
class Unique:
    t: Slope


class _All:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL"


ALL = _All()


@dataclass(frozen=True)
class MobiusMap:
    """The map t -> (a*t + b) / (c*t + d) on the extended rationals.

    A degenerate map (a*d == b*c) is a constant and is only used to encode
    constant coordinates.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for x in (self.a, self.b, self.c, self.d):
            if not isinstance(x, int) or isinstance(x, bool):
                raise InvalidInput(f"Mobius coefficients must be integers, got {x!r}")
        if self.c == 0 and self.d == 0:
            raise InvalidInput("Mobius map with zero denominator row")

    @classmethod
    def constant(cls, value: Fraction) -> "MobiusMap":
        value = Fraction(value)
        return cls(0, value.numerator, 0, value.denominator)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def nondegenerate(self) -> bool:
        return self.det != 0

    @property
    def is_constant(self) -> bool:
        return self.det == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise InvalidInput(f"{self} is not constant")
        if self.c != 0:
            return Fraction(self.a, self.c)
        return Fraction(self.b, self.d)

    def __call__(self, t: Slope) -> Slope:
        return mobius_eval(self, t)

    def inverse(self) -> "MobiusMap":
        if self.is_constant:
            raise InvalidInput(f"{self} is constant and has no inverse")
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, inner: "MobiusMap") -> "MobiusMap":
        """The map t -> self(inner(t))."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = inner.a, inner.b, inner.c, inner.d
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def same_map(self, other: "MobiusMap") -> bool:
        """Equality as maps: coefficient vectors proportional."""
        u = (self.a, self.b, self.c, self.d)
        v = (other.a, other.b, other.c, other.d)
        return all(u[i] * v[j] == u[j] * v[i] for i in range(4) for j in range(i + 1, 4))

    def __str__(self):
        return f"({self.a}t + {self.b})/({self.c}t + {self.d})"


def mobius_eval(m: MobiusMap, t: Slope) -> Slope:
    if t is EMPTY or t is NEG_INF:
        raise InvalidInput(f"cannot evaluate a Mobius map at {t}")
    if t is INF:
        if m.c != 0:
            return Fraction(m.a, m.c)
        if m.a != 0:
            return INF
        return Fraction(m.b, m.d)
    t = Fraction(t)
    num = m.a * t + m.b
    den = m.c * t + m.d
    if den == 0:
        if num == 0:
            raise UndefinedValue(f"{m} is 0/0 at t = {slope_str(t)}")
        return INF
    return num / den


def mobius_solve(m: MobiusMap, v: Slope):
    """All t with ``m(t) == v``: ``None``, :class:`Unique` or :data:`ALL`."""
    if v is EMPTY:
        return None
    if m.is_constant:
        return ALL if v == m.constant_value() else None
    return Unique(mobius_eval(m.inverse(), v))


@dataclass(frozen=True)
class ParamInterval:
    """Closed interval [lo, hi]; ``lo`` may be NEG_INF and ``hi`` may be INF."""

    lo: Union[Fraction, Special]
    hi: Union[Fraction, Special]

    def __post_init__(self):
        lo, hi = self.lo, self.hi
        if not (lo is NEG_INF or isinstance(lo, Fraction)):
            object.__setattr__(self, "lo", Fraction(lo))
        if not (hi is INF or isinstance(hi, Fraction)):
            object.__setattr__(self, "hi", Fraction(hi))
        if isinstance(self.lo, Fraction) and isinstance(self.hi, Fraction) and self.lo > self.hi:
            raise InvalidInput(f"empty interval [{self.lo}, {self.hi}]")

    def contains(self, t: Slope) -> bool:
        return interval_contains(self, t)

    def representative(self) -> Slope:
        if isinstance(self.lo, Fraction):
            return self.lo
        if isinstance(self.hi, Fraction):
            return self.hi
        return Fraction(0)

    def __str__(self):
        return f"[{slope_str(self.lo)}, {slope_str(self.hi)}]"


def interval_contains(iv: ParamInterval, t: Slope) -> bool:
    if t is EMPTY:
        return False
    if t is INF:
        # +inf and -inf are the same slope
        return iv.hi is INF or iv.lo is NEG_INF
    return (iv.lo is NEG_INF or iv.lo <= t) and (iv.hi is INF or t <= iv.hi)


def _affine(coef: Fraction, const: Fraction, var: str) -> str:
    """Render ``coef*var + const`` compactly, e.g. ``-2t - 6``."""
    parts = []
    if coef:
        head = "" if coef == 1 else "-" if coef == -1 else str(coef)
        parts.append(f"{head}{var}")
    if const or not parts:
        if parts:
            parts.append(f"- {-const}" if const < 0 else f"+ {const}")
        else:
            parts.append(str(const))
    return " ".join(parts)


def format_mobius(m: MobiusMap, var: str = "t") -> str:
    """Human-readable formula for ``m`` in the variable ``var``."""
    if m.is_constant:
        return str(m.constant_value())
    if m.c == 0:
        return _affine(Fraction(m.a, m.d), Fraction(m.b, m.d), var)
    if m.d == 0:
        # (a t + b)/(c t) = (b/c)/t + a/c
        return _reciprocal(Fraction(m.b, m.c), Fraction(m.a, m.c), var)
    return f"({_affine(Fraction(m.a), Fraction(m.b), var)})/({_affine(Fraction(m.c), Fraction(m.d), var)})"


def _reciprocal(coef: Fraction, const: Fraction, var: str) -> str:
    head = f"{coef}/{var}"
    if const:
        return f"{head} - {-const}" if const < 0 else f"{head} + {const}"
    return head
