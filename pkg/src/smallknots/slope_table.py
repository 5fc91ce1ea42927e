"""Boundary-slope pairs of essential surfaces in the exterior of L_k.

The nine families are fixed data, instantiated for a concrete ``k``.  Each
coordinate is either a constant slope or a fractional-linear function of a
single rational parameter ranging over a closed interval.  Membership of a
pair is decided exactly by inverting one coordinate and substituting into
the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import InvalidInput, OutOfRange
from .rational import (
    ALL,
    EMPTY,
    INF,
    MobiusMap,
    ParamInterval,
    Slope,
    as_slope,
    mobius_eval,
    mobius_solve,
    slope_str,
)

Coord = Union[Slope, MobiusMap]


def slope_sort_key(s: Slope):
    if isinstance(s, Fraction):
        return (0, s)
    return (1 if s is INF else 2, 0)


@dataclass(frozen=True)
class SlopeFamily:
    """One row of the table.

    ``with_swap`` marks rows listed in both orders, e.g. ``(0, ∅), (∅, 0)``.
    """

    id: int
    label: str
    coord1: Coord
    coord2: Coord
    interval: Optional[ParamInterval] = None
    param: Optional[str] = None
    min_k: int = 1
    with_swap: bool = False

    def __post_init__(self):
        parametric = isinstance(self.coord1, MobiusMap) or isinstance(self.coord2, MobiusMap)
        if parametric != (self.interval is not None):
            raise InvalidInput(f"row {self.id}: parametric rows need an interval, constant rows none")

    @property
    def parametric(self) -> bool:
        return self.interval is not None

    def at(self, t: Slope) -> tuple[Slope, Slope]:
        """Evaluate the listed order at parameter ``t``."""
        return _coord_at(self.coord1, t), _coord_at(self.coord2, t)

    def orders(self):
        yield "listed", self.coord1, self.coord2
        if self.with_swap:
            yield "reversed", self.coord2, self.coord1


def _coord_at(c: Coord, t: Slope) -> Slope:
    if isinstance(c, MobiusMap):
        return mobius_eval(c, t)
    return c


def _solve_coord(c: Coord, v: Slope):
    if isinstance(c, MobiusMap):
        return mobius_solve(c, v)
    return ALL if c == v else None


def table_families(k: int) -> list[SlopeFamily]:
    if k < 1:
        raise OutOfRange(f"L_k needs k >= 1, got {k}")
    c = Fraction
    zero_inf = ParamInterval(c(0), INF)
    rows = [
        SlopeFamily(1, "(0, 0)", c(0), c(0)),
        SlopeFamily(2, "(0, ∅), (∅, 0)", c(0), EMPTY, with_swap=True),
        SlopeFamily(3, "(-4k, ∅), (∅, -4k)", c(-4 * k), EMPTY, with_swap=True),
        SlopeFamily(4, "(-4k, -2), (-2, -4k)", c(-4 * k), c(-2), with_swap=True),
        SlopeFamily(
            5, "(2t^-1, 2t)", MobiusMap(0, 2, 1, 0), MobiusMap(2, 0, 0, 1), zero_inf, "t"
        ),
        SlopeFamily(
            6, "(-2t^-1, -2t)", MobiusMap(0, -2, 1, 0), MobiusMap(-2, 0, 0, 1), zero_inf, "t",
            min_k=2,
        ),
        SlopeFamily(
            7, "(-2t^-1 + 2 - 4k, -2t)", MobiusMap(2 - 4 * k, -2, 1, 0), MobiusMap(-2, 0, 0, 1),
            ParamInterval(c(0), c(1)), "t",
        ),
        SlopeFamily(
            8, "(-2t^-1, 2 - 4k - 2t)", MobiusMap(0, -2, 1, 0), MobiusMap(-2, 2 - 4 * k, 0, 1),
            ParamInterval(c(1), INF), "t",
        ),
        SlopeFamily(
            9, "(-1 - 2k + (2k-1)s, -1 - 2k - (2k-1)s)",
            MobiusMap(2 * k - 1, -1 - 2 * k, 0, 1), MobiusMap(1 - 2 * k, -1 - 2 * k, 0, 1),
            ParamInterval(c(-1), c(1)), "s",
        ),
    ]
    return [r for r in rows if r.min_k <= k]


def swapped_family(f: SlopeFamily) -> SlopeFamily:
    return SlopeFamily(
        f.id, f"swap {f.label}", f.coord2, f.coord1, f.interval, f.param, f.min_k, f.with_swap
    )


@dataclass(frozen=True)
class Witness:
    row: int
    label: str
    variant: str
    order: str
    param: Optional[str] = None
    value: Optional[Slope] = None

    def as_dict(self):
        return {
            "row": self.row,
            "label": self.label,
            "variant": self.variant,
            "order": self.order,
            "param": self.param,
            "value": None if self.value is None else slope_str(self.value),
        }


@dataclass(frozen=True)
class RowCheck:
    """Outcome of matching one ordered pair against one row variant."""

    row: int
    variant: str
    order: str
    status: str
    solved: Optional[Slope] = None

    def as_dict(self):
        return {
            "row": self.row,
            "variant": self.variant,
            "order": self.order,
            "status": self.status,
            "solved": None if self.solved is None else slope_str(self.solved),
        }


def _match(f: SlopeFamily, c1: Coord, c2: Coord, x: Slope, y: Slope):
    """Return ``(status, parameter)``; status is ``"member"`` or the failed check."""
    if not f.parametric:
        return ("member", None) if (c1 == x and c2 == y) else ("constant-mismatch", None)
    s1 = _solve_coord(c1, x)
    if s1 is None:
        return "no-solution", None
    if s1 is ALL:
        s2 = _solve_coord(c2, y)
        if s2 is None:
            return "no-solution", None
        t = f.interval.representative() if s2 is ALL else s2.t
        return ("member", t) if f.interval.contains(t) else ("interval", t)
    t = s1.t
    if not f.interval.contains(t):
        return "interval", t
    if _coord_at(c2, t) != y:
        return "cross-coordinate", t
    return "member", t


def family_contains(f: SlopeFamily, pair, order: str = "as given") -> tuple[Optional[Witness], list[RowCheck]]:
    """Witness that ``pair`` lies on row ``f`` (or ``None``) plus the per-variant checks."""
    x, y = (as_slope(s) for s in pair)
    checks = []
    for variant, c1, c2 in f.orders():
        status, t = _match(f, c1, c2, x, y)
        checks.append(RowCheck(f.id, variant, order, status, t))
        if status == "member":
            if f.parametric:
                got = (_coord_at(c1, t), _coord_at(c2, t))
                if got != (x, y):
                    raise AssertionError(f"row {f.id}: witness {t} gives {got}, not {(x, y)}")
            return Witness(f.id, f.label, variant, order, f.param, t), checks
    return None, checks


@dataclass(frozen=True)
class MembershipReport:
    k: int
    pair: tuple[Slope, Slope]
    witness: Optional[Witness]
    trace: tuple[RowCheck, ...]

    @property
    def member(self) -> bool:
        return self.witness is not None

    def as_dict(self):
        return {
            "k": self.k,
            "pair": [slope_str(s) for s in self.pair],
            "verdict": "member" if self.member else "non-member",
            "witness": self.witness.as_dict() if self.witness else None,
            "trace": [c.as_dict() for c in self.trace],
        }


def pair_in_table(
    k: int,
    pair,
    both_orders: bool = True,
    families: Optional[Sequence[SlopeFamily]] = None,
) -> MembershipReport:
    x, y = (as_slope(s) for s in pair)
    if x is EMPTY and y is EMPTY:
        raise InvalidInput("(empty, empty) describes a closed surface, not a boundary-slope pair")
    if families is None:
        families = table_families(k)
    attempts = [("as given", (x, y))]
    if both_orders:
        attempts.append(("swapped", (y, x)))
    trace = []
    for order, p in attempts:
        for f in families:
            witness, checks = family_contains(f, p, order)
            trace.extend(checks)
            if witness is not None:
                return MembershipReport(k, (x, y), witness, tuple(trace))
    return MembershipReport(k, (x, y), None, tuple(trace))


@dataclass(frozen=True)
class ExclusionReport:
    k: int
    fixed: tuple[Slope, ...]
    partner: Slope
    reports: tuple[MembershipReport, ...]

    @property
    def excluded(self) -> bool:
        return not any(r.member for r in self.reports)

    @property
    def witnesses(self) -> list[Witness]:
        return [r.witness for r in self.reports if r.member]

    def as_dict(self):
        return {
            "k": self.k,
            "fixed": [slope_str(s) for s in self.fixed],
            "partner": slope_str(self.partner),
            "verdict": "excluded" if self.excluded else "witness",
            "checks": [r.as_dict() for r in self.reports],
        }


def exclusion_check(k: int, fixed: Iterable, partner) -> ExclusionReport:
    """Check that no pair ``{s, partner}`` with ``s`` in ``fixed`` is in the table."""
    partner = as_slope(partner)
    if partner is EMPTY:
        raise InvalidInput("partner slope must be finite or inf")
    fixed = tuple(sorted({as_slope(s) for s in fixed}, key=slope_sort_key))
    reports = tuple(pair_in_table(k, (s, partner), both_orders=True) for s in fixed)
    return ExclusionReport(k, fixed, partner, reports)


def partners(k: int, slope) -> list[Slope]:
    """Every slope that appears opposite ``slope`` in some table pair, sorted.

    Raises if the set is infinite, which never happens for Table data since
    no parametric row has a constant coordinate.
    """
    slope = as_slope(slope)
    found = set()
    for f in table_families(k):
        for _, c1, c2 in f.orders():
            for mine, other in ((c1, c2), (c2, c1)):
                sol = _solve_coord(mine, slope)
                if sol is None:
                    continue
                if not f.parametric:
                    found.add(other)
                elif sol is ALL:
                    raise ValueError(f"row {f.id}: infinitely many partners of {slope_str(slope)}")
                elif f.interval.contains(sol.t):
                    found.add(_coord_at(other, sol.t))
    return sorted(found, key=slope_sort_key)
