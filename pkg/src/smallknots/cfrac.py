"""Continued fractions and 2-bridge links.

Evaluation convention: ``[a1, a2, ..., an] = a1 + 1/(a2 + 1/(... + 1/an))``.
A 2-bridge link is stored in Schubert normal form ``b(p, q)`` with
``0 < q < p``; two of them are equivalent when the ``p`` agree and
``q' = q**±1 (mod p)``, and mirror images when ``q' = -q**±1 (mod p)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence

from .errors import DegenerateLink, InvalidInput, NonPositiveInput, OutOfRange
from .rational import INF, Slope, invert, slope_str


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise InvalidInput("a continued fraction needs at least one term")
        if any(not isinstance(a, int) or isinstance(a, bool) or a == 0 for a in terms):
            raise InvalidInput(f"continued fraction terms must be nonzero integers: {terms}")
        object.__setattr__(self, "terms", terms)

    @property
    def value(self) -> Slope:
        return cf_evaluate(self)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return "[" + ", ".join(map(str, self.terms)) + "]"


@dataclass(frozen=True)
class SimpleCF:
    """All-positive expansion (first term may be 0), last term >= 2 unless ``[1]``."""

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms or terms[0] < 0 or any(a < 1 for a in terms[1:]):
            raise InvalidInput(f"not a simple continued fraction: {terms}")
        if terms == (0,):
            raise InvalidInput("simple continued fractions represent positive values")
        if len(terms) > 1 and terms[-1] < 2:
            raise InvalidInput(f"last term of a canonical simple form must be >= 2: {terms}")

    @property
    def value(self) -> Fraction:
        return _fold(self.terms)

    def parity_variant(self) -> tuple[int, ...]:
        """The other expansion of the same value, ``[..., a-1, 1]``."""
        *head, last = self.terms
        return tuple(head) + (last - 1, 1)

    def __str__(self):
        return "[" + ", ".join(map(str, self.terms)) + "]"


def _terms(cf) -> tuple[int, ...]:
    if isinstance(cf, (ContinuedFraction, SimpleCF)):
        return cf.terms
    return ContinuedFraction(tuple(cf)).terms


def _fold(terms: Sequence[int]) -> Slope:
    x: Slope = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        inv = invert(x)
        x = INF if inv is INF else a + inv
    return x


def cf_evaluate(cf) -> Slope:
    """Exact value of a continued fraction; a 1/0 inside propagates as ``INF``.

    >>> cf_evaluate([2, 4, -2])
    Fraction(16, 7)
    """
    return _fold(_terms(cf))


def cf_simple(r) -> SimpleCF:
    r = Fraction(r)
    if r <= 0:
        raise NonPositiveInput(f"simple continued fractions need r > 0, got {r}")
    num, den = r.numerator, r.denominator
    terms = []
    while den:
        a, rem = divmod(num, den)
        terms.append(a)
        num, den = den, rem
    return SimpleCF(tuple(terms))


def cf_reverse(cf) -> ContinuedFraction:
    return ContinuedFraction(tuple(reversed(_terms(cf))))


@dataclass(frozen=True)
class TwoBridgeLink:
    p: int
    q: int
    mirror: bool = False

    def __post_init__(self):
        if self.p < 2 or not 0 < self.q < self.p or gcd(self.p, self.q) != 1:
            raise InvalidInput(f"b({self.p}, {self.q}) is not in Schubert normal form")

    @property
    def components(self) -> int:
        return 2 if self.p % 2 == 0 else 1

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def as_dict(self):
        return {"p": self.p, "q": self.q, "mirror": self.mirror, "components": self.components}

    def __str__(self):
        s = f"b({self.p},{self.q})"
        return s + "*" if self.mirror else s


def two_bridge_normalize(r) -> TwoBridgeLink:
    if r is INF:
        raise DegenerateLink("the fraction 1/0 describes the unlink/unknot")
    r = Fraction(r)
    if r == 0:
        raise DegenerateLink("the fraction 0 describes a trivial link")
    v = abs(r)
    p, q = v.numerator, v.denominator % v.numerator
    if p <= 1:
        raise DegenerateLink(f"{slope_str(r)} gives p = {p}: unknot or unlink")
    return TwoBridgeLink(p, q, mirror=r < 0)


def schubert_classes(link: TwoBridgeLink, allow_mirror: bool = False) -> frozenset[int]:
    p, q = link.p, link.q
    qinv = pow(q, -1, p)
    cls = {q, qinv}
    if allow_mirror:
        cls |= {p - q, p - qinv}
    return frozenset(cls)


def schubert_equivalent(l1: TwoBridgeLink, l2: TwoBridgeLink, allow_mirror: bool = False) -> bool:
    return l1.p == l2.p and l2.q in schubert_classes(l1, allow_mirror)


@dataclass(frozen=True)
class Equivalence:
    """Verdict of :func:`cf_equivalent`.

    ``equivalent`` is the Schubert verdict.  ``diagnostic`` compares the
    canonical simple forms literally and is informational only.
    """

    equivalent: bool
    links: tuple[TwoBridgeLink, TwoBridgeLink]
    simple_forms: tuple[SimpleCF, SimpleCF]
    diagnostic: Optional[str] = None

    def __bool__(self):
        return self.equivalent


def _variants(s: SimpleCF) -> set[tuple[int, ...]]:
    return {s.terms, s.parity_variant()}


def _simple_form_relation(s1: SimpleCF, s2: SimpleCF) -> Optional[str]:
    v1, v2 = _variants(s1), _variants(s2)
    if v1 & v2:
        return "equal"
    if {tuple(reversed(t)) for t in v1} & v2:
        return "reversed"
    return None


def cf_equivalent(cf1, cf2, allow_mirror: bool = False) -> Equivalence:
    values = []
    for cf in (cf1, cf2):
        v = cf_evaluate(cf)
        if v is INF:
            raise DegenerateLink(f"{list(_terms(cf))} evaluates to 1/0")
        values.append(v)
    l1, l2 = (two_bridge_normalize(v) for v in values)
    s1, s2 = cf_simple(l1.fraction), cf_simple(l2.fraction)
    diagnostic = None
    rel = _simple_form_relation(s1, s2)
    if rel:
        diagnostic = f"{rel} simple forms"
    elif allow_mirror:
        rel = _simple_form_relation(cf_simple(Fraction(l1.p, l1.p - l1.q)), s2)
        if rel:
            diagnostic = f"mirror-{rel} simple forms"
    return Equivalence(schubert_equivalent(l1, l2, allow_mirror), (l1, l2), (s1, s2), diagnostic)


def is_hyperbolic_two_bridge(link: TwoBridgeLink) -> bool:
    """False exactly for the torus links b(p, 1) and b(p, p-1)."""
    return link.q not in (1, link.p - 1)


def lk_terms(k: int) -> tuple[int, int, int]:
    return (2, 2 * k, -2)


def lk_fraction(k: int) -> Fraction:
    """Fraction of L_k = C(2, 2k, -2), i.e. 8k/(4k-1)."""
    if k < 1:
        raise OutOfRange(f"L_k needs k >= 1, got {k}")
    return cf_evaluate(lk_terms(k))


def lk_link(k: int) -> TwoBridgeLink:
    return two_bridge_normalize(lk_fraction(k))


def _factor_pairs(n: int) -> Iterable[tuple[int, int]]:
    """Ordered pairs (d, n // d) with both factors >= 3."""
    small = []
    for d in range(3, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
    for d in small:
        yield d, n // d
    for d in reversed(small):
        if d != n // d:
            yield n // d, d


@dataclass(frozen=True)
class SeifertCandidate:
    w: int
    u: int
    terms: tuple[int, int]
    link: TwoBridgeLink
    equivalent: bool

    def as_dict(self):
        return {
            "w": self.w,
            "u": self.u,
            "cf": list(self.terms),
            "link": str(self.link),
            "equivalent_up_to_mirror": self.equivalent,
        }


@dataclass(frozen=True)
class SeifertExclusionReport:
    k: int
    link: TwoBridgeLink
    candidates: tuple[SeifertCandidate, ...] = field(default=())

    @property
    def witness(self) -> Optional[SeifertCandidate]:
        return next((c for c in self.candidates if c.equivalent), None)

    @property
    def excluded(self) -> bool:
        return self.witness is None

    def as_dict(self):
        return {
            "k": self.k,
            "link": str(self.link),
            "candidates": [c.as_dict() for c in self.candidates],
            "verdict": "excluded" if self.excluded else "witness",
        }


def seifert_family_exclusion(k: int) -> SeifertExclusionReport:
    """Check that L_k is not b([2w+1, 2u+1]) for any w >= 1, u not in {0, -1}.

    Only candidates with the same ``p = 8k`` can match.  For ``u >= 1``
    that means ``(2w+1)(2u+1) = 8k - 1``; for ``u <= -2`` it means
    ``(2w+1)U = 8k + 1`` with ``U = -(2u+1)``.  Each candidate is compared
    with L_k up to mirror image.
    """
    if k < 2:
        raise OutOfRange(f"the construction needs k >= 2, got {k}")
    target = lk_link(k)
    candidates = []
    for d, e in _factor_pairs(8 * k - 1):
        candidates.append(((d - 1) // 2, (e - 1) // 2))
    for d, big_u in _factor_pairs(8 * k + 1):
        candidates.append(((d - 1) // 2, -(big_u + 1) // 2))
    checked = []
    for w, u in candidates:
        terms = (2 * w + 1, 2 * u + 1)
        link = two_bridge_normalize(cf_evaluate(terms))
        if link.p != target.p:
            raise AssertionError(f"candidate {terms} has p = {link.p}, expected {target.p}")
        checked.append(SeifertCandidate(w, u, terms, link, schubert_equivalent(target, link, True)))
    return SeifertExclusionReport(k, target, tuple(checked))
