"""Small-knot certificates for lens spaces and spherical manifolds of type T, O, I.

Lens spaces.  L(p, q) is (-p/q)-surgery on the unknot.  Take the link
L_k = K u K' = C(2, 2k, -2) with k >= 2 and 4k != ±p/q, fill K' along -p/q,
and keep K.  The certificate records:

* hyperbolicity: L_k is a hyperbolic 2-bridge link, L_k is not any of the
  links [2w+1, 2u+1] admitting Seifert fillings, and -p/q is a genuine slope;
* smallness: no boundary-slope pair of L_k has the form {inf, -p/q} or
  {empty, -p/q}.

Type T/O/I.  Such a manifold is (6 - b3/a3)-surgery on the right-hand
trefoil, hence surgery on the Whitehead link L_1 along (6 - b3/a3, 1).  The
knot is the core of the solid torus glued to K'.  Hyperbolicity evidence is
that r = 6 - b3/a3 is non-integral and avoids the exceptional set; smallness
is that no pair {1, r} or {empty, r} occurs for L_1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import count
from math import gcd
from pathlib import Path
from typing import Iterator, Optional

from .cfrac import (
    is_hyperbolic_two_bridge,
    lk_link,
    lk_terms,
    seifert_family_exclusion,
)
from .errors import ExcludedCase, InvalidInput
from .grammar import parse_slope
from .rational import EMPTY, INF, Slope, slope_str
from .slope_table import exclusion_check, slope_sort_key

CERTIFIED = "certified"
REFUTED = "refuted"
INVALID = "invalid"

TOI_TYPES = {3: "T", 4: "O", 5: "I"}

TOROIDAL_ZERO_SURGERY = (
    "0-surgery on K' is toroidal: K' bounds a once-punctured torus in the exterior of L_k"
)


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    @property
    def surgery_slope(self) -> Fraction:
        """Slope of the unknot surgery giving this lens space."""
        return Fraction(-self.p, self.q)

    def as_dict(self):
        return {
            "type": "lens",
            "p": self.p,
            "q": self.q,
            "name": f"L({self.p},{self.q})",
            "surgery_slope": slope_str(self.surgery_slope),
        }


def _lens_hypotheses(p: int, q: int, k: Optional[int] = None) -> list[dict]:
    coprime = p > 0 and q != 0 and gcd(p, abs(q)) == 1
    hyps = [
        {"name": "p > 0", "holds": p > 0},
        {"name": "q != 0", "holds": q != 0},
        {"name": "gcd(p, |q|) = 1", "holds": coprime},
    ]
    if k is not None:
        hyps.append({"name": "k >= 2", "holds": k >= 2})
        hyps.append({"name": "4k != ±p/q", "holds": q == 0 or 4 * k * abs(q) != p})
    return hyps


def lens_space(p: int, q: int) -> LensSpace:
    failed = [h["name"] for h in _lens_hypotheses(p, q) if not h["holds"]]
    if failed:
        raise InvalidInput(f"L({p},{q}) is not a lens space: {', '.join(failed)} fails")
    return LensSpace(p, q)


def admissible_k(ls: LensSpace) -> Iterator[int]:
    """k = 2, 3, ... skipping the k with p = 4k|q|."""
    for k in count(2):
        if ls.p != 4 * k * abs(ls.q):
            yield k


@dataclass(frozen=True)
class SphericalTOI:
    a3: int
    b3: int

    @property
    def kind(self) -> str:
        return TOI_TYPES[self.b3]

    @property
    def trefoil_slope(self) -> Fraction:
        return 6 - Fraction(self.b3, self.a3)

    @property
    def seifert(self) -> str:
        return f"±(-1; 1/2, 1/3, {self.a3}/{self.b3})"

    def as_dict(self):
        return {
            "type": "spherical",
            "family": self.kind,
            "a3": self.a3,
            "b3": self.b3,
            "seifert": self.seifert,
            "a3_sign": "positive" if self.a3 > 0 else "negative",
            "trefoil_surgery_slope": slope_str(self.trefoil_slope),
        }


def spherical_toi(a3: int, b3: int) -> SphericalTOI:
    if b3 not in TOI_TYPES:
        raise InvalidInput(f"b3 must be 3, 4 or 5 (types T, O, I), got {b3}")
    if a3 == 0 or gcd(a3, b3) != 1:
        raise InvalidInput(f"a3 and b3 must be coprime with a3 != 0, got ({a3}, {b3})")
    if abs(a3) == 1:
        raise ExcludedCase(
            f"a3 = {a3}: ±(-1; 1/2, 1/3, 1/m) with m = {b3} is not covered, since "
            "1-, 2- and 3-surgeries on the Whitehead link component are exceptional"
        )
    return SphericalTOI(a3, b3)


def _default_exceptional_text() -> str:
    return resources.files("smallknots").joinpath("data/whitehead_exceptional.txt").read_text("utf-8")


def parse_exceptional_set(text: str) -> frozenset:
    slopes = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            s = parse_slope(line)
            if s is EMPTY:
                raise InvalidInput("the exceptional set holds slopes, not 'empty'")
            slopes.add(s)
    return frozenset(slopes)


def load_exceptional_set(path=None) -> frozenset:
    """Whitehead-link exceptional slopes; the bundled list unless ``path`` is given."""
    if path is None:
        return parse_exceptional_set(_default_exceptional_text())
    return parse_exceptional_set(Path(path).read_text("utf-8"))


@dataclass(frozen=True)
class SmallKnotCertificate:
    """JSON-shaped record of everything checked for one (manifold, knot)."""

    manifold: dict
    knot: dict
    hypotheses: list
    hyperbolicity: dict = field(default_factory=dict)
    smallness: dict = field(default_factory=dict)
    verdict: str = INVALID
    reason: Optional[str] = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def as_dict(self):
        return {
            "manifold": self.manifold,
            "knot": self.knot,
            "hypotheses": self.hypotheses,
            "hyperbolicity": self.hyperbolicity,
            "smallness": self.smallness,
            "verdict": self.verdict,
            "reason": self.reason,
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.as_dict(), indent=indent, ensure_ascii=False)


def _lens_knot(k, p, q):
    return {
        "kind": "lens",
        "link": f"C(2,{2 * k},-2)",
        "k": k,
        "knot": "K",
        "filled": {"component": "K'", "slope": slope_str(Fraction(-p, q)) if q else None},
    }


def _verdict(evidence: list[dict], smallness) -> tuple[str, Optional[str]]:
    failed = [e["check"] for e in evidence if e["status"] == "failed"]
    if not smallness.excluded:
        w = smallness.witnesses[0]
        failed.append(f"smallness (row {w.row} {w.label}, {w.param}={slope_str(w.value) if w.value is not None else '-'})")
    if failed:
        return REFUTED, "failed: " + "; ".join(failed)
    return CERTIFIED, None


def certify_lens(p: int, q: int, k: int) -> SmallKnotCertificate:
    hyps = _lens_hypotheses(p, q, k)
    manifold = {"type": "lens", "p": p, "q": q, "name": f"L({p},{q})"}
    failed = [h["name"] for h in hyps if not h["holds"]]
    if failed:
        return SmallKnotCertificate(
            manifold, _lens_knot(k, p, q), hyps,
            verdict=INVALID, reason="hypothesis violated: " + ", ".join(failed),
        )
    ls = LensSpace(p, q)
    slope = ls.surgery_slope
    link = lk_link(k)
    seifert = seifert_family_exclusion(k)
    evidence = [
        {
            "check": "link_hyperbolic",
            "detail": f"L_{k} = {list(lk_terms(k))} = {link}; not b(p,1) or b(p,p-1)",
            "status": "passed" if is_hyperbolic_two_bridge(link) else "failed",
        },
        {
            "check": "no_seifert_family_match",
            "detail": seifert.as_dict(),
            "status": "passed" if seifert.excluded else "failed",
        },
        {
            "check": "surgery_slope_nondegenerate",
            "detail": f"-p/q = {slope_str(slope)} is not 0 or inf",
            "status": "passed" if slope != 0 else "failed",
        },
        {"check": "zero_surgery_toroidal", "detail": TOROIDAL_ZERO_SURGERY, "status": "cited"},
    ]
    small = exclusion_check(k, (INF, EMPTY), slope)
    verdict, reason = _verdict(evidence, small)
    return SmallKnotCertificate(
        ls.as_dict(),
        _lens_knot(k, p, q),
        hyps,
        {"method": "two-bridge filling", "evidence": evidence},
        _smallness(small),
        verdict,
        reason,
    )


def _smallness(report) -> dict:
    return {
        "checked_pairs": [[slope_str(s), slope_str(report.partner)] for s in report.fixed],
        "both_orders": True,
        "verdict": "excluded" if report.excluded else "witness",
        "trace": [r.as_dict() for r in report.reports],
    }


def certify_spherical(a3: int, b3: int, exceptional=None) -> SmallKnotCertificate:
    """Certificate for the dual knot in the T/O/I manifold with data (a3, b3).

    Raises :class:`InvalidInput` or :class:`ExcludedCase` for data outside
    the construction, like :func:`spherical_toi`.
    """
    m = spherical_toi(a3, b3)
    if exceptional is None:
        exceptional = load_exceptional_set()
    exceptional = sorted(frozenset(exceptional), key=slope_sort_key)
    r = m.trefoil_slope
    hyps = [
        {"name": "b3 in {3,4,5}", "holds": True},
        {"name": "gcd(a3, b3) = 1", "holds": True},
        {"name": "|a3| >= 2", "holds": True},
    ]
    evidence = [
        {
            "check": "filling_slope_nonintegral",
            "detail": f"r = 6 - ({b3})/({a3}) = {slope_str(r)}",
            "status": "passed" if r.denominator != 1 else "failed",
        },
        {
            "check": "filling_slope_not_exceptional",
            "detail": {
                "slope": slope_str(r),
                "exceptional_set": [slope_str(s) for s in exceptional],
            },
            "status": "passed" if r not in exceptional else "failed",
        },
    ]
    knot = {
        "kind": "dual",
        "link": "C(2,2,-2)",
        "k": 1,
        "fillings": {"K": slope_str(r), "K'": "1/1"},
        "knot": "K'' (core of the solid torus glued along K')",
    }
    small = exclusion_check(1, (Fraction(1), EMPTY), r)
    verdict, reason = _verdict(evidence, small)
    return SmallKnotCertificate(
        m.as_dict(),
        knot,
        hyps,
        {"method": "Whitehead link filling", "evidence": evidence},
        _smallness(small),
        verdict,
        reason,
    )


def replay_certificate(doc: dict) -> SmallKnotCertificate:
    """Recompute a certificate from the descriptors recorded in ``doc``."""
    manifold = doc["manifold"]
    if manifold.get("type") == "lens":
        return certify_lens(int(manifold["p"]), int(manifold["q"]), int(doc["knot"]["k"]))
    if manifold.get("type") == "spherical":
        exc = None
        for e in doc.get("hyperbolicity", {}).get("evidence", []):
            if e.get("check") == "filling_slope_not_exceptional":
                exc = [parse_slope(s) for s in e["detail"]["exceptional_set"]]
        return certify_spherical(int(manifold["a3"]), int(manifold["b3"]), exc)
    raise InvalidInput(f"unknown manifold type {manifold.get('type')!r}")


def verify_certificate(doc: dict) -> bool:
    """True when recomputing ``doc`` reproduces it exactly, verdict included."""
    return replay_certificate(doc).as_dict() == doc
