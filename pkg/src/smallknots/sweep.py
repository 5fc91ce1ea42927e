"""Whole-construction regression sweep driven by a JSON config.

Example config (every section optional; a missing section is skipped)::

    {
      "identities": {"k_max": 10000, "w_max": 50, "u_min": -50},
      "claim": {"k_max": 1000},
      "table_laws": {"k_values": [1, 2, 5, 100], "samples": 200},
      "lens": {"p_max": 20, "q_max": 20, "k_max": 10},
      "spherical": {"a3_max": 50},
      "exceptional_set": "path/to/slopes.txt"
    }
"""
from __future__ import annotations

import inspect
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Optional

from .certify import (
    CERTIFIED,
    INVALID,
    certify_lens,
    certify_spherical,
    load_exceptional_set,
)
from .cfrac import cf_evaluate, seifert_family_exclusion
from .errors import ExcludedCase, InvalidInput
from .rational import EMPTY, INF, ParamInterval, slope_str
from .slope_table import pair_in_table, partners, table_families

MAX_FAILURES = 5


@dataclass
class Section:
    name: str
    passed: int = 0
    failed: int = 0
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what: str = "", tally: Optional[str] = None):
        if tally is not None:
            self.counts[tally] = self.counts.get(tally, 0) + 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(what)

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "counts": dict(sorted(self.counts.items())),
            "first_failures": self.failures,
        }


@dataclass
class SweepReport:
    sections: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.sections)

    def as_dict(self):
        return {"ok": self.ok, "sections": [s.as_dict() for s in self.sections]}

    def render(self) -> str:
        lines = []
        for s in self.sections:
            status = "PASS" if s.failed == 0 else "FAIL"
            extra = " ".join(f"{k}={v}" for k, v in sorted(s.counts.items()))
            lines.append(f"{status} {s.name}: {s.passed} passed, {s.failed} failed {extra}".rstrip())
            for f in s.failures:
                lines.append(f"    {f}")
        lines.append("sweep: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines)


def sample_parameters(iv: ParamInterval, n: int = 200) -> list:
    """Deterministic grid of about ``n`` rational points of ``iv``, with 0, ±1, inf when inside."""
    pts = []
    if iv.hi is INF:
        pts.append(INF)
        base = iv.lo if isinstance(iv.lo, Fraction) else Fraction(0)
        pts.extend(base + Fraction(i, n - 1 - i) for i in range(n - 1))
    else:
        lo, hi = iv.lo, iv.hi
        pts.extend(lo + (hi - lo) * Fraction(i, n - 1) for i in range(n))
    for extra in (Fraction(0), Fraction(1), Fraction(-1), INF):
        if iv.contains(extra) and extra not in pts:
            pts.append(extra)
    return pts


def check_identities(k_max=10_000, w_max=50, u_min=-50) -> Section:
    sec = Section("cf identities")
    for k in range(2, k_max + 1):
        a = cf_evaluate((2, 2 * k, -2))
        b = cf_evaluate((2, 2 * k - 1, 2))
        ok = a == b == Fraction(8 * k, 4 * k - 1)
        sec.record(ok, f"k={k}: {slope_str(a)} vs {slope_str(b)}", "lk")
    for w in range(1, w_max + 1):
        for u in range(u_min, -2):
            a = cf_evaluate((2 * w + 1, 2 * u + 1))
            b = cf_evaluate((2 * w, 1, -2 * u - 2))
            sec.record(a == b, f"w={w}, u={u}: {slope_str(a)} vs {slope_str(b)}", "seifert-case")
    return sec


def check_claim(k_max=1000) -> Section:
    sec = Section("seifert family exclusion")
    for k in range(2, k_max + 1):
        rep = seifert_family_exclusion(k)
        sec.record(rep.excluded, f"k={k}: witness {rep.witness}")
    return sec


def check_table_laws(k_values=(1, 2, 5, 100), samples=200) -> Section:
    sec = Section("table laws")
    for k in k_values:
        inf_p = partners(k, INF)
        sec.record(inf_p == [Fraction(0)], f"k={k}: partners of inf = {inf_p}", "inf-partner")
        empty_p = set(partners(k, EMPTY))
        sec.record(
            empty_p == {Fraction(0), Fraction(-4 * k)},
            f"k={k}: partners of empty = {sorted(empty_p)}",
            "empty-partner",
        )
        for f in table_families(k):
            if not f.parametric:
                continue
            for t in sample_parameters(f.interval, samples):
                pair = f.at(t)
                rep = pair_in_table(k, pair, both_orders=False)
                sec.record(rep.member, f"k={k} row {f.id} t={slope_str(t)}: {pair} missed", "samples")
    return sec


def _expected_lens_valid(p, q, k):
    return p > 0 and q != 0 and gcd(p, abs(q)) == 1 and k >= 2 and 4 * k * abs(q) != p


def check_lens(p_max=20, q_max=20, k_max=10) -> Section:
    sec = Section("lens certificates")
    for p in range(1, p_max + 1):
        for q in range(-q_max, q_max + 1):
            for k in range(1, k_max + 1):
                cert = certify_lens(p, q, k)
                want = CERTIFIED if _expected_lens_valid(p, q, k) else INVALID
                sec.record(cert.verdict == want, f"(p,q,k)=({p},{q},{k}): {cert.verdict}, {cert.reason}", cert.verdict)
    return sec


def check_spherical(a3_max=50, exceptional=None) -> Section:
    sec = Section("spherical T/O/I certificates")
    for b3 in (3, 4, 5):
        for a3 in range(-a3_max, a3_max + 1):
            try:
                cert = certify_spherical(a3, b3, exceptional)
            except ExcludedCase:
                sec.record(abs(a3) == 1, f"(a3,b3)=({a3},{b3}) unexpectedly excluded", "excluded")
                continue
            except InvalidInput:
                sec.record(a3 == 0 or gcd(a3, b3) != 1, f"(a3,b3)=({a3},{b3}) unexpectedly invalid", INVALID)
                continue
            sec.record(cert.verdict == CERTIFIED, f"(a3,b3)=({a3},{b3}): {cert.verdict}, {cert.reason}", cert.verdict)
    return sec


def _section(config, name, func):
    args = config[name]
    if not isinstance(args, dict):
        raise InvalidInput(f"sweep section {name!r} must be an object")
    allowed = set(inspect.signature(func).parameters) - {"exceptional"}
    unknown = sorted(set(args) - allowed)
    if unknown:
        raise InvalidInput(f"unknown option(s) in {name!r}: {', '.join(unknown)}")
    return args


_SECTIONS = ("identities", "claim", "table_laws", "lens", "spherical", "exceptional_set")


def sweep_verify(config: dict) -> SweepReport:
    unknown = sorted(set(config) - set(_SECTIONS))
    if unknown:
        raise InvalidInput(f"unknown sweep sections: {', '.join(unknown)}")
    report = SweepReport()
    exceptional = None
    if config.get("exceptional_set"):
        exceptional = load_exceptional_set(config["exceptional_set"])
    if "identities" in config:
        report.sections.append(check_identities(**_section(config, "identities", check_identities)))
    if "claim" in config:
        report.sections.append(check_claim(**_section(config, "claim", check_claim)))
    if "table_laws" in config:
        report.sections.append(check_table_laws(**_section(config, "table_laws", check_table_laws)))
    if "lens" in config:
        report.sections.append(check_lens(**_section(config, "lens", check_lens)))
    if "spherical" in config:
        report.sections.append(check_spherical(exceptional=exceptional, **_section(config, "spherical", check_spherical)))
    return report


def load_config(path) -> dict:
    path = Path(path)
    config = json.loads(path.read_text("utf-8"))
    exc = config.get("exceptional_set")
    if exc and not Path(exc).is_absolute():
        config["exceptional_set"] = str(path.parent / exc)
    return config

