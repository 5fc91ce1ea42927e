"""Command-line front end.

Exit status: 0 for success / certified / true, 1 for a negative answer or a
refuted certificate, 2 for invalid input.  With ``--json`` exactly one JSON
document is written to stdout, errors included.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .certify import (
    CERTIFIED,
    INVALID,
    certify_lens,
    certify_spherical,
    lens_space,
    admissible_k,
    load_exceptional_set,
    verify_certificate,
)
from .cfrac import cf_equivalent, cf_evaluate, cf_simple
from .errors import SmallKnotsError
from .grammar import parse_fraction, parse_pair, parse_terms
from .rational import MobiusMap, format_mobius, slope_str
from .slope_table import pair_in_table, table_families
from .sweep import load_config, sweep_verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else False
    parser.add_argument("--json", action="store_true", default=default, help="emit one JSON document")
    parser.add_argument("--trace", action="store_true", default=default, help="include full check traces")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smallknots", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(subparsers, name, **kw):
        p = subparsers.add_parser(name, **kw)
        _global_flags(p, suppress=True)
        return p

    cf = add(sub, "cf", help="continued fractions")
    cf_sub = cf.add_subparsers(dest="cf_command", required=True, parser_class=_Parser)
    p = add(cf_sub, "eval", help="evaluate a continued fraction, e.g. 2,4,-2")
    p.add_argument("terms")
    p = add(cf_sub, "simple", help="simple continued fraction of p/q > 0")
    p.add_argument("fraction")

    link = add(sub, "link", help="2-bridge links")
    link_sub = link.add_subparsers(dest="link_command", required=True, parser_class=_Parser)
    p = add(link_sub, "equiv", help="Schubert equivalence of two continued fractions")
    p.add_argument("cf1")
    p.add_argument("cf2")
    p.add_argument("--mirror", action="store_true", help="also allow mirror images")

    p = add(sub, "table", help="boundary-slope families of L_k")
    p.add_argument("--k", type=int, required=True)

    p = add(sub, "check-pair", help="is a slope pair in the table for L_k?")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pair", required=True, help='e.g. "(inf,-5/1)"')
    p.add_argument("--one-order", action="store_true", help="do not also try the swapped pair")

    cert = add(sub, "certify", help="build a small-knot certificate")
    cert_sub = cert.add_subparsers(dest="cert_command", required=True, parser_class=_Parser)
    p = add(cert_sub, "lens", help="knot in the lens space L(p,q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, help="default: first admissible k")
    p = add(cert_sub, "spherical", help="knot in a type T/O/I spherical manifold")
    p.add_argument("--a3", type=int, required=True)
    p.add_argument("--b3", type=int, required=True)
    p.add_argument("--exceptional", help="file of exceptional Whitehead slopes")

    p = add(sub, "verify", help="re-check a certificate JSON file")
    p.add_argument("certificate")

    p = add(sub, "sweep", help="run a JSON-configured regression sweep")
    p.add_argument("config")
    return parser


def _coord_str(c, param):
    return format_mobius(c, param) if isinstance(c, MobiusMap) else slope_str(c)


def _cmd_cf(args):
    if args.cf_command == "eval":
        value = cf_evaluate(parse_terms(args.terms))
        return 0, slope_str(value), {"terms": list(parse_terms(args.terms)), "value": slope_str(value)}
    r = parse_fraction(args.fraction)
    s = cf_simple(r)
    return 0, str(s), {"fraction": slope_str(r), "simple": list(s.terms)}


def _cmd_link(args):
    eq = cf_equivalent(parse_terms(args.cf1), parse_terms(args.cf2), allow_mirror=args.mirror)
    l1, l2 = eq.links
    verdict = "equivalent" if eq.equivalent else "not equivalent"
    text = f"{verdict}: {l1} vs {l2}"
    if eq.diagnostic:
        text += f" ({eq.diagnostic}: {eq.simple_forms[0]} / {eq.simple_forms[1]})"
    doc = {
        "equivalent": eq.equivalent,
        "allow_mirror": args.mirror,
        "links": [l1.as_dict(), l2.as_dict()],
        "simple_forms": [list(s.terms) for s in eq.simple_forms],
        "diagnostic": eq.diagnostic,
    }
    return (0 if eq.equivalent else 1), text, doc


def _cmd_table(args):
    rows = []
    lines = [f"boundary-slope families for L_{args.k}:"]
    for f in table_families(args.k):
        c1, c2 = _coord_str(f.coord1, f.param or "t"), _coord_str(f.coord2, f.param or "t")
        rows.append({
            "row": f.id,
            "label": f.label,
            "coords": [c1, c2],
            "both_orders_listed": f.with_swap,
            "param": f.param,
            "interval": str(f.interval) if f.interval else None,
        })
        rng = f"  {f.param} in {f.interval}" if f.interval else ""
        swap = "  (and swapped)" if f.with_swap else ""
        lines.append(f"  {f.id}: ({c1}, {c2}){rng}{swap}")
    return 0, "\n".join(lines), {"k": args.k, "rows": rows}


def _cmd_check_pair(args):
    pair = parse_pair(args.pair)
    rep = pair_in_table(args.k, pair, both_orders=not args.one_order)
    doc = rep.as_dict()
    if not args.trace:
        doc.pop("trace")
    if rep.member:
        w = rep.witness
        text = f"member: row {w.row} {w.label}"
        if w.param:
            text += f" with {w.param} = {slope_str(w.value)}"
        text += f" ({w.variant} variant, pair {w.order})"
    else:
        text = "non-member"
    if args.trace:
        text += "\n" + _render_trace(rep.trace)
    return (0 if rep.member else 1), text, doc


def _render_trace(trace):
    lines = []
    for c in trace:
        solved = "" if c.solved is None else f" at {slope_str(c.solved)}"
        lines.append(f"  row {c.row} [{c.variant}, pair {c.order}]: {c.status}{solved}")
    return "\n".join(lines)


def _cert_exit(cert):
    if cert.verdict == CERTIFIED:
        return 0
    return 2 if cert.verdict == INVALID else 1


def _render_cert(cert, trace):
    d = cert.as_dict()
    m = d["manifold"]
    name = m.get("name") or f"{m['family']}: {m['seifert']}"
    lines = [f"{name}: {cert.verdict}"]
    if cert.reason:
        lines.append(f"  reason: {cert.reason}")
    lines.append("  knot: " + ", ".join(f"{k}={v}" for k, v in d["knot"].items()))
    for h in d["hypotheses"]:
        lines.append(f"  hypothesis {h['name']}: {'ok' if h['holds'] else 'VIOLATED'}")
    for e in d["hyperbolicity"].get("evidence", []):
        detail = e["detail"] if isinstance(e["detail"], str) else json.dumps(e["detail"], ensure_ascii=False)
        if not trace and len(detail) > 100:
            detail = detail[:97] + "..."
        lines.append(f"  hyperbolicity {e['check']}: {e['status']} ({detail})")
    sm = d["smallness"]
    if sm:
        pairs = ", ".join("{" + ", ".join(p) + "}" for p in sm["checked_pairs"])
        lines.append(f"  smallness: {sm['verdict']} for pairs {pairs}")
        if trace:
            for r in sm["trace"]:
                lines.append(f"    pair ({', '.join(r['pair'])}): {r['verdict']}")
                for c in r["trace"]:
                    solved = "" if c["solved"] is None else f" at {c['solved']}"
                    lines.append(f"      row {c['row']} [{c['variant']}, pair {c['order']}]: {c['status']}{solved}")
    return "\n".join(lines)


def _cmd_certify(args):
    if args.cert_command == "lens":
        k = args.k
        if k is None:
            k = next(admissible_k(lens_space(args.p, args.q)))
        cert = certify_lens(args.p, args.q, k)
    else:
        exc = load_exceptional_set(args.exceptional) if args.exceptional else None
        cert = certify_spherical(args.a3, args.b3, exc)
    return _cert_exit(cert), _render_cert(cert, args.trace), cert.as_dict()


def _cmd_verify(args):
    doc = json.loads(Path(args.certificate).read_text("utf-8"))
    ok = verify_certificate(doc)
    verdict = doc.get("verdict")
    text = f"replay {'matches' if ok else 'DIFFERS'}; recorded verdict {verdict}"
    out = {"replay_matches": ok, "verdict": verdict}
    if not ok:
        return 1, text, out
    return (0 if verdict == CERTIFIED else 1), text, out


def _cmd_sweep(args):
    report = sweep_verify(load_config(args.config))
    return (0 if report.ok else 1), report.render(), report.as_dict()


COMMANDS = {
    "cf": _cmd_cf,
    "link": _cmd_link,
    "table": _cmd_table,
    "check-pair": _cmd_check_pair,
    "certify": _cmd_certify,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def _default(o):
    if isinstance(o, Fraction):
        return slope_str(o)
    raise TypeError(f"not JSON serializable: {o!r}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        code, text, doc = COMMANDS[args.command](args)
    except (UsageError, SmallKnotsError, OSError, json.JSONDecodeError) as exc:
        message = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {message}", file=stderr)
        if want_json:
            print(json.dumps({"error": message, "kind": type(exc).__name__}), file=stdout)
        return 2
    if want_json:
        print(json.dumps(doc, indent=2, ensure_ascii=False, default=_default), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main():
    sys.exit(run())
