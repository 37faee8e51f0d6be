"""Command-line interface: ``lascoux {enumerate,poly,map,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from lascoux import bijection
from lascoux.compositions import all_compositions, format_composition, parse_composition
from lascoux.diagrams import DEFAULT_CAP, DiagramPair, canonical_order, kd, kkd
from lascoux.kernels import ResourceLimit
from lascoux.labeling import label
from lascoux.polynomials import (
    key_polynomial_kd,
    key_polynomial_rssyt,
    lascoux_polynomial_kkd,
    lascoux_polynomial_rsvt,
)
from lascoux.tableaux import Rsvt, decode, encode, rssyt_set, rsvt_set

SCHEMA = "lascoux/v1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _color_ok(stream):
    return not os.environ.get("NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _ghost_glyph(stream):
    return "\x1b[31mX\x1b[0m" if _color_ok(stream) else "X"


def _composition(text):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj, out):
    json.dump(obj, out, sort_keys=True)
    out.write("\n")


def _listing(alpha, which, max_excess, cap):
    """``(kind, items)`` in canonical order for one enumeration set."""
    if which in ("kd", "kkd"):
        pairs = canonical_order(kd(alpha, cap) if which == "kd" else kkd(alpha, cap))
        if max_excess is not None:
            pairs = [p for p in pairs if p.ex <= max_excess]
        return "pair", pairs
    if which == "kt":
        return "kt", [label(p, alpha) for p in canonical_order(kd(alpha, cap))]
    tabs = rssyt_set(alpha) if which == "rssyt" else rsvt_set(alpha, max_excess)
    return "tableau", sorted(tabs, key=lambda t: encode(t).sort_key())


def cmd_enumerate(args, out):
    alpha = args.alpha
    kind, items = _listing(alpha, args.set, args.max_excess, args.cap)
    n = len(alpha)
    if args.format == "json":
        if kind == "kt":
            payload = [sorted([c, r, i] for (c, r), i in t.filling.items()) for t in items]
        else:
            payload = [x.to_json() for x in items]
        _dump(
            {
                "schema": SCHEMA,
                "alpha": list(alpha),
                "set": args.set,
                "max_excess": args.max_excess,
                "count": len(items),
                "items": payload,
            },
            out,
        )
        return EXIT_OK
    out.write(f"# {args.set}({format_composition(alpha)}): {len(items)}\n")
    ghost = _ghost_glyph(out)
    for idx, x in enumerate(items, 1):
        out.write(f"[{idx}]\n")
        if kind == "pair":
            art = x.render(rows=n, ghost=ghost)
        elif kind == "kt":
            art = x.render(rows=n)
        else:
            art = x.render()
        out.write((art if art.strip() else "(empty)") + "\n")
    return EXIT_OK


def _poly_routes(alpha, kind, route, max_excess, cap):
    if kind == "key":
        routes = {"diagram": lambda: key_polynomial_kd(alpha, cap), "tableau": lambda: key_polynomial_rssyt(alpha)}
    else:
        routes = {
            "diagram": lambda: lascoux_polynomial_kkd(alpha, max_excess, cap),
            "tableau": lambda: lascoux_polynomial_rsvt(alpha, max_excess),
        }
    wanted = ["diagram", "tableau"] if route == "both" else [route]
    return {r: routes[r]() for r in wanted}


def cmd_poly(args, out):
    polys = _poly_routes(args.alpha, args.kind, args.route, args.max_excess, args.cap)
    values = list(polys.values())
    equal = all(p == values[0] for p in values)
    if args.format == "json":
        obj = {
            "schema": SCHEMA,
            "alpha": list(args.alpha),
            "kind": args.kind,
            "max_excess": args.max_excess,
            "routes": {r: p.to_json() for r, p in polys.items()},
            "monomials": len(values[0]),
            "terms": values[0].coefficient_sum(),
        }
        if args.route == "both":
            obj["equal"] = equal
        _dump(obj, out)
    else:
        for r, p in polys.items():
            prefix = f"{r}: " if len(polys) > 1 else ""
            out.write(f"{prefix}{p}\n")
        if args.route == "both":
            p = values[0]
            out.write(f"routes {'equal' if equal else 'DIFFER'} ({p.coefficient_sum()} terms, {len(p)} monomials)\n")
    return EXIT_OK if equal else EXIT_FAIL


def _read_input(spec):
    if spec == "-":
        text = sys.stdin.read()
    elif os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
    else:
        text = spec
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input is not valid JSON: {exc}") from None


def cmd_map(args, out):
    obj = _read_input(args.input)
    try:
        if args.dir == "phi" and "boxes" in obj:
            source = encode(Rsvt.from_json(obj))
        else:
            source = DiagramPair.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read input object: {exc}") from None
    trace = [] if args.trace else None
    fn = bijection.psi if args.dir == "psi" else bijection.phi
    try:
        image = fn(source, args.alpha, trace=trace)
    except bijection.NotMember as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        rec = {"schema": SCHEMA, "alpha": list(args.alpha), "dir": args.dir, "input": source.to_json(), "image": image.to_json()}
        if args.dir == "psi":
            rec["tableau"] = decode(image).to_json()
        if trace is not None:
            rec["trace"] = trace
        _dump(rec, out)
        return EXIT_OK
    n = len(args.alpha)
    ghost = _ghost_glyph(out)
    out.write(source.render(rows=n, ghost=ghost) + "\n->\n" + image.render(rows=n, ghost=ghost) + "\n")
    if args.dir == "psi":
        out.write("tableau:\n" + decode(image).render() + "\n")
    for step in trace or ():
        out.write(f"{'  ' * step['depth']}{step['op']}_{step['g_or_k']} -> partner {step['partner']}\n")
    return EXIT_OK


def _verify_one(job):
    alpha, max_excess, cap = job
    rep = bijection.verify_bijection(alpha, max_excess, cap=cap)
    kappa_kd, kappa_tab = key_polynomial_kd(alpha, cap), key_polynomial_rssyt(alpha)
    lascoux = lascoux_polynomial_kkd(alpha, max_excess, cap)
    rec = rep.to_json()
    rec["key_routes_equal"] = kappa_kd == kappa_tab
    rec["beta_zero_is_key"] = lascoux.specialize_beta(0) == kappa_kd
    rec["ok"] = rec["ok"] and rec["key_routes_equal"] and rec["beta_zero_is_key"]
    return rec


def cmd_verify(args, out):
    if args.n < 0 or args.max_entry < 0 or args.jobs < 1:
        raise UsageError("--n, --max-entry must be >= 0 and --jobs >= 1")
    alphas = all_compositions(args.n, args.max_entry)
    jobs = [(a, args.max_excess, args.cap) for a in alphas]
    if args.jobs == 1:
        results = [_verify_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs, chunksize=1))
    ok = all(r["ok"] for r in results)
    _dump(
        {
            "schema": SCHEMA,
            "n": args.n,
            "max_entry": args.max_entry,
            "max_excess": args.max_excess,
            "count": len(results),
            "failures": sum(not r["ok"] for r in results),
            "ok": ok,
            "results": results,
        },
        out,
    )
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="lascoux", description="Key and Lascoux polynomial combinatorics.")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="closure state cap (default 10^6)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list KD, KKD, RSSYT, RSVT or KT of a composition")
    e.add_argument("alpha", type=_composition)
    e.add_argument("--set", choices=["kd", "kkd", "rssyt", "rsvt", "kt"], default="kd")
    e.add_argument("--max-excess", type=int, default=None)
    e.add_argument("--format", choices=["ascii", "json"], default="ascii")
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("poly", help="key or Lascoux polynomial")
    q.add_argument("alpha", type=_composition)
    q.add_argument("--kind", choices=["key", "lascoux"], default="key")
    q.add_argument("--max-excess", type=int, default=None, help="truncate to beta-degree <= this")
    q.add_argument("--route", choices=["tableau", "diagram", "both"], default="both")
    q.add_argument("--format", choices=["text", "json"], default="text")
    q.set_defaults(func=cmd_poly)

    m = sub.add_parser("map", help="apply psi or phi to one object")
    m.add_argument("alpha", type=_composition)
    m.add_argument("--dir", choices=["psi", "phi"], default="psi")
    m.add_argument("--input", required=True, help="JSON text, a file path, or - for stdin")
    m.add_argument("--trace", action="store_true")
    m.add_argument("--format", choices=["ascii", "json"], default="json")
    m.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", help="sweep all compositions and check the bijection")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--max-entry", type=int, required=True)
    v.add_argument("--max-excess", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "max_excess", None) is not None and args.max_excess < 0:
        print("lascoux: --max-excess must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"lascoux: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"lascoux: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
