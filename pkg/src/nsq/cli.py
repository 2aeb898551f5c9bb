"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource cap
exceeded, 4 internal cross-check failure.  Non-coprime constant-term
instances fall back to the series path with a warning and exit 0.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import ctengine, quotient, rgf, semigroup
from .errors import (CapExceeded, CertificationFailed, InternalMismatch,
                     NonCoprimeFactors, NsqError)
from .exactalg import series_from_rational
from .semigroup import GeneratorList

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(payload: dict, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _ints_line(values) -> str:
    return " ".join(str(v) for v in values)


def _format_poly(coeffs) -> str:
    terms = []
    for e, c in enumerate(coeffs):
        if not c:
            continue
        body = str(abs(c)) if e == 0 else (
            ("" if abs(c) == 1 else f"{abs(c)}*") + ("x" if e == 1 else f"x^{e}"))
        terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0"
    head = terms[0].replace("+ ", "", 1).replace("- ", "-", 1)
    return " ".join([head] + terms[1:])


def _display_polys(f):
    num, den = f.num.coeffs, f.den.coeffs
    first = next((c for c in den if c), None)
    if first is not None and first < 0:
        num = tuple(-c for c in num)
        den = tuple(-c for c in den)
    return num, den


def _format_ratfun(f) -> str:
    num, den = _display_polys(f)
    return f"({_format_poly(num)})/({_format_poly(den)})"


def _ratfun_json(f) -> dict:
    num, den = _display_polys(f)
    return {"num": {str(e): str(c) for e, c in enumerate(num) if c},
            "den": {str(e): str(c) for e, c in enumerate(den) if c}}


def _caps(args) -> tuple[int, int]:
    sieve = args.sieve_cap or int(os.environ.get("NSQ_SIEVE_CAP",
                                                 semigroup.DEFAULT_SIEVE_CAP))
    tp = args.tp_cap or int(os.environ.get("NSQ_TP_CAP",
                                           quotient.DEFAULT_TP_CAP))
    return sieve, tp


def _add_common(p, need_p=False):
    p.add_argument("--gens", required=True, help="comma-separated generators")
    if need_p:
        p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--sieve-cap", type=int, default=None)
    p.add_argument("--tp-cap", type=int, default=None)


def build_parser() -> _Parser:
    ap = _Parser(prog="nsq", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("membership")
    _add_common(p)
    p.add_argument("--bound", type=int, default=None)

    for name in ("frobenius", "gaps", "minimal-gens"):
        _add_common(sub.add_parser(name))

    p = sub.add_parser("apery")
    _add_common(p)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("denumerant")
    _add_common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--trunc", type=int, default=None)

    p = sub.add_parser("quotient")
    p.add_argument("action", choices=("gens", "minimal", "membership",
                                      "frobenius", "table1"))
    _add_common(p, need_p=True)
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("tp")
    _add_common(p, need_p=True)

    p = sub.add_parser("rgf")
    p.add_argument("action", choices=("series", "rational", "frobenius", "gens"))
    _add_common(p, need_p=True)
    p.add_argument("--trunc", type=int, default=20)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("ct")
    p.add_argument("--gens", default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--expr", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--sieve-cap", type=int, default=None)
    p.add_argument("--tp-cap", type=int, default=None)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("verify")
    _add_common(p, need_p=True)
    return ap


def _run_membership(args):
    A = GeneratorList.parse(args.gens)
    sieve, _ = _caps(args)
    t = semigroup.build_membership(A, B=args.bound, cap=sieve)
    members = t.members()
    _emit({"bound": t.bound, "certified": t.certified, "members": members},
          args.format, _ints_line(members))
    return EXIT_OK


def _run_frobenius(args):
    A = GeneratorList.parse(args.gens)
    f = semigroup.frobenius(A, cap=_caps(args)[0])
    _emit({"frobenius": f}, args.format, "NONE" if f is None else str(f))
    return EXIT_OK


def _run_gaps(args):
    A = GeneratorList.parse(args.gens)
    g = semigroup.gaps(A, cap=_caps(args)[0])
    _emit({"gaps": g}, args.format, _ints_line(g))
    return EXIT_OK


def _run_apery(args):
    A = GeneratorList.parse(args.gens)
    ap = semigroup.apery(A, args.m, cap=_caps(args)[0])
    _emit({"m": args.m, "apery": ap}, args.format, _ints_line(ap))
    return EXIT_OK


def _run_minimal(args):
    A = GeneratorList.parse(args.gens)
    mg = semigroup.minimal_generators(A, cap=_caps(args)[0])
    _emit({"minimal_generators": mg}, args.format, _ints_line(mg))
    return EXIT_OK


def _run_denumerant(args):
    A = GeneratorList.parse(args.gens)
    if args.trunc is not None:
        s = semigroup.denumerant_series(A, args.trunc)
        _emit({"series": list(s.coeffs)}, args.format, _ints_line(s.coeffs))
    else:
        if args.n is None:
            raise UsageError("denumerant needs --n or --trunc")
        d = semigroup.denumerant(args.n, A)
        _emit({"n": args.n, "denumerant": d}, args.format, str(d))
    return EXIT_OK


def _run_quotient(args):
    A = GeneratorList.parse(args.gens)
    q = quotient.QuotientSpec(A, args.p)
    sieve, tp_cap = _caps(args)
    if args.action == "gens":
        g = quotient.generators_thm(q, cap=tp_cap)
        _emit({"generators": g}, args.format, _ints_line(g))
    elif args.action == "minimal":
        g = quotient.minimal_quotient_generators(q, cap=sieve)
        _emit({"minimal_generators": g}, args.format, _ints_line(g))
    elif args.action == "membership":
        if args.bound is None:
            raise UsageError("quotient membership needs --bound")
        t = quotient.quotient_membership(q, args.bound, cap=sieve)
        members = t.members()
        _emit({"bound": t.bound, "members": members}, args.format,
              _ints_line(members))
    elif args.action == "frobenius":
        f = quotient.frobenius_quotient(q, cap=sieve)
        _emit({"frobenius": f}, args.format, "NONE" if f is None else str(f))
    else:
        g = quotient.table1_generators(q)
        _emit({"generators": g}, args.format, _ints_line(g))
    return EXIT_OK


def _run_tp(args):
    A = GeneratorList.parse(args.gens)
    q = quotient.QuotientSpec(A, args.p)
    ts = quotient.enumerate_Tp(q, cap=_caps(args)[1])
    rows = [f"({','.join(map(str, x))}) -> {v}"
            for x, v in zip(ts.tuples, ts.values)]
    _emit({"p": ts.p, "gens": list(ts.gens),
           "tuples": [list(x) for x in ts.tuples], "values": list(ts.values)},
          args.format, "\n".join(rows) if rows else "(empty)")
    return EXIT_OK


def _run_rgf(args):
    A = GeneratorList.parse(args.gens)
    if args.action == "series":
        s = rgf.rgf_series(A, args.p, args.trunc)
        _emit({"series": list(s.coeffs)}, args.format, _ints_line(s.coeffs))
        return EXIT_OK
    if args.action == "frobenius":
        f = rgf.frobenius_from_rgf(A, args.p)
        _emit({"frobenius": f}, args.format, "NONE" if f is None else str(f))
        return EXIT_OK
    r = rgf.rgf_rational(A, args.p)
    if args.verify:
        n = r.certified_to
        expanded = series_from_rational(r.to_rational(), n)
        oracle = rgf.rgf_series(A, args.p, n)
        if tuple(expanded.coeffs) != tuple(oracle.coeffs):
            print("verify: closed form disagrees with series", file=sys.stderr)
            return EXIT_INTERNAL
    if args.action == "gens":
        g = rgf.gens_from_rgf(r, A, args.p)
        _emit({"generators": g}, args.format, _ints_line(g))
    else:
        _emit(rgf.to_json_dict(r), args.format, rgf.render_text(r))
    return EXIT_OK


def _run_ct(args):
    if args.expr is not None:
        expr = ctengine.parse_elliott(args.expr)
        f = ctengine.ct_constant_term(expr)
        _emit({"expr": ctengine.render_elliott(expr), "ct": _ratfun_json(f)},
              args.format,
              f"{ctengine.render_elliott(expr)}\nCT = {_format_ratfun(f)}")
        return EXIT_OK
    if args.gens is None or args.p is None:
        raise UsageError("ct needs --expr or both --gens and --p")
    A = GeneratorList.parse(args.gens)
    try:
        f = ctengine.ct_rgf_rational(A, args.p)
    except NonCoprimeFactors:
        print("warning: CT path unavailable; series path used", file=sys.stderr)
        r = rgf.rgf_rational(A, args.p)
        _emit(rgf.to_json_dict(r), args.format, rgf.render_text(r))
        return EXIT_OK
    if args.verify:
        r = rgf.rgf_rational(A, args.p)
        if f != r.to_rational():
            print("verify: CT path disagrees with series path", file=sys.stderr)
            return EXIT_INTERNAL
    _emit({"ct": _ratfun_json(f)}, args.format, _format_ratfun(f))
    return EXIT_OK


def _run_verify(args):
    A = GeneratorList.parse(args.gens)
    q = quotient.QuotientSpec(A, args.p)
    report = quotient.verify_generators(q, cap=_caps(args)[0])
    ok = report.ok
    lines = [f"generators: {_ints_line(report.generators)}",
             f"bound: {report.bound}",
             f"result: {'pass' if ok else 'fail'}"]
    _emit({"ok": ok, "bound": report.bound,
           "generators": list(report.generators),
           "mismatches": list(report.mismatches)},
          args.format, "\n".join(lines))
    return EXIT_OK if ok else EXIT_INTERNAL


_RUNNERS = {
    "membership": _run_membership,
    "frobenius": _run_frobenius,
    "gaps": _run_gaps,
    "apery": _run_apery,
    "minimal-gens": _run_minimal,
    "denumerant": _run_denumerant,
    "quotient": _run_quotient,
    "tp": _run_tp,
    "rgf": _run_rgf,
    "ct": _run_ct,
    "verify": _run_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _RUNNERS[args.cmd](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InternalMismatch, CertificationFailed) as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except NsqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
