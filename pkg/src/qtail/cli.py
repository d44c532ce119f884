"""Command line interface: ``qtail {compute,tail,head,series,check}``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 computation error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import series as ser
from .braid import load_named_braids, parse_braid, torus_braid
from .errors import BraidRangeError, BraidSyntaxError, MethodMismatch, QTailError
from .qlaurent import Q, SignedMonomial, canonical
from .series import TruncatedSeries
from .tails import (METHODS, braid_source, multi_head_extract, multi_tail_extract,
                    torus_source)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_spec(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--braid", help='braid word such as "3: 1 -2 1 -2"')
    g.add_argument("--knot", help="name of a bundled braid (see data/braids.txt)")
    g.add_argument("--torus", nargs=2, type=int, metavar=("M", "P"),
                   help="(m, p) torus knot or link; p < 0 is the negative one")
    p.add_argument("--method", choices=METHODS, default="statesum")


def _parser():
    ap = argparse.ArgumentParser(prog="qtail", description="Colored Jones polynomials, heads and tails.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="colored Jones polynomial J_N")
    _add_spec(p)
    p.add_argument("--color", type=int, required=True, metavar="N")
    p.add_argument("--raw", action="store_true", help="print J_N itself, not its canonical form")
    p.add_argument("--json", action="store_true")

    for verb in ("tail", "head"):
        p = sub.add_parser(verb, help=f"{verb} extraction with stabilization check")
        _add_spec(p)
        p.add_argument("--nmax", type=int, default=6)
        p.add_argument("--order", type=int, default=None, help="defaults to --nmax")
        p.add_argument("--parity", type=int, choices=(1, 2), default=1)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("series", help="named q-series to a given order")
    p.add_argument("name", choices=("theta", "false-theta", "theta-product", "euler",
                                    "andrews-gordon", "p200"))
    p.add_argument("--a", help="signed monomial such as -q^2")
    p.add_argument("--b", help="signed monomial such as -q")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--form", choices=("alternating", "entry9", "p200"), default="p200")
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="verify an identity; prints PASS or FAIL")
    p.add_argument("name", choices=("andrews-gordon", "p200", "jacobi", "crossmethod", "fourp"))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--order", type=int, default=30)
    return ap


def _source(args):
    if args.torus:
        return torus_source(args.torus[0], args.torus[1], args.method)
    if args.knot:
        named = load_named_braids()
        if args.knot not in named:
            raise UsageError(f"unknown knot {args.knot!r}; known: {', '.join(sorted(named))}")
        b = named[args.knot]
    else:
        b = parse_braid(args.braid)
    return braid_source(b, args.method)


def _shift_text(e: int) -> str:
    if e % Q == 0:
        return str(e // Q)
    return str(Fraction(e, Q))


def cmd_compute(args, out):
    if args.color < 1:
        raise UsageError("--color must be >= 1")
    value = _source(args)(args.color)
    if isinstance(value, TruncatedSeries):
        print(json.dumps(value.to_json()) if args.json else str(value), file=out)
        return EXIT_OK
    if args.raw:
        print(json.dumps(value.to_json()) if args.json else str(value), file=out)
        return EXIT_OK
    cf = canonical(value)
    if args.json:
        print(json.dumps(cf.normalized.to_json()), file=out)
    else:
        print(f"canonical: {cf.normalized}", file=out)
        print(f"sign: {cf.sign}", file=out)
        print(f"shift: {_shift_text(cf.shift)}", file=out)
    return EXIT_OK


def cmd_extract(args, out):
    if args.nmax < 1:
        raise UsageError("--nmax must be >= 1")
    order = args.order if args.order is not None else args.nmax
    if order < 1:
        raise UsageError("--order must be >= 1")
    fn = multi_head_extract if args.verb == "head" else multi_tail_extract
    reports = fn(_source(args), args.nmax, order, args.parity)
    if args.json:
        obj = [r.to_json() for r in reports]
        print(json.dumps(obj[0] if args.parity == 1 else obj), file=out)
        return EXIT_OK
    labels = ["odd N", "even N"] if args.parity == 2 else [None]
    for i, (label, r) in enumerate(zip(labels, reports)):
        if i:
            print(file=out)
        if label:
            print(f"[{label}]", file=out)
        print(r, file=out)
    return EXIT_OK


def _monomial(text, flag):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return SignedMonomial.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from e


def cmd_series(args, out):
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    n = args.order
    if args.name == "theta":
        s = ser.theta_f(_monomial(args.a, "--a"), _monomial(args.b, "--b"), n)
    elif args.name == "theta-product":
        s = ser.theta_f_product(_monomial(args.a, "--a"), _monomial(args.b, "--b"), n)
    elif args.name == "false-theta":
        s = ser.false_theta_psi(_monomial(args.a, "--a"), _monomial(args.b, "--b"), n)
    elif args.name == "euler":
        s = ser.euler_inf(n)
    elif args.name == "andrews-gordon":
        s = ser.andrews_gordon_rhs(args.k, n)
    else:
        s = ser.ramanujan_p200(args.form, n)
    print(json.dumps(s.to_json()) if args.json else str(s), file=out)
    return EXIT_OK


def _compare(label, lhs: TruncatedSeries, rhs: TruncatedSeries, out) -> bool:
    order = min(lhs.order, rhs.order)
    a, b = lhs.truncate(order).coefficients(), rhs.truncate(order).coefficients()
    for e in range(order):
        if a[e] != b[e]:
            print(f"FAIL {label}: first mismatch at q^{e}: {a[e]} != {b[e]}", file=out)
            return False
    return True


def _theta(a_exp: int, b_exp: int, order: int) -> TruncatedSeries:
    """f(-q^a, -q^b)."""
    return ser.theta_f(SignedMonomial(-1, Q * a_exp), SignedMonomial(-1, Q * b_exp), order)


def _check_andrews_gordon(args, out):
    if args.k < 2:
        raise UsageError("--k must be >= 2")
    k, n = args.k, args.order
    ok = _compare(f"andrews-gordon k={k}", ser.andrews_gordon_rhs(k, n), _theta(2 * k, 1, n), out)
    return ok, f"andrews-gordon k={k} to order {n}"


def _check_p200(args, out):
    n = args.order
    forms = [ser.ramanujan_p200(f, n) for f in ("alternating", "entry9", "p200")]
    ok = (_compare("p200 alternating/entry9", forms[0], forms[1], out)
          and _compare("p200 entry9/p200", forms[1], forms[2], out))
    return ok, f"p200 three forms to order {n}"


def _check_jacobi(args, out):
    n = args.order
    pairs = [("-q^2", "-q"), ("-q^4", "-q"), ("q", "q"), ("q^3", "q^5"), ("-q", "-q")]
    ok = True
    for a, b in pairs:
        ma, mb = SignedMonomial.parse(a), SignedMonomial.parse(b)
        ok = ok and _compare(f"jacobi f({a},{b})", ser.theta_f(ma, mb, n),
                             ser.theta_f_product(ma, mb, n), out)
    return ok, f"jacobi triple product on {len(pairs)} pairs to order {n}"


def _check_crossmethod(args, out):
    from .skein import torus2m_jones
    from .statesum import jones_statesum
    from .torusformulas import hikami_jones, morton_2odd, psi_jones

    def canon(p):
        return canonical(p).normalized

    for m in (3, -3, 4, -4, 5, -5, 7, -7):
        for N in range(1, args.nmax + 1):
            ref = canon(jones_statesum(torus_braid(2, m), N))
            others = {"skein": torus2m_jones(m, N)}
            k = abs(m) // 2
            if m % 2:
                mor = morton_2odd(k, N)
                others["morton"] = mor if m < 0 else mor.invert()
                others["psi"] = psi_jones(2, m, N)
            else:
                hik = hikami_jones(k, N)
                others["hikami"] = hik if m < 0 else hik.invert()
            for name, val in others.items():
                got = canon(val)
                if got != ref:
                    e = (ref - got).min_exp
                    print(f"FAIL crossmethod T(2,{m}) N={N} statesum vs {name}: first mismatch at "
                          f"q^{_shift_text(e)}: {ref.coeff(e)} != {got.coeff(e)}", file=out)
                    return False, ""
    return True, f"crossmethod (2,m) m in +-3,+-4,+-5,+-7, N <= {args.nmax}"


def _check_fourp(args, out):
    p, n = args.p, args.order
    if p % 2 == 0 or p < 3:
        raise UsageError("--p must be odd and >= 3")
    half = (n + 1) // 2
    # each parity class verifies about N/2 coefficients per step of 2
    odd, even = multi_head_extract(torus_source(4, p, "psi"), 2 * half + 3, half, 2)
    for r in (odd, even):
        if r.stabilized.order < half:
            print(f"FAIL fourp p={p}: head stabilized only to order {r.stabilized.order}", file=out)
            return False, ""
    lhs = odd.stabilized.poly.scale_exponents(2) - even.stabilized.poly.scale_exponents(2).shift(Q * (p - 2))
    ok = _compare(f"fourp p={p}", TruncatedSeries.of(lhs, n), _theta(2, p - 2, n), out)
    return ok, f"fourp p={p} to order {n}"


CHECKS = {
    "andrews-gordon": _check_andrews_gordon,
    "p200": _check_p200,
    "jacobi": _check_jacobi,
    "crossmethod": _check_crossmethod,
    "fourp": _check_fourp,
}


def cmd_check(args, out):
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    ok, what = CHECKS[args.name](args, out)
    if ok:
        print(f"PASS {what}", file=out)
        return EXIT_OK
    return EXIT_FAIL


def _check_threads():
    env = os.environ.get("QTAIL_THREADS")
    if env is None:
        return
    try:
        ok = int(env) >= 1
    except ValueError:
        ok = False
    if not ok:
        raise UsageError("QTAIL_THREADS must be a positive integer")


COMMANDS = {"compute": cmd_compute, "tail": cmd_extract, "head": cmd_extract,
            "series": cmd_series, "check": cmd_check}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        _check_threads()
        return COMMANDS[args.verb](args, out)
    except (UsageError, MethodMismatch, BraidSyntaxError, BraidRangeError) as e:
        print(f"qtail: error: {e}", file=err)
        return EXIT_USAGE
    except QTailError as e:
        print(f"qtail: {type(e).__name__}: {e}", file=err)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
