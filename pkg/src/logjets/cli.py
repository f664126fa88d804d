"""Command-line frontend.

Exit codes: 0 when every assertion holds, 1 when a theorem assertion
fails, 2 when the input is rejected.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from fractions import Fraction

from .errors import LogJetsError
from .hschmidt import DEFAULT_CAP as HS_CAP, build_hs, omega_presentation
from .jetmult import DEFAULT_CAP as JET_CAP, DivisorRep, RationalPoint
from .jetmult import multiplicity_via_jets, taylor_multiplicity
from .masoncheck import (check_mason, check_mason_corollary, conductor,
                         random_coprime_pair, verify_projective_gluing)
from .polycore import PolyRing, parse_polynomial
from .presentation import load_presentation
from .suite import DEFAULT_SEED, run_suite

EXIT_OK, EXIT_FAILED, EXIT_REJECTED = 0, 1, 2


class _Out:
    """Collects (key, value) pairs and prints them as text or key=value lines."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []

    def text(self, line: str):
        if self.fmt == "text":
            self.lines.append(line)

    def kv(self, key: str, value):
        if self.fmt == "machine":
            self.lines.append(f"{key}={value}")

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.lines:
            stream.write("\n".join(self.lines) + "\n")


def _load(path):
    return load_presentation(path).build()


def cmd_hs(args, out: _Out) -> int:
    L = _load(args.file)
    H = build_hs(L, args.order, cap=args.cap if args.cap is not None else HS_CAP)
    out.text(H.format())
    out.kv("order", H.order)
    out.kv("symbols", " ".join(H.symbols()))
    for k, b in enumerate(H.ideal.basis):
        out.kv(f"ideal.{k}", b)
    if args.show_omega:
        if H.order != 1:
            H = build_hs(L, 1)
        om = omega_presentation(H)
        out.text(str(om))
        out.kv("omega.generators", " ".join(om.generators))
        out.kv("omega.rank", om.rank)
    return EXIT_OK


def _parse_point(text: str, ring: PolyRing):
    try:
        coords = [Fraction(c.strip()) for c in text.split(",")] if text.strip() else []
    except ValueError:
        raise LogJetsError(f"bad point {text!r}: expected comma-separated rationals") from None
    return RationalPoint(ring, coords)


def _fmt_mult(v) -> str:
    return "inf" if v == math.inf else str(v)


def cmd_mult(args, out: _Out) -> int:
    L = _load(args.file)
    R = L.poly_ring
    s = parse_polynomial(args.equation, R)
    D = DivisorRep(s, L.ring)
    p = _parse_point(args.point, R)
    cap = args.cap if args.cap is not None else JET_CAP
    jets = multiplicity_via_jets(D, p, cap)
    jet_text = f">= {jets.value}" if jets.at_least else str(jets.value)
    taylor = taylor_multiplicity(D, p) if D.kind == "free" else None
    status = EXIT_OK
    if taylor is None:
        out.text(f"mult = {jet_text} (jets)")
    else:
        agree = (taylor == jets.value and not jets.at_least) or \
            (jets.at_least and taylor >= jets.value)
        if s.is_zero():
            out.text(f"mult = inf (taylor) / {jet_text} (jets): equation is identically zero")
        elif jets.at_least:
            out.text(f"mult >= {jets.value} (cap reached) / taylor {_fmt_mult(taylor)}")
        elif taylor == jets.value:
            out.text(f"mult = {taylor} (taylor) / {jets.value} (jets)")
        else:
            out.text(f"DISAGREEMENT: taylor {taylor}, jets {jets.value}")
        if not agree:
            status = EXIT_FAILED
        out.kv("taylor", _fmt_mult(taylor))
        out.kv("agree", str(agree).lower())
    out.kv("jets", jet_text.replace(" ", ""))
    out.kv("at_least", str(jets.at_least).lower())
    if jets.witness is not None:
        out.kv("witness", jets.witness)
    return status


def _report(rep, out: _Out, prefix: str):
    out.text(str(rep))
    for k, item in enumerate(rep.items):
        out.kv(f"{prefix}.{k}.assertion", item.label)
        out.kv(f"{prefix}.{k}.value", item.detail)
        out.kv(f"{prefix}.{k}.verdict", "pass" if item.ok else "fail")


def cmd_mason(args, out: _Out) -> int:
    R = PolyRing([args.var])
    ok = True
    if args.random:
        rng = random.Random(args.seed)
        bad = 0
        for _ in range(args.random):
            f, g = random_coprime_pair(R, rng, args.max_degree)
            if not (check_mason(f, g, -(f + g)).ok and check_mason_corollary(f, g).ok):
                bad += 1
        out.text(f"{args.random} random coprime pairs (seed {args.seed}): {bad} violations")
        out.kv("seed", args.seed)
        out.kv("pairs", args.random)
        out.kv("violations", bad)
        ok = bad == 0
    if args.f is not None:
        if args.g is None:
            raise LogJetsError("mason needs two polynomials f and g")
        f = parse_polynomial(args.f, R)
        g = parse_polynomial(args.g, R)
        h = -(f + g) if not args.subtract else -(f - g)
        c = conductor(f * g)
        out.text(str(c))
        out.kv("conductor", c.conductor)
        rep = check_mason(f, g if not args.subtract else -g, h)
        _report(rep, out, "mason")
        cor = check_mason_corollary(f, g, subtract=args.subtract)
        _report(cor, out, "corollary")
        ok &= rep.ok and cor.ok
    elif not args.random:
        raise LogJetsError("mason needs polynomials f and g or --random N")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_glue(args, out: _Out) -> int:
    names = [v.strip() for v in args.vars.split(",")]
    R = PolyRing(names)
    f = parse_polynomial(args.f, R)
    rep = verify_projective_gluing(f, corrupt_chart=args.corrupt_chart, report=True)
    _report(rep, out, "overlap")
    out.kv("glues", str(rep.ok).lower())
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_suite(args, out: _Out) -> int:
    res = run_suite(args.seed, corrupt_gluing=args.corrupt_gluing)
    sys.stdout.write(res.format(args.format))
    return EXIT_OK if res.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")

    p = argparse.ArgumentParser(prog="logjets",
                                description="Log Hasse-Schmidt rings, jet multiplicities "
                                            "and polynomial abc checks.")
    sub = p.add_subparsers(dest="command", required=True)

    hs = sub.add_parser("hs", parents=[common], help="print the order-n log HS presentation")
    hs.add_argument("file")
    hs.add_argument("--order", "-n", type=int, default=1)
    hs.add_argument("--cap", type=int, default=None)
    hs.add_argument("--show-omega", action="store_true")
    hs.set_defaults(func=cmd_hs)

    mu = sub.add_parser("mult", parents=[common], help="multiplicity of a divisor at a point")
    mu.add_argument("file")
    mu.add_argument("--point", required=True, help="comma-separated rational coordinates")
    mu.add_argument("--equation", required=True)
    mu.add_argument("--cap", type=int, default=None)
    mu.set_defaults(func=cmd_mult)

    ma = sub.add_parser("mason", parents=[common], help="Mason-Stothers checks")
    ma.add_argument("f", nargs="?")
    ma.add_argument("g", nargs="?")
    ma.add_argument("--var", default="z")
    ma.add_argument("--subtract", action="store_true", help="check f - g instead of f + g")
    ma.add_argument("--random", type=int, default=0, metavar="N")
    ma.add_argument("--max-degree", type=int, default=8)
    ma.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ma.set_defaults(func=cmd_mason)

    gl = sub.add_parser("glue", parents=[common], help="gluing of dlog forms on projective space")
    gl.add_argument("f")
    gl.add_argument("--vars", default="x0,x1,x2")
    gl.add_argument("--corrupt-chart", type=int, default=None)
    gl.set_defaults(func=cmd_glue)

    su = sub.add_parser("suite", parents=[common], help="run the regression suite")
    su.add_argument("--seed", type=int, default=DEFAULT_SEED)
    su.add_argument("--corrupt-gluing", action="store_true",
                    help="negative control: corrupt the projective gluing case")
    su.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.format)
    try:
        code = args.func(args, out)
    except (LogJetsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
