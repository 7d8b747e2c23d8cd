"""Batch command line: ``python -m fiblucas <command> ...``.

Every invocation writes one JSON report to stdout (``--format csv`` is
available for ``seq`` and ``identity``). Exit status: 0 for PASS/INFO,
1 for FAIL, 2 for usage or precondition errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import classification as cl
from . import numthy, orders, quaternion, sequences, symbol3
from .sequences import GLParams, IdentityId, PreconditionError, SeqParams

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RATIONAL = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"not a rational of the form num or num/den: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator: {text!r}") from None


def cyclotomic(text: str) -> symbol3.CycRat:
    """``a`` or ``a:b`` meaning a + b*eps, each part a rational."""
    parts = text.split(":")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected a or a:b, got {text!r}")
    return symbol3.CycRat(*(rational(p) for p in parts))


def _list(conv, count: int):
    def parse(text: str):
        items = [conv(t) for t in text.split(",")]
        if len(items) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated values, got {len(items)}")
        return items

    return parse


def _q(x) -> str:
    return str(Fraction(x))


def _cyc(c: symbol3.CycRat) -> str:
    return f"{c.a}:{c.b}" if c.b else str(c.a)


def _place(v) -> str:
    return str(v)


def _classification(c: cl.Classification) -> dict:
    ev = c.evidence
    if isinstance(ev, cl.ConicPoint):
        evidence = {"kind": "conic_point", "x": _q(ev.x), "y": _q(ev.y), "z": _q(ev.z)}
    elif isinstance(ev, cl.PositiveDefiniteNorm):
        evidence = {"kind": "positive_definite_norm"}
    elif isinstance(ev, cl.Mod4Obstruction):
        evidence = {"kind": "mod4_obstruction", "m": ev.m, "residue": ev.residue}
    else:
        evidence = {"kind": "hilbert", "symbols": [[_place(v), s] for v, s in ev.symbols]}
    return {
        "alpha": _q(c.alpha),
        "beta": _q(c.beta),
        "verdict": c.verdict.value,
        "evidence": evidence,
        "rechecked": c.recheck(),
    }


def _combination(comb: Optional[orders.Combination]):
    if comb is None:
        return None
    return {"unit": comb.unit, "terms": [[t.n, t.p, t.q] for t in comb.terms]}


def errata_records() -> list[dict]:
    """Formula repairs, each with a counterexample to the printed form and
    a confirmation of the repaired one."""
    m, a, b = 5, 2, 1
    x, y, z = numthy.pythagorean_family(m, a, b)
    printed_y = 2 * m * a * b

    p1 = SeqParams(1)
    rep = sequences.identity_check(IdentityId.P32_II, p1, 1)
    printed_rhs = (-1) ** 1 * p1.d

    g1, g2 = orders.GeneratorTerm(1, 1, 1), orders.GeneratorTerm(2, 1, 1)
    product = orders.generator(p1, g1) * orders.generator(p1, g2)
    fixed = orders.eval_combination(p1, orders.scalar_product_decompose(p1, g1, g2))
    printed = orders.eval_combination(p1, orders.printed_scalar_decompose(p1, g1, g2))

    alg = quaternion.QuatAlgebra(-1, 2)
    e2, e3, e4 = alg.basis()[1:]
    # (e2 e3) e2 = e4 e2 read off the printed cell, against e2 (e3 e2) = e2 (-e4)
    left_printed = e2.scale(-alg.alpha)
    right = e2 * (e3 * e2)

    return [
        {
            "id": "pythagorean_family_y",
            "statement": numthy.PYTHAGOREAN_ERRATUM,
            "counterexample": {
                "m": m, "a": a, "b": b,
                "printed": [x, printed_y, z],
                "holds": x * x + m * printed_y**2 == z * z,
            },
            "confirmation": {"repaired": [x, y, z], "holds": x * x + m * y * y == z * z},
        },
        {
            "id": "cassini_b_sign",
            "statement": sequences.CASSINI_B_ERRATUM,
            "counterexample": {
                "l": 1, "n": 1, "lhs": _q(rep.lhs), "printed_rhs": printed_rhs,
                "holds": rep.lhs == printed_rhs,
            },
            "confirmation": {"repaired_rhs": _q(rep.rhs), "holds": rep.holds},
        },
        {
            "id": "decomposition_sign",
            "statement": orders.DECOMPOSITION_ERRATUM,
            "counterexample": {"product": product, "printed": printed, "holds": printed == product},
            "confirmation": {"repaired": fixed, "holds": fixed == product},
        },
        {
            "id": "quaternion_table_e4e2",
            "statement": quaternion.TABLE_ERRATUM,
            "counterexample": {
                "alpha": -1, "beta": 2,
                "(e2*e3)*e2 via printed cell": [_q(v) for v in left_printed.c],
                "e2*(e3*e2)": [_q(v) for v in right.c],
                "holds": left_printed == right,
            },
            "confirmation": {
                "e4*e2": [_q(v) for v in (e4 * e2).c],
                "holds": (e2 * e3) * e2 == right == e4 * e2,
            },
        },
    ]


def _report(command: str, inputs: dict, results: list, status: str, errata=()) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "errata": list(errata),
        "status": status,
    }


def cmd_seq(args) -> dict:
    params = SeqParams(args.l)
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    if args.kind == "a":
        values = [sequences.seq_a(params, n) for n in range(args.start, args.stop + 1)]
    elif args.kind == "b":
        values = [sequences.seq_b(params, n) for n in range(args.start, args.stop + 1)]
    else:
        if args.p is None or args.q is None:
            raise UsageError("--kind u requires --p and --q")
        gl = GLParams(args.p, args.q)
        values = [sequences.u_number(params, gl, n) for n in range(args.start, args.stop + 1)]
    results = [{"n": n, "value": v} for n, v in zip(range(args.start, args.stop + 1), values)]
    inputs = {"l": args.l, "kind": args.kind, "from": args.start, "to": args.stop, "p": args.p, "q": args.q}
    return _report("seq", inputs, results, "INFO")


def cmd_identity(args) -> dict:
    params = SeqParams(args.l)
    ident = IdentityId(args.id)
    gl = None
    if ident is IdentityId.R35:
        if args.p is None or args.q is None:
            raise UsageError("R35 requires --p and --q")
        gl = GLParams(args.p, args.q)
    max_m = args.max_n if args.max_m is None else args.max_m
    ms = range(0, max_m + 1) if ident in sequences.TWO_INDEX else [None]
    results = []
    for n in range(sequences.MIN_N[ident], args.max_n + 1):
        for m in ms:
            r = sequences.identity_check(ident, params, n, m, gl)
            results.append(
                {
                    "n": n,
                    "m": m,
                    "lhs": _q(r.lhs),
                    "rhs": _q(r.rhs),
                    "status": "PASS" if r.holds else "FAIL",
                }
            )
    errata = [sequences.CASSINI_B_ERRATUM] if ident is IdentityId.P32_II else []
    status = "PASS" if all(r["status"] == "PASS" for r in results) else "FAIL"
    inputs = {"id": ident.value, "l": args.l, "max_n": args.max_n, "max_m": max_m if ms != [None] else None,
              "p": args.p, "q": args.q}
    return _report("identity", inputs, results, status, errata)


def cmd_classify(args) -> dict:
    c = cl.classify(args.alpha, args.beta, args.height)
    inputs = {"alpha": _q(args.alpha), "beta": _q(args.beta), "height": args.height}
    return _report("classify", inputs, [_classification(c)], "INFO")


def cmd_family(args) -> dict:
    c = cl.family_certificate(args.case, SeqParams(args.l), args.n)
    hilbert = cl.classify(c.alpha, c.beta, height=1)
    rec = _classification(c)
    rec["hilbert_verdict"] = hilbert.verdict.value
    ok = rec["rechecked"] and hilbert.verdict is c.verdict
    errata = [numthy.PYTHAGOREAN_ERRATUM] if args.case.lower() == "viii" else []
    inputs = {"case": args.case.lower(), "l": args.l, "n": args.n}
    return _report("family", inputs, [rec], "PASS" if ok else "FAIL", errata)


def cmd_quat_mul(args) -> dict:
    alg = quaternion.QuatAlgebra(args.alpha, args.beta)
    if len(args.coeffs) != 2:
        raise UsageError("quat-mul needs --coeffs exactly twice")
    x, y = (alg.element(c) for c in args.coeffs)
    prod = x * y
    rec = {
        "x": [_q(v) for v in x.c],
        "y": [_q(v) for v in y.c],
        "product": [_q(v) for v in prod.c],
        "norm_product": _q(prod.norm()),
        "norm_x_times_norm_y": _q(x.norm() * y.norm()),
    }
    inputs = {"alpha": _q(args.alpha), "beta": _q(args.beta)}
    return _report("quat-mul", inputs, [rec], "INFO")


def cmd_sym_mul(args) -> dict:
    alg = symbol3.SymAlgebra(args.alpha1, args.alpha2)
    if len(args.coeffs) != 2:
        raise UsageError("sym-mul needs --coeffs exactly twice")
    u, v = (alg.element(c) for c in args.coeffs)
    prod = u * v
    rec = {
        "u": [_cyc(c) for c in u.coeffs],
        "v": [_cyc(c) for c in v.coeffs],
        "product": [_cyc(c) for c in prod.coeffs],
        "basis": list(symbol3.BASIS_LABELS),
    }
    inputs = {"alpha1": _cyc(alg.alpha1), "alpha2": _cyc(alg.alpha2)}
    return _report("sym-mul", inputs, [rec], "INFO")


def cmd_order_check(args) -> dict:
    params = SeqParams(args.l)
    if args.structure == "quat":
        if args.alpha.b or args.beta.b:
            raise UsageError("quaternion parameters must be rational integers")
        alg = quaternion.QuatAlgebra(args.alpha.a, args.beta.a)
    else:
        alg = symbol3.SymAlgebra(args.alpha, args.beta)
    rep = orders.closure_check(params, alg, args.trials, args.seed)
    results = [
        {
            "trial": r.index,
            "g1": [r.g1.n, r.g1.p, r.g1.q],
            "g2": [r.g2.n, r.g2.p, r.g2.q],
            "decomposition_ok": r.decomposition_ok,
            "membership_ok": r.membership_ok,
            "witness": _combination(r.witness),
        }
        for r in rep.records
    ]
    inputs = {
        "structure": args.structure,
        "l": args.l,
        "generator_scalar": params.d,
        "alpha": _cyc(args.alpha),
        "beta": _cyc(args.beta),
        "trials": args.trials,
        "seed": args.seed,
    }
    return _report("order-check", inputs, results, "PASS" if rep.passed else "FAIL",
                   [orders.DECOMPOSITION_ERRATUM])


def cmd_errata(args) -> dict:
    recs = errata_records()
    ok = all(r["confirmation"]["holds"] for r in recs)
    return _report("errata", {}, recs, "INFO" if ok else "FAIL", [r["statement"] for r in recs])


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fiblucas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seq", help="terms of a_n, b_n or u_n^{p,q}")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--kind", choices=("a", "b", "u"), required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("identity", help="sweep one identity over n (and m)")
    p.add_argument("--id", choices=[i.value for i in IdentityId], required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("classify", help="split or division for H_Q(alpha, beta)")
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    p.add_argument("--height", type=int, default=cl.DEFAULT_HEIGHT)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("family", help="certificate for one family case i..xi")
    p.add_argument("--case", choices=cl.FAMILY_CASES, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("quat-mul", help="product of two quaternions")
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    p.add_argument("--coeffs", type=_list(rational, 4), action="append", required=True,
                   help="four rationals; give twice")
    p.set_defaults(func=cmd_quat_mul)

    p = sub.add_parser("sym-mul", help="product of two degree-3 symbol elements")
    p.add_argument("--alpha1", type=cyclotomic, required=True, help="a or a:b for a + b*eps")
    p.add_argument("--alpha2", type=cyclotomic, required=True)
    p.add_argument("--coeffs", type=_list(cyclotomic, 9), action="append", required=True,
                   help="nine a or a:b entries on 1,x,x^2,y,xy,x^2y,y^2,xy^2,x^2y^2; give twice")
    p.set_defaults(func=cmd_sym_mul)

    p = sub.add_parser("order-check", help="random closure trials for the generated orders")
    p.add_argument("--structure", choices=("quat", "symbol"), required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=cyclotomic, required=True)
    p.add_argument("--beta", type=cyclotomic, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_order_check)

    p = sub.add_parser("errata", help="repairs applied to printed formulas")
    p.set_defaults(func=cmd_errata)
    return parser


def _csv(report: dict) -> str:
    rows = report["results"]
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "trials", 0) < 0:
            raise UsageError("--trials must be >= 0")
        report = args.func(args)
    except (UsageError, PreconditionError, numthy.FactorizationIncomplete) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if getattr(args, "format", "json") == "csv":
        out.write(_csv(report))
    else:
        out.write(json.dumps(report, indent=2) + "\n")
    return EXIT_FAIL if report["status"] == "FAIL" else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
