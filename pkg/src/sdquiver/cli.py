"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .invariants import InvariantRequest, NoPoleViolation, compute
from .quiver import QuiverError, SelfDualQuiver, dim_vectors, load_quiver, self_dual_classes
from .ratfun import ParseError, PoleError, RationalFunction, evaluate
from .series import CONJECTURE_STABILITY, series_report
from .stability import parse_stability
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

KINDS = ("I", "J", "chiJ", "DT")


class InputError(Exception):
    pass


def _column(kind: str, selfdual: bool) -> str:
    return kind + ("sd" if selfdual else "")


def parse_class(text: str, q: SelfDualQuiver) -> tuple[int, ...]:
    """``2``, ``1,1``, ``(1,1)``, ``[1,1]`` or a JSON mapping of vertex ids."""
    raw = text.strip()
    try:
        if raw.startswith("{"):
            return q.dim_vector(json.loads(raw))
        raw = raw.strip("()[]")
        return q.dim_vector([int(x) for x in raw.split(",") if x.strip()])
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"bad class {text!r}: {exc}") from None


def format_class(cls: Sequence[int]) -> str:
    return str(cls[0]) if len(cls) == 1 else "(" + ",".join(map(str, cls)) + ")"


def format_value(value: RationalFunction | Fraction) -> str:
    return str(value)


def _load(args) -> tuple[SelfDualQuiver, object]:
    try:
        q = load_quiver(args.quiver)
    except QuiverError as exc:
        raise InputError("invalid quiver:\n" + "\n".join(f"  {v}" for v in exc.violations)) from None
    except (ValueError, OSError) as exc:
        raise InputError(str(exc)) from None
    try:
        tau = parse_stability(getattr(args, "stability", None), q)
    except (ValueError, OSError) as exc:
        raise InputError(f"bad stability: {exc}") from None
    return q, tau


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_validate(args, out) -> int:
    try:
        q = load_quiver(args.quiver)
    except QuiverError as exc:
        print("invalid quiver", file=out)
        for v in exc.violations:
            print(f"  {v}", file=out)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        raise InputError(str(exc)) from None
    c = q.classification
    vids = [v.id for v in q.vertices]
    aids = [a.id for a in q.arrows]
    print(f"valid self-dual quiver {q}", file=out)
    print(f"  vertices: {len(vids)}, arrows: {len(aids)}", file=out)
    rows = [
        ("Q0+ (fixed, orthogonal)", [vids[i] for i in c.Q0_plus]),
        ("Q0- (fixed, symplectic)", [vids[i] for i in c.Q0_minus]),
        ("Q0 swapped pairs", [f"{vids[i]}<->{vids[q.sigma0[i]]}" for i in c.Q0_tri]),
        ("Q1+ (self-dual arrows)", [aids[a] for a in c.Q1_plus]),
        ("Q1- (self-dual arrows)", [aids[a] for a in c.Q1_minus]),
        ("Q1 swapped pairs", [f"{aids[a]}<->{aids[q.sigma1[a]]}" for a in c.Q1_tri]),
    ]
    for label, members in rows:
        print(f"  {label}: {', '.join(members) if members else '-'}", file=out)
    return EXIT_OK


def cmd_invariant(args, out) -> int:
    q, tau = _load(args)
    cls = parse_class(args.cls, q)
    request = InvariantRequest(q, tau, cls, args.kind, args.selfdual)
    try:
        request.validate()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    value = compute(request)
    if args.at is not None:
        if not isinstance(value, RationalFunction):
            raise InputError(f"--at applies to I and J; {args.kind} is already a number")
        try:
            point = Fraction(args.at)
        except ValueError:
            raise InputError(f"bad evaluation point {args.at!r}") from None
        try:
            value = evaluate(value, point)
        except PoleError:
            raise InputError(f"{value} has a pole at L = {point}") from None
    print(format_value(value), file=out)
    return EXIT_OK


def _table_rows(q, tau, kinds, selfdual, max_total):
    classes = self_dual_classes(q, max_total) if selfdual else dim_vectors(q, max_total)
    rows = []
    for cls in classes:
        row = [format_class(cls)]
        for kind in kinds:
            try:
                row.append(format_value(compute(InvariantRequest(q, tau, cls, kind, selfdual))))
            except ValueError as exc:
                raise InputError(str(exc)) from None
        rows.append(row)
    return rows


def cmd_table(args, out) -> int:
    q, tau = _load(args)
    kinds = args.kind or (["J", "chiJ", "DT"])
    if args.max < 0:
        raise InputError("--max must be nonnegative")
    header = ["class"] + [_column(k, args.selfdual) for k in kinds]
    rows = _table_rows(q, tau, kinds, args.selfdual, args.max)
    if args.format == "json":
        doc = {"quiver": str(q), "stability": str(tau), "selfdual": args.selfdual,
               "columns": header, "rows": [dict(zip(header, r)) for r in rows]}
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        print(f"{q}  stability {tau}", file=out)
        widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
        for r in [header] + rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip(), file=out)
    return EXIT_OK


def _exponent(e: Fraction) -> str:
    return "q^0" if e == 0 else f"q^{e.numerator}" if e.denominator == 1 else f"q^({e})"


def _as_number(f: RationalFunction) -> str:
    return str(f.constant_value()) if f.is_constant() else str(f)


def cmd_series(args, out) -> int:
    q, tau = _load(args)
    if args.conjecture_stability:
        tau = CONJECTURE_STABILITY
    try:
        rows = series_report(q, args.max, tau)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(f"{q}  stability {tau}", file=out)
    table = [["kind", "term", "class", "computed", "conjectured", "verdict"]]
    for r in rows:
        show = str if r.kind == "Jsd" else _as_number
        table.append([r.kind, _exponent(r.exponent), format_class(r.cls), show(r.computed),
                      show(r.expected), "match" if r.matches else "MISMATCH"])
    widths = [max(len(t[k]) for t in table) for k in range(len(table[0]))]
    for t in table:
        print("  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip(), file=out)
    bad = sum(not r.matches for r in rows)
    status = "holds" if not bad else f"fails on {bad} of {len(rows)} coefficients"
    print(f"conjecture status: {status} ({len(rows)} coefficients checked)", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        result = run_suite(name, seed=args.seed, cases=args.cases)
        for line in result.lines():
            print(line, file=out)
        ok &= result.ok
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdquiver",
                                description="Invariants of self-dual quiver representations.")
    sub = p.add_subparsers(dest="command", required=True)

    quiver_help = ("builtin name (point:+, loop:2:+:+-, 2^+_{+-}, atilde1:+,++, a2:+,+), "
                   "inline JSON or a JSON file")
    stab_help = "'trivial', comma-separated weights, inline JSON or a JSON file"

    v = sub.add_parser("validate", help="check the axioms and print the classification")
    v.add_argument("quiver", help=quiver_help)
    v.set_defaults(func=cmd_validate)

    inv = sub.add_parser("invariant", help="compute one invariant")
    inv.add_argument("--quiver", required=True, help=quiver_help)
    inv.add_argument("--stability", default="trivial", help=stab_help)
    inv.add_argument("--class", dest="cls", required=True, help="dimension vector, e.g. 2 or 1,1")
    inv.add_argument("--kind", choices=KINDS, default="J")
    inv.add_argument("--selfdual", action="store_true", help="self-dual version")
    inv.add_argument("--at", help="evaluate an I or J value at L = this rational")
    inv.set_defaults(func=cmd_invariant)

    tab = sub.add_parser("table", help="invariants for every class up to a total dimension")
    tab.add_argument("--quiver", required=True, help=quiver_help)
    tab.add_argument("--stability", default="trivial", help=stab_help)
    tab.add_argument("--kind", choices=KINDS, action="append", help="repeatable; default J, chiJ, DT")
    tab.add_argument("--selfdual", action="store_true")
    tab.add_argument("--max", type=int, default=6, help="largest total dimension")
    tab.add_argument("--format", choices=("text", "csv", "json"), default="text")
    tab.set_defaults(func=cmd_table)

    ser = sub.add_parser("series", help="compare generating series with the conjectured closed forms")
    ser.add_argument("--quiver", required=True, help="an atilde1 variant or point:+ / point:-")
    ser.add_argument("--stability", default="trivial", help=stab_help)
    ser.add_argument("--conjecture-stability", action="store_true",
                     help="use the stability (-1, 1) under which the Atilde1 closed forms hold")
    ser.add_argument("--max", type=int, default=5,
                     help="Atilde1: largest n in the class (n, n); point: largest dimension")
    ser.set_defaults(func=cmd_series)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", choices=list(SUITES) + ["all"], required=True)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cases", type=int, help="number of random cases (randomized suites)")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoPoleViolation as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
