"""Command-line front end.

    hyperspin eval --model hyper "arc(0,1/2) - point(1/4)"
    hyperspin lc --op mul "1 + d" "1 - d"
    hyperspin expand --order 3 "N/(N+1)"
    hyperspin check compatibility --n 2 --m 4
    hyperspin suite --seed 42

Exit status: 0 on success, 1 if any check fails, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .circle import UNIT_SCALE, ev_lebesgue, parse_event
from .errors import HyperspinError, ParseError
from .exact import expand_in_d, parse_hrf, render_rational
from .levicivita import DEFAULT_ORDER, lc_divergence_witness, parse_lc
from .report import DIVISIBILITY_NOTE, MeasureReport
from .spinners import (
    FiniteEvent,
    additivity_defect,
    coherence_check,
    finite_coherence_check,
    finite_compatibility_check,
    finite_P,
    hyper_P,
    hyper_Q,
    pruss_order_check,
    pruss_transform,
    regularity_check,
    symmetry_check,
    uniformity_check,
)
from .suite import run_suite

SEED_ENV = "HYPERSPIN_SEED"


class UsageError(HyperspinError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--unit", choices=tuple(UNIT_SCALE), default="turns", help="unit of event endpoints")

    p = argparse.ArgumentParser(prog="hyperspin", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="probability of an event under a model")
    ev.add_argument("expr")
    ev.add_argument("--model", choices=("finite", "lebesgue", "hyper", "hyper-Q", "pruss"), default="hyper")
    ev.add_argument("--n", type=int)
    ev.add_argument("--alpha", type=_rational)

    lc = sub.add_parser("lc", parents=[common], help="Levi-Civita arithmetic")
    lc.add_argument("operands", nargs="+")
    lc.add_argument("--op", choices=("show", "add", "sub", "mul", "div", "inv", "compare", "st", "diverge"), default="show")
    lc.add_argument("--order", type=_rational, default=DEFAULT_ORDER, help="order for operands without an O(d>k) marker")
    lc.add_argument("--n-max", type=int, default=100)

    ex = sub.add_parser("expand", parents=[common], help="expand a rational function of N in powers of d = 1/N")
    ex.add_argument("expr")
    ex.add_argument("--order", type=_rational, default=DEFAULT_ORDER)

    ck = sub.add_parser("check", parents=[common], help="run a single property check")
    ck.add_argument("name", choices=("compatibility", "coherence", "symmetry", "regularity", "pruss", "uniformity"))
    ck.add_argument("exprs", nargs="*")
    ck.add_argument("--n", type=int)
    ck.add_argument("--m", type=int)
    ck.add_argument("--h", type=int)
    ck.add_argument("--k", type=int)
    ck.add_argument("--theta", type=_rational)
    ck.add_argument("--alpha", type=_rational)
    ck.add_argument("--samples", type=int, default=1000)
    ck.add_argument("--seed", type=int, default=0)

    st = sub.add_parser("suite", parents=[common], help="run the full seeded property suite")
    st.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV}, then 42")
    st.add_argument("--output", help="also write the report to this file")
    return p


def _emit(reports: list[MeasureReport], fmt: str, out) -> None:
    for r in reports:
        print(r.to_json() if fmt == "json-lines" else r.to_text(), file=out)


def _cmd_eval(args, out) -> int:
    event = parse_event(args.expr, args.unit)
    notes: list[str] = []
    if args.model == "finite":
        if args.n is None:
            raise UsageError("--model finite needs --n")
        value = render_rational(finite_P(FiniteEvent.from_event(event, args.n)))
    elif args.model == "lebesgue":
        value = render_rational(ev_lebesgue(event))
    elif args.model == "hyper":
        value = hyper_P(event).render()
        notes.append(DIVISIBILITY_NOTE)
    elif args.model == "hyper-Q":
        value = hyper_Q(event).render()
        notes.append(DIVISIBILITY_NOTE)
    else:
        if args.alpha is None:
            raise UsageError("--model pruss needs --alpha")
        value = pruss_transform(hyper_P(event), args.alpha).render()
        notes += [DIVISIBILITY_NOTE, f"additivity defect = {render_rational(additivity_defect(args.alpha))}"]
    if args.format == "json-lines":
        inputs = {"event": event.render(), "model": args.model}
        if args.n is not None:
            inputs["n"] = str(args.n)
        if args.alpha is not None:
            inputs["alpha"] = render_rational(args.alpha)
        _emit([MeasureReport("eval", inputs, value, value, True, notes=tuple(notes))], args.format, out)
    else:
        print(value, file=out)
        for note in notes:
            print(f"note: {note}", file=out)
    return 0


def _cmd_lc(args, out) -> int:
    xs = [parse_lc(s, args.order) for s in args.operands]
    arity = {"show": 1, "inv": 1, "st": 1, "diverge": 1}.get(args.op, 2)
    if len(xs) != arity:
        raise UsageError(f"--op {args.op} takes {arity} operand(s), got {len(xs)}")
    if args.op == "diverge":
        report = lc_divergence_witness(xs[0], args.n_max)
        _emit([report], args.format, out)
        return 0 if report.passed else 1
    a = xs[0]
    b = xs[1] if arity == 2 else None
    if args.op == "show":
        value = a.render()
    elif args.op == "inv":
        value = a.inverse().render()
    elif args.op == "st":
        value = render_rational(a.standard_part())
    elif args.op == "add":
        value = (a + b).render()
    elif args.op == "sub":
        value = (a - b).render()
    elif args.op == "mul":
        value = (a * b).render()
    elif args.op == "div":
        value = (a / b).render()
    else:
        value = a.compare(b).value
    if args.format == "json-lines":
        inputs = {f"x{i}": x.render() for i, x in enumerate(xs)}
        inputs["op"] = args.op
        _emit([MeasureReport("lc", inputs, value, value, True)], args.format, out)
    else:
        print(value, file=out)
    return 0


def _cmd_expand(args, out) -> int:
    x = parse_hrf(args.expr)
    value = expand_in_d(x, args.order).render()
    if args.format == "json-lines":
        inputs = {"x": x.render(), "order": render_rational(args.order)}
        _emit([MeasureReport("expand", inputs, value, value, True)], args.format, out)
    else:
        print(value, file=out)
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"check {args.name} needs " + ", ".join(f"--{n}" for n in missing))


def _cmd_check(args, out) -> int:
    events = [parse_event(s, args.unit) for s in args.exprs]
    name = args.name
    if name == "compatibility":
        _need(args, "n", "m")
        reports = [finite_compatibility_check(args.n, args.m, args.samples, args.seed)]
    elif name == "coherence":
        if events:
            reports = [coherence_check(e) for e in events]
        else:
            _need(args, "n", "h", "k")
            reports = [finite_coherence_check(args.n, args.h, args.k)]
    elif name == "symmetry":
        _need(args, "theta")
        theta = args.theta / UNIT_SCALE[args.unit]
        reports = [symmetry_check(e, theta) for e in events]
    elif name == "regularity":
        reports = [regularity_check(e) for e in events]
    elif name == "uniformity":
        if len(events) != 2:
            raise UsageError("check uniformity takes exactly two events")
        reports = [uniformity_check(*events)]
    else:
        _need(args, "alpha")
        if len(events) % 2:
            raise UsageError("check pruss takes events in pairs")
        pairs = list(zip(events[::2], events[1::2]))
        reports = [pruss_order_check(pairs, args.alpha)]
    if not reports:
        raise UsageError(f"check {name} needs at least one event")
    _emit(reports, args.format, out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_suite(args, out) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, "42"))
    reports = run_suite(seed)
    lines = [r.to_json() if args.format == "json-lines" else r.to_text() for r in reports]
    passed = sum(r.passed for r in reports)
    if args.format == "text":
        lines.append(f"{passed}/{len(reports)} checks passed (seed {seed})")
    text = "\n".join(lines) + "\n"
    out.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if passed == len(reports) else 1


COMMANDS = {"eval": _cmd_eval, "lc": _cmd_lc, "expand": _cmd_expand, "check": _cmd_check, "suite": _cmd_suite}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # argparse stops filling a nargs="*" positional once an option follows it
        if extra:
            field = {"check": "exprs", "lc": "operands"}.get(args.command)
            if field is None or any(x.startswith("--") for x in extra):
                parser.error("unrecognized arguments: " + " ".join(extra))
            setattr(args, field, getattr(args, field) + extra)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc.annotated()}", file=err)
        return 2
    except HyperspinError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
