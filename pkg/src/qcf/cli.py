"""``qcf`` command line: list, verify, expand and eval catalog entries."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

import mpmath

from . import corpus, verify
from .cfrac import eval_numeric, exact_value
from .corpus import Backend, Entry, LhsKind
from .domains import ExactQ, FormalQ, NumericQ
from .errors import (
    ConstantTermNotOne,
    DomainViolation,
    ExpansionStopped,
    OrderExhausted,
    QcfError,
    UnknownEntry,
)
from .expand import c_fraction_expand
from .qseries import QSeries

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_USAGE, EXIT_NO_INPUT = 64, 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_prec() -> int:
    raw = os.environ.get("QCF_DEFAULT_PREC")
    return int(raw) if raw else verify.DEFAULT_PRECISION


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _exact_rational(text: str) -> Fraction:
    """``p/q`` or an integer; decimals are refused so formal runs stay exact."""
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational 'p/q' or an integer, got {text!r}") from None


def _any_number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a number, got {text!r}") from None


def _tol(text: str) -> str:
    try:
        mpmath.mpf(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"not a decimal: {text!r}") from None
    return text


def _params(pairs: Sequence[str], parse) -> dict[str, Fraction]:
    out = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise UsageError(f"--param expects name=value, got {pair!r}")
        out[name.strip()] = parse(value.strip())
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcf", description="Verify q-continued-fraction identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog entries")

    v = sub.add_parser("verify", help="verify one entry, a pattern, or the whole catalog")
    v.add_argument("pattern", nargs="?", help="entry id or shell-style pattern")
    v.add_argument("--entry", help="entry id or pattern")
    v.add_argument("--all", action="store_true", help="verify every entry")
    v.add_argument("--order", type=_positive, help="truncation order (default: per entry)")
    v.add_argument("--samples", type=_positive, help="parameter points per entry (default: per entry)")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--prec", type=_positive, default=None, help="bits for numeric entries")
    v.add_argument("--tol", type=_tol, default=verify.DEFAULT_TOL)
    v.add_argument("--param", action="append", metavar="NAME=VALUE", help="verify a single point")
    v.add_argument("--json", action="store_true", help="emit JSON reports")
    v.add_argument("--out", help="write reports to this file")

    e = sub.add_parser("expand", help="C-fraction terms of an entry's left-hand side")
    e.add_argument("--entry", required=True)
    e.add_argument("--depth", type=_positive, default=8)
    e.add_argument("--order", type=_positive)
    e.add_argument("--param", action="append", metavar="NAME=VALUE")
    e.add_argument("--seed", type=int, default=42)

    n = sub.add_parser("eval", help="evaluate both sides of an entry numerically")
    n.add_argument("--entry", required=True)
    n.add_argument("--q", help="value of q (rational or decimal)")
    n.add_argument("--param", action="append", metavar="NAME=VALUE")
    n.add_argument("--prec", type=_positive, default=None)
    n.add_argument("--tol", type=_tol, default=None)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_list(args) -> int:
    for e in corpus.all_entries():
        print(f"{e.id:18} {e.backend.value:8} {e.title}")
    return EXIT_OK


def _select(args) -> list[Entry]:
    chosen = [x for x in (args.pattern, args.entry) if x]
    if args.all and chosen:
        raise UsageError("--all cannot be combined with an entry")
    if len(chosen) > 1:
        raise UsageError("give the entry either positionally or with --entry")
    if not args.all and not chosen:
        raise UsageError("name an entry or pass --all")
    pattern = None if args.all else chosen[0]
    entries = corpus.matching(pattern)
    if not entries:
        raise UnknownEntry(pattern)
    return entries


def cmd_verify(args) -> int:
    entries = _select(args)
    config = verify.SuiteConfig(
        order=args.order, samples=args.samples, precision=args.prec or _default_prec(),
        tol=args.tol, threads=verify.default_threads(),
    )
    if args.param:
        if len(entries) != 1:
            raise UsageError("--param needs exactly one entry")
        entry = entries[0]
        point = _params(args.param, _exact_rational)
        try:
            reports = [verify.verify_point(entry, _checked_point(entry, point), config)]
        except DomainViolation as exc:
            print(f"qcf: {exc}", file=sys.stderr)
            return EXIT_FAIL
    else:
        reports = verify.run_entries(entries, args.seed, config)
    status = verify.suite_status(reports)
    if args.json:
        text = json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n"
    else:
        lines = [r.describe() for r in reports]
        outcomes = verify.entry_outcomes(reports)
        counts = {s: sum(o.status == s for o in outcomes) for s in (verify.PASS, verify.FAIL, verify.INCONCLUSIVE)}
        lines.append(f"{len(outcomes)} entries: {counts[verify.PASS]} pass, {counts[verify.FAIL]} fail, "
                     f"{counts[verify.INCONCLUSIVE]} inconclusive ({len(reports)} points)")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return {verify.PASS: EXIT_OK, verify.FAIL: EXIT_FAIL}.get(status, EXIT_INCONCLUSIVE)


def _checked_point(entry: Entry, point: dict) -> dict:
    unknown = set(point) - set(entry.param_names) - {"q"}
    if unknown:
        raise UsageError(f"{entry.id} has no parameter(s) {', '.join(sorted(unknown))}; "
                         f"expected {', '.join(entry.param_names) or 'none'}")
    bad = corpus.violated(entry, point) if set(entry.param_names) <= set(point) else []
    if bad:
        raise DomainViolation(f"{entry.id}: constraint violated: {bad[0].text}")
    return point


def _point_for(entry: Entry, given: dict, seed: int) -> dict:
    """Explicit parameters, with any missing ones filled from the first sample point."""
    point = dict(corpus.sample_params(entry, 1, seed)[0])
    point.update(given)
    return _checked_point(entry, point)


def cmd_expand(args) -> int:
    entry = corpus.get_entry(args.entry)
    if not entry.lhs:
        raise DomainViolation(f"{entry.id} has no series left-hand side to expand")
    point = _point_for(entry, _params(args.param, _exact_rational), args.seed)
    depth = args.depth
    order = args.order or max(entry.formal_alt_order or entry.default_order, (depth + 1) * (depth + 2) // 2)
    dom = FormalQ(order)
    params = dom.params(point)
    f = QSeries.coerce(entry.lhs[0][1](dom, params), order)
    reciprocal = False
    if entry.cf is not None and f[0] != 1:
        reciprocal = True
    elif entry.cf is not None:
        cf = entry.cf(dom, params)
        if not isinstance(cf, tuple) and cf.b0 == 0 and f[0] == 1 and list(map(_const, cf.term(1))) == [1, 1]:
            reciprocal = True
    if reciprocal:
        if f[0] == 0:
            raise ConstantTermNotOne("left-hand side vanishes at q = 0")
        f = f.inverse()
    if f[0] != 1:
        raise ConstantTermNotOne(f"constant term is {f[0]}, not 1")
    try:
        expansion = c_fraction_expand(f, depth)
        stopped = ""
    except ExpansionStopped as exc:
        expansion = exc.expansion
        stopped = "" if not isinstance(exc, OrderExhausted) else f" (stopped: {exc})"
    head = "1/(1 + K)" if reciprocal else "1 + K"
    where = ", ".join(f"{k}={v}" for k, v in sorted(params.items()))
    print(f"{entry.id}{' at ' + where if where else ''}: {head} with C-fraction terms (order {order}){stopped}")
    for k, (c, alpha) in enumerate(expansion.terms[:depth], 1):
        print(f"  a_{k} = {_monomial(c, alpha)}")
    if expansion.terminated:
        print("  (expansion terminates)")
    return EXIT_OK


def _const(x):
    return x[0] if isinstance(x, QSeries) else x


def _monomial(c: Fraction, alpha: int) -> str:
    power = "q" if alpha == 1 else f"q^{alpha}"
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{c}*{power}"


def cmd_eval(args) -> int:
    entry = corpus.get_entry(args.entry)
    prec = args.prec or _default_prec()
    given = _params(args.param, _any_number)
    if args.q is not None:
        if entry.nome is not None:
            raise UsageError(f"{entry.id} is evaluated at a fixed q; drop --q")
        given["q"] = _any_number(args.q)
    if entry.nome is None and "q" not in given:
        raise UsageError(f"{entry.id} needs --q")
    point = _point_for(entry, given, 42) if entry.params else _checked_point(entry, given)
    digits = int(prec * 0.30103)
    with mpmath.workprec(prec):
        if entry.backend is Backend.EXACT:
            dom = ExactQ(point["q"])
        elif entry.nome is not None:
            dom = NumericQ(entry.nome())
        else:
            dom = NumericQ(point["q"])
        params = dom.params(point)
        values: list[tuple[str, object]] = []
        if entry.lhs_kind is LhsKind.RECURRENCE:
            values = [(label, r) for label, r in entry.residuals(dom, params)]
        else:
            values = [(name, fn(dom, params)) for name, fn in entry.lhs]
            if entry.cf is not None:
                cfs = entry.cf(dom, params)
                for i, cf in enumerate(cfs if isinstance(cfs, tuple) else (cfs,), 1):
                    if entry.backend is Backend.EXACT:
                        values.append((f"continued fraction {i}", exact_value(cf)))
                    else:
                        tol = mpmath.mpf(args.tol) if args.tol else mpmath.mpf(2) ** (8 - prec)
                        values.append((f"continued fraction {i}", eval_numeric(cf, tol=tol).value))
        where = ", ".join(f"{k}={v}" for k, v in sorted(point.items()))
        print(f"{entry.id}{' at ' + where if where else ''} ({prec} bits)")
        for name, v in values:
            shown = str(v) if isinstance(v, Fraction) else mpmath.nstr(v, digits)
            print(f"  {name}: {shown}")
        if len(values) > 1 and entry.lhs_kind is not LhsKind.RECURRENCE:
            ref = values[0][1]
            worst = max(abs(mpmath.mpf(v.numerator) / v.denominator - (mpmath.mpf(ref.numerator) / ref.denominator))
                        if isinstance(v, Fraction) else abs(v - ref) for _, v in values[1:])
            print(f"  max difference: {mpmath.nstr(worst, 5)}")
    return EXIT_OK


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "expand": cmd_expand, "eval": cmd_eval}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qcf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownEntry as exc:
        print(f"qcf: {exc}", file=sys.stderr)
        return EXIT_NO_INPUT
    except (DomainViolation, ConstantTermNotOne) as exc:
        print(f"qcf: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except QcfError as exc:
        print(f"qcf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
