"""Command-line surface.

Subcommands: betti, decompose, check, explain, enumerate, gen.  Results
go to stdout, diagnostics to stderr, and all rational output is exact
(never decimal).  The ideal grammar accepted everywhere:

    ideal := '(' mono (',' mono)* ')' | mono (',' mono)*
    mono  := term ('*'? term)*
    term  := var exponent?

With three or fewer variables the variables are letters among x, y, z
and digits following a letter are an exponent, with or without '^'
("x2y" means x^2*y).  With --vars N for N > 3 the variables are x1..xN,
digits after 'x' select the variable, and exponents require '^'
("x2^3" is the cube of the second variable).  Whitespace is free.
Powers of parenthesized ideals are not part of the grammar; `lexbs gen
power-ideal y,z 8` prints the expanded generator list of (y, z)^8.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from itertools import combinations_with_replacement

from .betti import BettiDiagram, ek_betti, quotient_diagram
from .decompose import bs_decompose, unit_normalized
from .enumeration import CHECKS, CampaignConfig, run_campaign
from .ideal import MonomialIdeal, UnitIdeal, format_ideal, minimalize
from .monomial import Monomial
from .pure import NotDecomposable
from .verify import (
    check_colon_prefix,
    check_excluded_family_tails,
    check_lex_dominance,
    check_tail_agreement,
    explain_chain,
)


class IdealSyntaxError(ValueError):
    """Parse failure, carrying the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at byte {offset}: {message}")
        self.offset = offset


class _Scanner:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def read_digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]


_ALIAS = {"x": 0, "y": 1, "z": 2}


def _parse_variable(sc: _Scanner, n: int) -> int:
    ch = sc.peek()
    if ch is None:
        raise IdealSyntaxError("expected a variable", sc.pos)
    if n <= 3:
        if ch not in _ALIAS:
            raise IdealSyntaxError(
                f"unknown variable {ch!r} (expected one of "
                f"{', '.join(list(_ALIAS)[:n])})",
                sc.pos,
            )
        idx = _ALIAS[ch]
        if idx >= n:
            raise IdealSyntaxError(
                f"unknown variable {ch!r} with only {n} variable(s)", sc.pos
            )
        sc.pos += 1
        return idx
    if ch != "x":
        raise IdealSyntaxError(
            f"unknown variable {ch!r} (with {n} variables use x1..x{n})",
            sc.pos,
        )
    sc.pos += 1
    digits = sc.read_digits()
    if not digits:
        raise IdealSyntaxError(
            f"variable index expected after 'x' (use x1..x{n})", sc.pos
        )
    i = int(digits)
    if not 1 <= i <= n:
        raise IdealSyntaxError(
            f"variable x{i} out of range (1..{n})", sc.pos - len(digits)
        )
    return i - 1


def _parse_exponent(sc: _Scanner, n: int) -> int:
    ch = sc.peek()
    if ch == "^":
        sc.pos += 1
        digits = sc.read_digits()
        if not digits:
            raise IdealSyntaxError("exponent digits expected after '^'", sc.pos)
        return int(digits)
    if n <= 3 and ch is not None and ch.isdigit():
        return int(sc.read_digits())
    return 1


def _parse_monomial(sc: _Scanner, n: int) -> Monomial:
    exps = [0] * n
    saw_term = False
    while True:
        sc.skip_ws()
        ch = sc.peek()
        if ch is None or ch in ",)":
            break
        if ch == "*":
            if not saw_term:
                raise IdealSyntaxError("unexpected '*'", sc.pos)
            sc.pos += 1
            continue
        idx = _parse_variable(sc, n)
        exps[idx] += _parse_exponent(sc, n)
        saw_term = True
    if not saw_term:
        raise IdealSyntaxError("expected a monomial", sc.pos)
    return Monomial(exps)


def parse_ideal(text: str, n: int = 3):
    """Parse the ideal grammar; returns MonomialIdeal or UnitIdeal.

    A generator with all exponents zero (say "x^0") collapses to 1 and
    makes the unit ideal; callers decide how loudly to complain.
    """
    if n < 1:
        raise ValueError("need at least one variable")
    sc = _Scanner(text)
    sc.skip_ws()
    wrapped = False
    if sc.peek() == "(":
        wrapped = True
        sc.pos += 1
    monos = [_parse_monomial(sc, n)]
    sc.skip_ws()
    while sc.peek() == ",":
        sc.pos += 1
        monos.append(_parse_monomial(sc, n))
        sc.skip_ws()
    if wrapped:
        if sc.peek() != ")":
            raise IdealSyntaxError("expected ',' or ')'", sc.pos)
        sc.pos += 1
        sc.skip_ws()
    if sc.pos != len(sc.text):
        if sc.peek() == "^":
            raise IdealSyntaxError(
                "powers of ideals are not supported; expand the generators "
                "(try `lexbs gen power-ideal`)",
                sc.pos,
            )
        raise IdealSyntaxError(f"unexpected {sc.peek()!r}", sc.pos)
    return minimalize(monos, n)


def render_betti(B: BettiDiagram) -> str:
    """Betti table text: columns are homological degree i, rows are
    j - i, zeros print as '-'.  An empty diagram prints header only.
    """
    if B.entries:
        max_i = max(i for i, _ in B.entries)
        rows = [j - i for (i, j) in B.entries]
        row_range = range(min(rows), max(rows) + 1)
    else:
        max_i = -1
        row_range = range(0)
    cols = range(max_i + 1)
    cells = {}
    for r in row_range:
        for c in cols:
            v = B.get(c, c + r)
            cells[(r, c)] = str(v) if v != 0 else "-"
    label_w = max([len(str(r)) for r in row_range] + [1])
    col_w = max(
        [len(str(c)) for c in cols]
        + [len(s) for s in cells.values()]
        + [1]
    )
    header = " " * label_w + " |" + "".join(
        f" {str(c).rjust(col_w)}" for c in cols
    )
    sep = "-" * label_w + "-+" + "-" * (len(cols) * (col_w + 1))
    lines = [header, sep]
    for r in row_range:
        lines.append(
            str(r).rjust(label_w)
            + " |"
            + "".join(f" {cells[(r, c)].rjust(col_w)}" for c in cols)
        )
    return "\n".join(lines)


def render_summand(coeff: Fraction, seq, machine: bool = False) -> str:
    body = ",".join(str(d) for d in seq)
    if machine:
        c = Fraction(coeff)
        return f"{c.numerator}/{c.denominator}\t{body}"
    return f"{coeff} pi({body})"


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _diag(text: str):
    sys.stderr.write(text + "\n")


def _parse_or_exit(text: str, n: int):
    ideal = parse_ideal(text, n)
    if isinstance(ideal, UnitIdeal):
        _diag(
            "warning: a generator reduces to 1, so this is the unit ideal; "
            "nothing to do"
        )
        raise SystemExit(2)
    return ideal


def _cmd_betti(args) -> int:
    ideal = _parse_or_exit(args.ideal, args.vars)
    try:
        diagram = ek_betti(ideal)
    except ValueError as exc:
        _diag(f"error: {exc}")
        return 2
    if args.quotient:
        diagram = quotient_diagram(diagram)
    _emit(render_betti(diagram))
    return 0


def _cmd_decompose(args) -> int:
    ideal = _parse_or_exit(args.ideal, args.vars)
    try:
        diagram = ek_betti(ideal)
    except ValueError as exc:
        _diag(f"error: {exc}")
        return 2
    if args.quotient:
        diagram = quotient_diagram(diagram)
    try:
        dec = bs_decompose(diagram)
    except NotDecomposable as exc:
        _diag(f"error: not decomposable: {exc}")
        return 2
    summands = unit_normalized(dec) if args.norm == "unit" else dec.summands
    for coeff, seq in summands:
        _emit(render_summand(coeff, seq, machine=args.machine))
    return 0


_CHECKERS = {
    "thm1": check_colon_prefix,
    "thm2": check_tail_agreement,
    "conjecture": check_excluded_family_tails,
    "bhp": check_lex_dominance,
}


def _cmd_check(args) -> int:
    ideal = _parse_or_exit(args.ideal, args.vars)
    report = _CHECKERS[args.property](ideal)
    _emit(f"ideal: {format_ideal(ideal)}")
    _emit(f"status: {report.status}")
    _emit(f"verdict: {report.verdict if report.verdict else '(nothing checked)'}")
    if report.witness:
        _emit(f"witness: {report.witness}")
    for key in ("shifted_prefix", "ideal_prefix", "tail", "augmented_tail"):
        if key in report.details:
            rendered = ", ".join(
                render_summand(c, s) for c, s in report.details[key]
            )
            _emit(f"{key.replace('_', ' ')}: [{rendered}]")
    if report.failed:
        return 1
    if report.status_kind == "excluded":
        return 2
    return 0


def _cmd_explain(args) -> int:
    ideal = _parse_or_exit(args.ideal, args.vars)
    try:
        report = explain_chain(ideal)
    except ValueError as exc:
        _diag(f"error: {exc}")
        return 2
    _emit(f"ideal: {format_ideal(ideal)}")
    _emit("chain:")
    for coeff, seq, sources in report.tagged:
        label = ", ".join(sources) if sources else "extra"
        _emit(f"  {render_summand(coeff, seq)}  [{label}]")
    _emit("unused source summands:")
    if report.unused:
        for name, seq in report.unused:
            _emit(f"  {name}: pi({','.join(str(d) for d in seq)})")
    else:
        _emit("  (none)")
    return 0


def _cmd_enumerate(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else CHECKS
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        _diag(
            f"error: unknown checks: {', '.join(unknown)} "
            f"(available: {', '.join(CHECKS)})"
        )
        return 2
    config = CampaignConfig(
        max_deg=args.max_deg, checks=checks, parallelism=args.jobs
    )
    try:
        summary = run_campaign(config)
    except ValueError as exc:
        _diag(f"error: {exc}")
        return 2
    if args.machine:
        _emit(f"ideals\t{summary.total_ideals}")
        for name in checks:
            s = summary.stats[name]
            _emit(f"{name}\t{s.passed}\t{s.failed}\t{s.vacuous}\t{s.excluded}")
        for name, ideal_repr, witness in summary.witnesses:
            _emit(f"witness\t{name}\t{ideal_repr}\t{witness}")
    else:
        _emit(f"ideals checked: {summary.total_ideals}")
        _emit(f"{'check':<12} {'pass':>6} {'fail':>6} {'vacuous':>8} {'excluded':>9}")
        for name in checks:
            s = summary.stats[name]
            _emit(
                f"{name:<12} {s.passed:>6} {s.failed:>6} "
                f"{s.vacuous:>8} {s.excluded:>9}"
            )
        if summary.witnesses:
            _emit("failures:")
            for name, ideal_repr, witness in summary.witnesses:
                _emit(f"  {name}: {ideal_repr}: {witness}")
    return summary.exit_code


def _cmd_gen(args) -> int:
    if args.what != "power-ideal":
        _diag(f"error: unknown generator {args.what!r}")
        return 2
    names = [v.strip() for v in args.variables.split(",") if v.strip()]
    if not names:
        _diag("error: no variables given")
        return 2
    if len(set(names)) != len(names):
        _diag("error: repeated variable name")
        return 2
    if args.degree < 1:
        _diag("error: the exponent must be at least 1")
        return 2
    terms = []
    for combo in combinations_with_replacement(range(len(names)), args.degree):
        counts = [0] * len(names)
        for k in combo:
            counts[k] += 1
        parts = [
            names[k] if c == 1 else f"{names[k]}^{c}"
            for k, c in enumerate(counts)
            if c > 0
        ]
        terms.append("*".join(parts))
    _emit(", ".join(terms))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexbs",
        description=(
            "Exact Betti diagrams of stable monomial ideals and their "
            "greedy decompositions into pure diagrams."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ideal_arg(p):
        p.add_argument("ideal", help="generators, e.g. \"x^2, xy, xz, y^2\"")
        p.add_argument(
            "--vars",
            type=int,
            default=3,
            metavar="N",
            help="number of variables (default 3; beyond 3 use x1..xN)",
        )

    p_betti = sub.add_parser("betti", help="print the Betti table")
    add_ideal_arg(p_betti)
    p_betti.add_argument(
        "--quotient",
        action="store_true",
        help="table of R/I instead of I",
    )
    p_betti.set_defaults(func=_cmd_betti)

    p_dec = sub.add_parser("decompose", help="print the greedy chain")
    add_ideal_arg(p_dec)
    p_dec.add_argument("--quotient", action="store_true",
                       help="decompose the diagram of R/I instead of I")
    p_dec.add_argument(
        "--norm",
        choices=("lcm", "unit"),
        default="lcm",
        help="coefficient normalization against the canonical integral "
        "pure diagram (lcm) or the unit-top one (unit)",
    )
    p_dec.add_argument(
        "--machine",
        action="store_true",
        help="one summand per line as p/q<TAB>d0,d1,...",
    )
    p_dec.set_defaults(func=_cmd_decompose)

    p_check = sub.add_parser(
        "check", help="run a property check on one ideal"
    )
    p_check.add_argument(
        "property", choices=("thm1", "thm2", "conjecture", "bhp")
    )
    add_ideal_arg(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_explain = sub.add_parser(
        "explain", help="tag each chain summand with its sources"
    )
    add_ideal_arg(p_explain)
    p_explain.set_defaults(func=_cmd_explain)

    p_enum = sub.add_parser(
        "enumerate", help="check all Artinian lex ideals up to a degree"
    )
    p_enum.add_argument("--max-deg", type=int, required=True, metavar="D")
    p_enum.add_argument(
        "--checks",
        default="",
        metavar="LIST",
        help=f"comma-separated subset of: {', '.join(CHECKS)} (default all)",
    )
    p_enum.add_argument("--jobs", type=int, default=1, metavar="K")
    p_enum.add_argument(
        "--machine", action="store_true", help="tab-separated stable output"
    )
    p_enum.set_defaults(func=_cmd_enumerate)

    p_gen = sub.add_parser(
        "gen", help="emit generator lists for common constructions"
    )
    p_gen.add_argument("what", help="currently only: power-ideal")
    p_gen.add_argument("variables", help="comma-separated variables, e.g. y,z")
    p_gen.add_argument("degree", type=int, help="the power k")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IdealSyntaxError as exc:
        _diag(f"error: {exc}")
        return 2
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
