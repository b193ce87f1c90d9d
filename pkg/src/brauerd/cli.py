"""Command-line front end: ``brd <command> -n N ...``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 suite failures.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .algebra import AlgebraElement, Mode, SizeMismatch, dump_structure_constants
from .algebra import opposition_el, pi_el, pole_flip_el, structure_constants
from .connectors import Connector, Filter, count, enumerate_connectors
from .normal_forms import eval_word, format_word, nu_inverse, parse_word
from .verification import DEFAULT_BUDGET, DEFAULT_SEED, SUITES, dump_failures, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="number of strands")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STRICT.value)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brd", description="Brauer diagram algebra of type D_n")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("product", help="multiply two elements")
    _common(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("eval", help="evaluate a generator word")
    _common(p)
    p.add_argument("word")

    p = sub.add_parser("nf", help="normal form monomial of a basis diagram")
    _common(p)
    p.add_argument("diagram")

    p = sub.add_parser("enum", help="list connectors")
    _common(p)
    p.add_argument("--filter", choices=[f.value for f in Filter], default=Filter.ALL.value)

    p = sub.add_parser("count", help="closed-form sizes and dimensions")
    _common(p)

    p = sub.add_parser("check", help="run a conformance suite")
    _common(p)
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("dump-sc", help="structure constants as CSV")
    _common(p)
    p.add_argument("--jobs", type=int, default=1)

    for name, helptext in (("op", "opposition"), ("pi", "type-A image"), ("flip", "pole flip")):
        p = sub.add_parser(name, help=helptext)
        _common(p)
        p.add_argument("element")
    return parser


def _element(text: str, n: int, mode: Mode) -> AlgebraElement:
    """Element literal; a bare connector literal means that diagram with scalar 1."""
    if ";" not in text and text.strip().startswith("n:"):
        conn = Connector.parse(text)
        if conn.n != n:
            raise SizeMismatch(f"SizeMismatch: connector of size {conn.n}, expected {n}")
        return AlgebraElement.from_diagram(conn, mode=mode)
    return AlgebraElement.parse(text, n=n, mode=mode)


def _run(args: argparse.Namespace) -> tuple[str, int]:
    n, mode = args.n, Mode(args.mode)
    if n < 1:
        raise UsageError("-n must be positive")
    cmd = args.command
    if cmd == "product":
        return str(_element(args.left, n, mode) * _element(args.right, n, mode)), 0
    if cmd == "eval":
        return str(eval_word(n, parse_word(args.word), mode)), 0
    if cmd == "nf":
        el = _element(args.diagram, n, Mode.STRICT)
        m = nu_inverse(el)
        return f"{m}\nword: {format_word(m.word())}", 0
    if cmd == "enum":
        conns = enumerate_connectors(n, Filter(args.filter))
        if args.format == "csv":
            return "index,connector\n" + "\n".join(f"{k},{c}" for k, c in enumerate(conns)), 0
        return "\n".join(str(c) for c in conns), 0
    if cmd == "count":
        c = count(n)
        if args.format == "csv":
            return ",".join(c) + "\n" + ",".join(str(v) for v in c.values()), 0
        return " ".join(f"{k}={v}" for k, v in c.items()), 0
    if cmd == "check":
        report = run_suite(args.suite, n, budget=args.budget, seed=args.seed)
        text = "\n".join(report.status_lines()) if args.format == "csv" else dump_failures(report)
        return text, 0 if report.ok else 3
    if cmd == "dump-sc":
        rows = structure_constants(n, mode, jobs=args.jobs)
        return dump_structure_constants(rows).rstrip("\n"), 0
    el = _element(args.element, n, mode)
    fn = {"op": opposition_el, "pi": pi_el, "flip": pole_flip_el}[cmd]
    return str(fn(el)), 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        msg = str(exc)
        name = type(exc).__name__
        if not msg.startswith(name):
            msg = f"{name}: {msg}"
        print(f"error: {msg}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
