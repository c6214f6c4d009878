"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage, parse or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys

from .diagram import (InvalidPartitionError, NonCofiniteError, YoungDiagram, from_generators,
                      from_partition, step_sequences)
from .verdicts import DEFAULT_ORACLE_CAP, ORACLES, OracleCapError, analyze, survey, verify

SURVEY_COLUMNS = ["partition", "n", "delta_h", "delta_v", "rank", "dim_tangent_pn",
                  "is_curvilinear", "is_hook", "is_staircase"]

_FACTOR = re.compile(r"([xy])(?:\^(\d+))?")


class ParseError(ValueError):
    pass


def parse_ideal(text: str) -> list[tuple[int, int]]:
    """Read monomials such as ``"y^4, x^2*y^2, x^3*y, x^7"`` into exponent pairs."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise ParseError("no generators given")
    gens = []
    for token in tokens:
        exps = {"x": 0, "y": 0}
        for factor in token.split("*"):
            m = _FACTOR.fullmatch(factor)
            if m is None:
                raise ParseError(f"cannot parse monomial {token!r}")
            exps[m.group(1)] += int(m.group(2) or 1)
        gens.append((exps["x"], exps["y"]))
    return gens


def parse_partition(text: str) -> list[int]:
    tokens = [t for t in re.split(r"[,+\s]+", text.strip()) if t]
    if not tokens or not all(t.isdigit() for t in tokens):
        raise ParseError(f"cannot parse partition {text!r}")
    return [int(t) for t in tokens]


def _diagram(args) -> YoungDiagram:
    if args.partition is not None:
        return from_partition(parse_partition(args.partition))
    return from_generators(parse_ideal(args.gens))


def _oracles(selected) -> tuple[str, ...]:
    if not selected:
        return ()
    if "all" in selected:
        return ORACLES
    return tuple(o for o in ORACLES if o in selected)


def _plus(xs) -> str:
    return "+".join(str(x) for x in xs)


def _csv_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return _plus(v)
    return str(v)


def survey_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SURVEY_COLUMNS)
    for r in reports:
        row = [r.partition, r.n, r.delta_h, r.delta_v, r.rank_closed, r.dim_tangent_pn,
               r.is_curvilinear, r.is_hook, r.is_staircase]
        writer.writerow([_csv_value(v) for v in row])
    return buf.getvalue()


def report_text(report) -> str:
    lines = []
    for key, value in report.to_dict().items():
        lines.append(f"{key}: {_csv_value(value)}")
    return "\n".join(lines) + "\n"


def survey_text(reports) -> str:
    header = ["partition", "dh", "dv", "rank", "dimT"]
    extra = [o for o in ORACLES if reports and getattr(reports[0], f"rank_{o}") is not None]
    header += extra
    rows = []
    for r in reports:
        row = [_plus(r.partition), _plus(r.delta_h), _plus(r.delta_v), str(r.rank_closed),
               str(r.dim_tangent_pn)]
        row += [str(getattr(r, f"rank_{o}")) for o in extra]
        rows.append(row)
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*row).rstrip() for row in [header] + rows) + "\n"


def render(d: YoungDiagram) -> str:
    dh, dv = step_sequences(d)
    lines = ["#" * length for length in reversed(d.rows)]
    lines.append(f"Δh=({','.join(map(str, dh))}), Δv=({','.join(map(str, dv))})")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def cmd_analyze(args) -> int:
    report = analyze(_diagram(args), _oracles(args.oracle))
    if args.format == "json":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    elif args.format == "csv":
        text = survey_csv([report])
    else:
        text = report_text(report)
    _emit(text, args.out)
    return 0


def cmd_survey(args) -> int:
    oracles = _oracles(args.oracle)
    reports = survey(args.n, with_oracles=bool(oracles), oracle_cap=args.oracle_cap,
                     jobs=args.jobs, oracles=oracles or ORACLES)
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    elif args.format == "csv":
        text = survey_csv(reports)
    else:
        text = survey_text(reports)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    result = verify(args.max_n, jobs=args.jobs)
    if args.format == "json":
        text = json.dumps(result.to_dict(), indent=2) + "\n"
    else:
        status = "PASS" if result.passed else "FAIL"
        text = f"{status}: {result.diagrams_checked} diagrams checked for n <= {result.max_n}\n"
        if not result.passed:
            partition, checks = result.first_counterexample
            text += f"first counterexample: {partition} ({', '.join(checks)})\n"
            text += f"{len(result.failures)} diagrams failed\n"
    _emit(text, args.out)
    return 0 if result.passed else 1


def cmd_render(args) -> int:
    _emit(render(_diagram(args)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="punctual",
        description="Tangent dimensions of the punctual Hilbert scheme at monomial ideals.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--partition", help='row lengths, e.g. "5,2,1,1"')
        group.add_argument("--gens", help='monomial generators, e.g. "y^4, x*y^2, x^2*y, x^5"')

    def add_common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    oracle_choices = list(ORACLES) + ["all"]

    p = sub.add_parser("analyze", help="tangent dimension at one monomial ideal")
    add_input(p)
    p.add_argument("--oracle", action="append", choices=oracle_choices,
                   help="also compute the rank by an independent route (repeatable)")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("survey", help="all partitions of n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--oracle", action="append", choices=oracle_choices)
    p.add_argument("--oracle-cap", type=_positive, default=DEFAULT_ORACLE_CAP)
    p.add_argument("--jobs", type=_positive, default=1)
    add_common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="cross-check every route for all n <= max-n")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    add_common(p, formats=("text", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the Young diagram")
    add_input(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, InvalidPartitionError, NonCofiniteError, OracleCapError, ValueError) as exc:
        print(f"punctual {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
