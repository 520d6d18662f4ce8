"""Batch command-line interface.

Subcommands::

    expand       full (n, m, r) coefficient table of a pattern series
    avoiders     the y=0, z=1 avoidance sequence (optionally as a b-file)
    asymptotics  dominant-pole growth estimate and winding certificate
    verify       closed form vs. brute-force oracle, cell by cell
    words        (m, r) table of a pattern series over a k-letter alphabet

JSON reports are deterministic: sorted keys, no timestamps, counts as
decimal strings (values at order 60 overflow 53-bit JSON numbers).  Exit
codes: 0 success, 2 usage error, 3 numeric failure, 4 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, asymptotics, genfun, words
from .patterns import (PartSet, PatternId, brute_force_table,
                       brute_force_word_table)

MAX_ORDER = 60
MAX_VERIFY_N = 20
MAX_VERIFY_K = 5
MAX_VERIFY_M = 12

PATTERN_CHOICES = [p.value for p in PatternId]


class UsageError(Exception):
    """Bad argument values; reported with the offending flag, exit 2."""


def parse_set_spec(text: str) -> PartSet:
    """Parse 'nat' or a comma-separated strictly increasing part list."""
    if text == "nat":
        return PartSet.naturals()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"--set: {text!r} is not 'nat' or a "
                         "comma-separated integer list") from None
    try:
        return PartSet(parts=parts)
    except ValueError as exc:
        raise UsageError(f"--set: {exc}") from None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UsageError(message)


def _envelope(command: list[str], **payload) -> dict:
    report = {"tool": f"comppat {__version__}", "command": command}
    report.update(payload)
    return report


def _emit_json(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _table_rows(series) -> list[tuple]:
    return sorted(series.coeffs.items())


def cmd_expand(args, argv: list[str]) -> int:
    part_set = parse_set_spec(args.set)
    _require(0 <= args.order <= MAX_ORDER,
             f"--order: must be between 0 and {MAX_ORDER}")
    pattern = PatternId.parse(args.pattern)
    series = genfun.build_gf(pattern, part_set, args.order)
    rows = _table_rows(series)
    if args.format == "csv":
        sys.stdout.write("n,m,r,count\n")
        for (n, m, r), c in rows:
            sys.stdout.write(f"{n},{m},{r},{c}\n")
        return 0
    _emit_json(_envelope(
        argv,
        pattern=pattern.value,
        set=str(part_set),
        materialized_parts=list(part_set.materialize(args.order)),
        order=args.order,
        coefficients=[{"n": n, "m": m, "r": r, "count": str(c)}
                      for (n, m, r), c in rows],
    ))
    return 0


def cmd_avoiders(args, argv: list[str]) -> int:
    part_set = parse_set_spec(args.set)
    _require(0 <= args.order <= MAX_ORDER,
             f"--order: must be between 0 and {MAX_ORDER}")
    pattern = PatternId.parse(args.pattern)
    values = genfun.avoidance_sequence(pattern, part_set, args.order)
    if args.bfile:
        for n, value in enumerate(values):
            sys.stdout.write(f"{n} {value}\n")
        return 0
    _emit_json(_envelope(
        argv,
        pattern=pattern.value,
        set=str(part_set),
        materialized_parts=list(part_set.materialize(args.order)),
        order=args.order,
        values=[str(v) for v in values],
    ))
    return 0


def cmd_asymptotics(args, argv: list[str]) -> int:
    _require(0 < args.radius < 0.8, "--radius: must lie in (0, 0.8)")
    _require(args.samples >= 1024, "--samples: need at least 1024")
    pattern = PatternId.parse(args.pattern)
    est = asymptotics.estimate(pattern)
    winding = asymptotics.winding_number(pattern, args.radius, args.samples)
    payload = {
        "pattern": pattern.value,
        "rho": est.rho,
        "v": est.growth_v,
        "K": est.constant_K,
        "winding": winding,
        "tolerances": dict(est.tolerances,
                           winding_radius=args.radius,
                           winding_samples=args.samples),
    }
    if winding != 1:
        payload["warning"] = (
            f"winding number {winding} at radius {args.radius}: the circle "
            "does not enclose exactly one simple zero")
    if args.curve_csv:
        rows = asymptotics.emit_curve(pattern, args.radius, args.samples)
        with open(args.curve_csv, "w", encoding="utf-8") as fh:
            fh.write("re_x,im_x,re_f,im_f\n")
            for rx, ix, rf, if_ in rows:
                fh.write(f"{rx!r},{ix!r},{rf!r},{if_!r}\n")
    _emit_json(_envelope(argv, **payload))
    return 0


def cmd_verify(args, argv: list[str]) -> int:
    pattern = PatternId.parse(args.pattern)
    mismatches = []
    if args.words:
        _require(args.k is not None, "-k: required with --words")
        _require(args.max_m is not None, "--max-m: required with --words")
        _require(1 <= args.k <= MAX_VERIFY_K,
                 f"-k: must be between 1 and {MAX_VERIFY_K}")
        _require(0 <= args.max_m <= MAX_VERIFY_M,
                 f"--max-m: must be between 0 and {MAX_VERIFY_M}")
        formula = words.word_table(words.word_gf(pattern, args.k,
                                                 args.max_m))
        oracle = brute_force_word_table(pattern, args.k, args.max_m).counts
        scope = {"k": args.k, "max_m": args.max_m}

        def row(key, got, want):
            return {"m": key[0], "r": key[1],
                    "formula": str(got), "oracle": str(want)}
    else:
        _require(args.set is not None, "--set: required without --words")
        _require(args.max_n is not None, "--max-n: required without --words")
        part_set = parse_set_spec(args.set)
        _require(0 <= args.max_n <= MAX_VERIFY_N,
                 f"--max-n: must be between 0 and {MAX_VERIFY_N}")
        formula = genfun.build_gf(pattern, part_set, args.max_n).coeffs
        oracle = brute_force_table(pattern, part_set, args.max_n).counts
        scope = {"set": str(part_set), "max_n": args.max_n}

        def row(key, got, want):
            return {"n": key[0], "m": key[1], "r": key[2],
                    "formula": str(got), "oracle": str(want)}

    keys = sorted(set(formula) | set(oracle))
    for key in keys:
        got = formula.get(key, 0)
        want = oracle.get(key, 0)
        if got != want:
            mismatches.append(row(key, got, want))
    _emit_json(_envelope(argv, pattern=pattern.value, **scope,
                         checked=len(keys), mismatches=mismatches))
    return 0 if not mismatches else 4


def cmd_words(args, argv: list[str]) -> int:
    _require(args.k >= 1, "-k: alphabet size must be >= 1")
    _require(0 <= args.order <= MAX_ORDER,
             f"--order: must be between 0 and {MAX_ORDER}")
    pattern = PatternId.parse(args.pattern)
    table = words.word_table(words.word_gf(pattern, args.k, args.order))
    rows = sorted(table.items())
    if args.format == "csv":
        sys.stdout.write("m,r,count\n")
        for (m, r), c in rows:
            sys.stdout.write(f"{m},{r},{c}\n")
        return 0
    _emit_json(_envelope(
        argv,
        pattern=pattern.value,
        k=args.k,
        order=args.order,
        coefficients=[{"m": m, "r": r, "count": str(c)}
                      for (m, r), c in rows],
    ))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comppat",
        description="Exact tables, sequences and growth constants for "
                    "3-letter patterns in compositions and words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pattern(p):
        p.add_argument("--pattern", required=True, choices=PATTERN_CHOICES)

    p_expand = sub.add_parser("expand", help="full (n, m, r) table")
    add_pattern(p_expand)
    p_expand.add_argument("--set", required=True,
                          help="'nat' or e.g. '1,3,4'")
    p_expand.add_argument("--order", type=int, required=True)
    p_expand.add_argument("--format", choices=["json", "csv"],
                          default="json")
    p_expand.set_defaults(handler=cmd_expand)

    p_avoid = sub.add_parser("avoiders", help="avoidance sequence")
    add_pattern(p_avoid)
    p_avoid.add_argument("--set", required=True)
    p_avoid.add_argument("--order", type=int, required=True)
    p_avoid.add_argument("--bfile", action="store_true",
                         help="emit 'n a(n)' lines instead of JSON")
    p_avoid.set_defaults(handler=cmd_avoiders)

    p_asym = sub.add_parser("asymptotics", help="growth estimate")
    add_pattern(p_asym)
    p_asym.add_argument("--radius", type=float, default=0.7)
    p_asym.add_argument("--samples", type=int, default=4096)
    p_asym.add_argument("--curve-csv", metavar="PATH",
                        help="also write the sampled image curve here")
    p_asym.set_defaults(handler=cmd_asymptotics)

    p_verify = sub.add_parser("verify", help="formula vs. oracle")
    add_pattern(p_verify)
    p_verify.add_argument("--set")
    p_verify.add_argument("--max-n", type=int)
    p_verify.add_argument("--words", action="store_true",
                          help="verify the word series instead")
    p_verify.add_argument("-k", type=int)
    p_verify.add_argument("--max-m", type=int)
    p_verify.set_defaults(handler=cmd_verify)

    p_words = sub.add_parser("words", help="word (m, r) table")
    add_pattern(p_words)
    p_words.add_argument("-k", type=int, required=True)
    p_words.add_argument("--order", type=int, required=True)
    p_words.add_argument("--format", choices=["json", "csv"],
                         default="json")
    p_words.set_defaults(handler=cmd_words)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, argv)
    except UsageError as exc:
        sys.stderr.write(f"comppat: error: {exc}\n")
        return 2
    except (asymptotics.RootNotFoundError,
            asymptotics.UndersamplingError,
            asymptotics.DomainError) as exc:
        sys.stderr.write(f"comppat: numeric failure: {exc}\n")
        return 3


def run() -> None:
    raise SystemExit(main())
