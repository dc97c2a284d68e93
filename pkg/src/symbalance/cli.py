"""Command line front end.

Every subcommand answers one exact question and prints it as text, JSON,
or CSV.  Large integers are rendered as decimal strings in JSON so no
consumer has to parse arbitrary-precision numbers.  Exit codes: 0 for a
clean answer, 2 when a scan finds a counterexample, 64 for usage errors,
65 when a request exceeds a computational budget, 70 when two supposedly
equivalent computations disagree.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bisection import find_all_solutions
from .census import (
    brute_count_balanced_symmetric,
    count_balanced_all,
    count_symmetric,
    generate_balanced,
    lower_bound_balanced,
)
from .conjectures import (
    C1_MAX_N,
    C2_DEFAULT_N,
    conjecture1_mismatches,
    conjecture2_violations,
    scan_conjecture1,
    scan_conjecture2,
)
from .errors import BudgetError, InternalCheckError, OrbitSplitError
from .exactnum import binom, lacunary_exact, lacunary_trig, round_real
from .spectral import is_sac_elem, walsh_spectrum
from .symfun import elem_values, is_balanced_elem, weight_elem

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 2
EXIT_USAGE = 64
EXIT_BUDGET = 65
EXIT_INTERNAL = 70

WALSH_MAX_N = 64
COUNT_MAX_INPUTS = 1 << 20
GENERATE_MAX_CLASSES = 4096
LACUNARY_MAX_N = 4096
LACUNARY_MAX_POWER = 12


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class CommandResult:
    command: str
    parameters: dict
    columns: list
    rows: list
    lines: list = field(default_factory=list)
    exit_code: int = EXIT_OK


def _cmd_weight(args) -> CommandResult:
    weight = weight_elem(args.d, args.n)
    return CommandResult(
        "weight", {"d": args.d, "n": args.n},
        ["d", "n", "weight"],
        [{"d": args.d, "n": args.n, "weight": str(weight)}],
        [f"wt(X({args.d},{args.n})) = {weight}"])


def _cmd_balanced(args) -> CommandResult:
    weight = weight_elem(args.d, args.n)
    balanced = is_balanced_elem(args.d, args.n)
    verdict = "true" if balanced else "false"
    return CommandResult(
        "balanced", {"d": args.d, "n": args.n},
        ["d", "n", "weight", "balanced"],
        [{"d": args.d, "n": args.n, "weight": str(weight), "balanced": balanced}],
        [f"X({args.d},{args.n}): weight {weight} of {1 << args.n} inputs; "
         f"balanced: {verdict}"])


def _cmd_sac(args) -> CommandResult:
    ok = is_sac_elem(args.d, args.n)
    verdict = "satisfies" if ok else "does not satisfy"
    return CommandResult(
        "sac", {"d": args.d, "n": args.n},
        ["d", "n", "sac"],
        [{"d": args.d, "n": args.n, "sac": ok}],
        [f"X({args.d},{args.n}) {verdict} the strict avalanche criterion"])


def _cmd_walsh(args) -> CommandResult:
    if args.n > WALSH_MAX_N:
        raise BudgetError(f"n={args.n} exceeds the spectrum cap {WALSH_MAX_N}")
    spectrum = walsh_spectrum(elem_values(args.d, args.n))
    rows = [{"y": y, "value": str(value)}
            for y, value in enumerate(spectrum.by_weight)]
    lines = [f"W[{y}] = {value}" for y, value in enumerate(spectrum.by_weight)]
    return CommandResult(
        "walsh", {"d": args.d, "n": args.n}, ["y", "value"], rows, lines)


def _cmd_bisect(args) -> CommandResult:
    if args.enumerate:
        report = find_all_solutions(args.n, enumerate_witnesses=True,
                                    witness_limit=args.limit)
        rows = [{"index": i, "delta": "".join("+" if x > 0 else "-" for x in sv.delta)}
                for i, sv in enumerate(report.witnesses)]
        lines = [f"n={args.n}: {report.total} solutions "
                 f"({report.trivial} trivial, {report.nontrivial} nontrivial)"]
        lines += [row["delta"] for row in rows]
        return CommandResult(
            "bisect", {"n": args.n, "limit": args.limit},
            ["index", "delta"], rows, lines)
    report = find_all_solutions(args.n)
    return CommandResult(
        "bisect", {"n": args.n, "limit": None},
        ["n", "total", "trivial", "nontrivial"],
        [{"n": args.n, "total": str(report.total), "trivial": str(report.trivial),
          "nontrivial": str(report.nontrivial)}],
        [f"n={args.n}: {report.total} solutions "
         f"({report.trivial} trivial, {report.nontrivial} nontrivial)"])


def _cmd_count(args) -> CommandResult:
    if args.p ** args.n > COUNT_MAX_INPUTS:
        raise BudgetError(
            f"p^n={args.p ** args.n} exceeds the counting cap {COUNT_MAX_INPUTS}")
    symmetric = count_symmetric(args.p, args.n)
    over_all = count_balanced_all(args.p, args.n)
    among_symmetric = brute_count_balanced_symmetric(args.p, args.n)
    return CommandResult(
        "count", {"p": args.p, "n": args.n},
        ["p", "n", "symmetric", "balanced_all", "balanced_symmetric"],
        [{"p": args.p, "n": args.n, "symmetric": str(symmetric),
          "balanced_all": str(over_all),
          "balanced_symmetric": str(among_symmetric)}],
        [f"symmetric functions: {symmetric}",
         f"balanced functions (all): {over_all}",
         f"balanced symmetric functions: {among_symmetric}"])


def _cmd_lower_bound(args) -> CommandResult:
    bound = lower_bound_balanced(args.p, args.n)
    return CommandResult(
        "lower-bound", {"p": args.p, "n": args.n},
        ["p", "n", "bound"],
        [{"p": args.p, "n": args.n, "bound": str(bound)}],
        [f"at least {bound} balanced symmetric functions for p={args.p}, n={args.n}"])


def _cmd_generate(args) -> CommandResult:
    if binom(args.p + args.n - 1, args.n) > GENERATE_MAX_CLASSES:
        raise BudgetError(
            f"p={args.p}, n={args.n} has more than {GENERATE_MAX_CLASSES} classes")
    rows = []
    for index, fn in enumerate(generate_balanced(args.p, args.n, limit=args.limit)):
        rows.append({"index": index, "values": "".join(map(str, fn.values))})
    lines = [f"{row['index']}: {row['values']}" for row in rows]
    return CommandResult(
        "generate", {"p": args.p, "n": args.n, "limit": args.limit},
        ["index", "values"], rows, lines)


def _cmd_scan_c1(args) -> CommandResult:
    cells = scan_conjecture1(args.n_max, workers=args.workers)
    bad = conjecture1_mismatches(cells)
    rows = [{"d": c.d, "n": c.n, "weight": str(c.weight),
             "balanced": c.balanced, "predicted": c.predicted} for c in cells]
    lines = [f"mismatch at d={c.d}, n={c.n}: balanced={c.balanced}, "
             f"predicted={c.predicted}" for c in bad]
    lines.append(f"scanned {len(cells)} cells with 2 <= d <= n <= {args.n_max}; "
                 f"mismatches: {len(bad)}")
    return CommandResult(
        "scan-c1", {"n_max": args.n_max},
        ["d", "n", "weight", "balanced", "predicted"], rows, lines,
        EXIT_COUNTEREXAMPLE if bad else EXIT_OK)


def _cmd_scan_c2(args) -> CommandResult:
    cells = scan_conjecture2(args.n_max, workers=args.workers)
    bad = conjecture2_violations(cells)
    rows = [{"d": c.d, "n": c.n, "weight": str(c.weight),
             "bound": str(c.bound), "below": c.below} for c in cells]
    lines = [f"violation at d={c.d}, n={c.n}: weight {c.weight} reaches "
             f"2^(n-2) = {c.bound}" for c in bad]
    lines.append(f"scanned {len(cells)} cells with wt(d) >= 6, "
                 f"2(d-1) <= n <= {args.n_max}; violations: {len(bad)}")
    return CommandResult(
        "scan-c2", {"n_max": args.n_max},
        ["d", "n", "weight", "bound", "below"], rows, lines,
        EXIT_COUNTEREXAMPLE if bad else EXIT_OK)


def _cmd_lacunary(args) -> CommandResult:
    if args.n > LACUNARY_MAX_N:
        raise BudgetError(f"n={args.n} exceeds the cap {LACUNARY_MAX_N}")
    if args.power > LACUNARY_MAX_POWER:
        raise BudgetError(f"power={args.power} exceeds the cap {LACUNARY_MAX_POWER}")
    modulus = 1 << args.power
    residues = range(modulus) if args.i is None else [args.i]
    rows = []
    for i in residues:
        exact = lacunary_exact(args.n, args.power, i)
        trig = round_real(lacunary_trig(args.n, args.power, i))
        if exact != trig:
            raise InternalCheckError(
                f"lacunary routes disagree at n={args.n}, i={i}: {exact} vs {trig}")
        rows.append({"i": i, "exact": str(exact), "trig": str(trig)})
    lines = [f"sum of C({args.n},j) over j = {row['i']} (mod {modulus}): {row['exact']}"
             for row in rows]
    return CommandResult(
        "lacunary", {"n": args.n, "power": args.power, "i": args.i},
        ["i", "exact", "trig"], rows, lines)


_HANDLERS = {
    "weight": _cmd_weight,
    "balanced": _cmd_balanced,
    "sac": _cmd_sac,
    "walsh": _cmd_walsh,
    "bisect": _cmd_bisect,
    "count": _cmd_count,
    "lower-bound": _cmd_lower_bound,
    "generate": _cmd_generate,
    "scan-c1": _cmd_scan_c1,
    "scan-c2": _cmd_scan_c2,
    "lacunary": _cmd_lacunary,
}


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format")
    parser = _Parser(
        prog="symbalance",
        description="Exact balance, weight, and spectrum computations for "
                    "symmetric functions over prime fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    wp = sub.add_parser("weight", parents=[common],
                        help="weight of the elementary symmetric polynomial X(d,n)")
    wp.add_argument("d", type=int)
    wp.add_argument("n", type=int)

    bp = sub.add_parser("balanced", parents=[common],
                        help="whether X(d,n) is balanced")
    bp.add_argument("d", type=int)
    bp.add_argument("n", type=int)

    sp = sub.add_parser("sac", parents=[common],
                        help="whether X(d,n) satisfies the strict avalanche criterion")
    sp.add_argument("d", type=int)
    sp.add_argument("n", type=int)

    lp = sub.add_parser("walsh", parents=[common],
                        help="Walsh spectrum of X(d,n) by input weight")
    lp.add_argument("d", type=int)
    lp.add_argument("n", type=int)

    np_ = sub.add_parser("bisect", parents=[common],
                         help="signed bisections of the binomial row n")
    np_.add_argument("n", type=int)
    np_.add_argument("--enumerate", action="store_true",
                     help="list nontrivial solutions instead of counting")
    np_.add_argument("--limit", type=int, default=None,
                     help="cap on listed solutions")

    cp = sub.add_parser("count", parents=[common],
                        help="census counts for symmetric functions over GF(p)")
    cp.add_argument("p", type=int)
    cp.add_argument("n", type=int)

    op = sub.add_parser("lower-bound", parents=[common],
                        help="orbit-splitting lower bound on balanced symmetric functions")
    op.add_argument("p", type=int)
    op.add_argument("n", type=int)

    gp = sub.add_parser("generate", parents=[common],
                        help="construct distinct balanced symmetric functions")
    gp.add_argument("p", type=int)
    gp.add_argument("n", type=int)
    gp.add_argument("--limit", type=int, default=10,
                    help="how many functions to emit (default 10)")

    c1 = sub.add_parser("scan-c1", parents=[common],
                        help="compare exact balancedness with the conjectured set")
    c1.add_argument("--n-max", type=int, default=C1_MAX_N)
    c1.add_argument("--workers", type=int, default=1)

    c2 = sub.add_parser("scan-c2", parents=[common],
                        help="check weights against the strict quarter bound")
    c2.add_argument("--n-max", type=int, default=C2_DEFAULT_N)
    c2.add_argument("--workers", type=int, default=1)

    ap = sub.add_parser("lacunary", parents=[common],
                        help="binomial sums along residue classes mod 2^power, "
                             "computed two ways")
    ap.add_argument("n", type=int)
    ap.add_argument("power", type=int)
    ap.add_argument("i", type=int, nargs="?", default=None,
                    help="single residue to report (default: all)")
    return parser


def _emit(result: CommandResult, fmt: str, elapsed_ms: int) -> None:
    if fmt == "text":
        for line in result.lines:
            print(line)
    elif fmt == "json":
        payload = {"command": result.command, "parameters": result.parameters,
                   "results": result.rows, "runtime_ms": elapsed_ms}
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([
                ("true" if row[c] else "false") if isinstance(row[c], bool)
                else row[c]
                for c in result.columns])


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else EXIT_USAGE
    started = time.perf_counter()
    try:
        result = _HANDLERS[args.command](args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OrbitSplitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalCheckError, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    _emit(result, args.format, elapsed_ms)
    return result.exit_code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
