"""
Fuzzy soft topology lab - command-line entry point.

Usage:
  python main.py validate --file fixtures/indiscrete.json
  python main.py subcover --file fixtures/fixture.json --target UNIV --sets f,p1,p2,g --mode exact
  python main.py audit --theorem thm3.12 --seed 1 --trials 50

Exit codes: 0 the property holds / audit found no counterexamples,
1 the property fails / counterexamples found, 2 usage or file error.
"""
import argparse
import sys
from typing import List, Optional

from dotenv import load_dotenv

from handlers.command_handler import COMMAND_HANDLERS
from handlers.report_formatter import format_error
from utils.command_sets import all_commands, all_theorems, file_commands, mode_names, theorem_ids
from utils.errors import FuzzySoftError
from utils.logger_config import LogPrefix, debug, error
from utils.validators import name_list, non_negative_int, positive_int, rule_name

load_dotenv()

HELP = {
    "validate": "check every topology family in a space file against the axioms",
    "generate": "print a seeded random instance as a space file",
    "compact": "compactness certificate for --target in a topology",
    "subcover": "smallest (or greedy) subfamily of --sets covering --target",
    "hausdorff": "check Hausdorff separation under a membership rule",
    "continuous": "check continuity of --map",
    "openmap": "check that --map sends open sets to open sets",
    "closedmap": "check that --map sends closed sets to closed sets",
    "fip": "finite intersection property of --sets",
    "closed": "check whether --target is closed",
    "format": "print the canonical form of a space file",
    "recheck": "re-run a stored counterexample (exit 1 when it still fails)",
    "audit": "seeded audit of one statement, or all of them",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rule", type=rule_name, help="membership rule: some-positive | all-positive | all-one")
    common.add_argument("--topology", help="topology name in the primary space (default: its only one)")
    common.add_argument("--no-validate", action="store_true", help="load topology families without checking axioms")

    parser = argparse.ArgumentParser(prog="fuzzy-soft-lab", description="Finite fuzzy soft topology laboratory")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    sub = {name: commands.add_parser(name, parents=[common], help=HELP[name]) for name in all_commands}

    for name in file_commands:
        sub[name].add_argument("--file", required=True, help="space file (JSON)")

    for name in ("compact", "subcover", "closed"):
        sub[name].add_argument("--target", help="set name; NULL and UNIV are reserved (default UNIV)")
    sub["compact"].add_argument("--cap", type=positive_int, help="maximum number of subfamilies to enumerate")

    for name in ("subcover", "fip"):
        sub[name].add_argument("--sets", type=name_list, help="comma-separated set names, in tie-break order")
    sub["subcover"].add_argument("--mode", choices=mode_names, default="exact")
    sub["subcover"].add_argument("--budget", type=positive_int, help="node budget for exact search")

    for name in ("continuous", "openmap", "closedmap"):
        sub[name].add_argument("--map", help="mapping name")
        sub[name].add_argument("--target-topology", help="topology name in the target space (default: its only one)")

    theorem_choices = theorem_ids + (all_theorems,)
    sub["recheck"].add_argument("--theorem", choices=theorem_ids, required=True)
    for name in ("generate", "audit"):
        sub[name].add_argument("--theorem", choices=theorem_choices,
                               default="thm3.12" if name == "generate" else all_theorems)
        sub[name].add_argument("--seed", type=non_negative_int, default=0)
        sub[name].add_argument("--cap", type=positive_int, help="topology closure cap for generated instances")
        sub[name].add_argument("--max-points", type=positive_int)
        sub[name].add_argument("--max-params", type=positive_int)
        sub[name].add_argument("--denominator", type=positive_int)
    sub["audit"].add_argument("--trials", type=positive_int, default=50)
    sub["audit"].add_argument("--workers", type=positive_int)
    sub["audit"].add_argument("--dump-dir", help="write counterexample instances here as space files")
    return parser


def cli(argv: Optional[List[str]] = None) -> int:
    """Run one command; the report goes to stdout, logs to stderr"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    debug(LogPrefix.CLI, f"Running {args.command}")
    try:
        report, code = COMMAND_HANDLERS[args.command](args)
    except FuzzySoftError as e:
        error(LogPrefix.CLI, f"{args.command} failed", e)
        report, code = format_error(str(e)), 2
    except OSError as e:
        error(LogPrefix.CLI, f"{args.command} could not read or write a file", e)
        report, code = format_error(f"{e.filename or ''}: {e.strerror or e}"), 2
    except Exception as e:
        error(LogPrefix.CLI, f"{args.command} crashed", e)
        report, code = format_error(f"unexpected {type(e).__name__}: {e}"), 2

    sys.stdout.write(report)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    raise SystemExit(cli())
