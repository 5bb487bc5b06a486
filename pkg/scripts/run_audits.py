#!/usr/bin/env python3
"""
Run every audited statement under every membership rule and print a summary
table, writing counterexample instances under --dump-dir.

Usage:
  python scripts/run_audits.py --seed 1 --trials 100 --dump-dir audit_out
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from models.audit_report import GeneratorSettings  # noqa: E402
from services.audit_service import audit_all, dump_counterexamples  # noqa: E402
from utils.validators import non_negative_int, positive_int  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=non_negative_int, default=1)
    ap.add_argument("--trials", type=positive_int, default=100)
    ap.add_argument("--workers", type=positive_int)
    ap.add_argument("--dump-dir")
    ap.add_argument("--full", action="store_true", help="print every report, not only the summary")
    args = ap.parse_args()

    reports = audit_all(GeneratorSettings(), args.seed, args.trials, args.workers)

    print(f"{'statement':<10} {'rule':<14} {'verified':>9} {'counter':>8}  revalidated")
    for report in reports:
        revalidated = "yes" if report.all_revalidated else "NO"
        print(f"{report.theorem:<10} {report.rule:<14} {report.verified:>9} "
              f"{len(report.counterexamples):>8}  {revalidated}")
        if args.dump_dir:
            dump_counterexamples(report, args.dump_dir)

    if args.full:
        print()
        for report in reports:
            print(report.to_text())

    # Counterexamples to prop3.7 / thm3.10 are findings; a non-revalidated one is a defect
    return 0 if all(report.all_revalidated for report in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
