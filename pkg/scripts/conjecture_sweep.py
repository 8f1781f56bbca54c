"""Run Conditional_Greedy on fat triangles and thick odd rings and print the verdicts.

Usage:
    python scripts/conjecture_sweep.py [--max-mult 4] [--ring-lengths 3 5 7] [--out DIR]
"""

import argparse
import os
import sys
from itertools import product

from condgreedy.experiment import run_experiment, write_failure_bundles, write_traces
from condgreedy.generators import InstanceSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-mult", type=int, default=2)
    ap.add_argument("--max-mult", type=int, default=4)
    ap.add_argument("--ring-lengths", type=int, nargs="*", default=[3, 5, 7])
    ap.add_argument("--strict", action="store_true", help="strict free-vertex reading")
    ap.add_argument("--out", default=None, help="directory for report, traces and failure bundles")
    args = ap.parse_args()

    mults = range(args.min_mult, args.max_mult + 1)
    specs = [InstanceSpec("fat_triangle", pqr) for pqr in product(mults, repeat=3)]
    specs += [InstanceSpec("thick_ring", (r, t)) for r in args.ring_lengths for t in mults]
    report = run_experiment(specs, strict=args.strict)

    print(f"{'instance':<22}{'Delta':>6}{'omega':>6}{'chi':>5}  applicable  greedy")
    for row in report.rows:
        outcome = "complete" if row.greedy_complete else f"halt@{row.halt_step}"
        print(f"{row.instance:<22}{row.max_degree:>6}{row.omega:>6}{row.chi_prime:>5}  "
              f"{str(row.conjecture_applicable):<10}  {outcome} {row.flag}")
    print(report.summary())

    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "report.csv"), "w") as fh:
            fh.write(report.to_csv(timing=True))
        write_traces(report, os.path.join(args.out, "traces"))
        write_failure_bundles(report, os.path.join(args.out, "failures"))
    return 3 if report.failures else 0


if __name__ == "__main__":
    sys.exit(main())
