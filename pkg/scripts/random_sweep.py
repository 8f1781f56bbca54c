"""Random multigraph sweep comparing free-vertex readings and tie-break sensitivity.

For each instance the greedy runs with k = omega under the verbatim and the
strict i-free vertex reading, and under a handful of seeded Reorder tie-breaks.
Instances where chi' > Delta + 1 are the ones the conjecture speaks about.

Usage:
    python scripts/random_sweep.py --count 200 --seed 1 [--max-vertices 7]
"""

import argparse
from collections import Counter

from condgreedy.coloring import conditional_greedy
from condgreedy.density import density
from condgreedy.generators import generate, random_specs
from condgreedy.multigraph import stats
from condgreedy.oracles import chromatic_index
from condgreedy.ordering import reorder


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--min-vertices", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=7)
    ap.add_argument("--prob", type=float, default=0.5)
    ap.add_argument("--max-mult", type=int, default=3)
    ap.add_argument("--tie-seeds", type=int, default=5)
    args = ap.parse_args()

    tally = Counter()
    for spec in random_specs(args.seed, args.count, args.min_vertices, args.max_vertices,
                             args.prob, args.max_mult):
        g = generate(spec)
        st = stats(g)
        omega = density(g).omega
        chi = chromatic_index(g).chi_prime
        group = "applicable" if chi > st.max_degree + 1 else "other"
        tally[group, "instances"] += 1
        verbatim = conditional_greedy(g, omega).complete
        strict = conditional_greedy(g, omega, strict=True).complete
        tally[group, "verbatim complete"] += verbatim
        tally[group, "strict complete"] += strict
        tally[group, "readings disagree"] += verbatim != strict
        outcomes = {conditional_greedy(g, omega, reorder(g, seed=s)).complete
                    for s in range(args.tie_seeds)}
        tally[group, "tie-sensitive"] += len(outcomes | {verbatim}) > 1
        if group == "applicable" and not verbatim:
            print(f"candidate failure: {spec.label}")

    for group in ("applicable", "other"):
        print(group)
        for key in ("instances", "verbatim complete", "strict complete", "readings disagree",
                    "tie-sensitive"):
            print(f"  {key:<20}{tally[group, key]:>6}")


if __name__ == "__main__":
    main()
