"""Exhaustive lemma sweep over pairs of 3-maximal sets.

    python scripts/search_3maximal.py --alphabet abcd --max-len 2
    python scripts/search_3maximal.py --alphabet abcd --max-len 3 --sample 5000

Prints the number of certified sets and pairs, the classification counts,
the lemma case counts, and every violation found.
"""

import argparse
import os
import random
import time
from collections import Counter
from itertools import combinations

from monoidlab.search import check_pair, three_maximal_sets


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alphabet", default="abcd")
    ap.add_argument("--max-len", type=int, default=2)
    ap.add_argument("--max-letters", type=int)
    ap.add_argument("--sample", type=int, help="check a random sample of this many pairs")
    ap.add_argument("--show-families", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    sets = three_maximal_sets(args.alphabet, args.max_len, args.max_letters)
    print(f"{len(sets)} 3-maximal sets ({time.perf_counter() - t0:.1f} s)")
    total = len(sets) * (len(sets) - 1) // 2
    if args.sample and args.sample < total:
        # draw index pairs; the full pair list can be far too large to build
        rng = random.Random(int(os.environ.get("MONOIDLAB_SEED", "20240607")))
        chosen = set()
        while len(chosen) < args.sample:
            i, j = sorted(rng.sample(range(len(sets)), 2))
            chosen.add((i, j))
        pairs = [(sets[i], sets[j]) for i, j in sorted(chosen)]
    else:
        pairs = combinations(sets, 2)
    kinds, cases, bad = Counter(), Counter(), []
    for xs, us in pairs:
        violations, kind, case = check_pair(xs, us)
        kinds[kind] += 1
        cases[case] += 1
        bad += [f"{xs} / {us}: {v}" for v in violations]
        if args.show_families and kind == "OneParameterFamily":
            print("  family:", xs, us)
    print(f"{sum(kinds.values())} pairs checked ({time.perf_counter() - t0:.1f} s)")
    print("classification:", dict(kinds))
    print("lemma case:", {str(k): v for k, v in cases.items()})
    print(f"violations: {len(bad)}")
    for line in bad:
        print("  " + line)


if __name__ == "__main__":
    main()
