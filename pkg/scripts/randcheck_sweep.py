"""Run all checks over several seeded populations and count how often the
preclusion variants disagree.

    python3 scripts/randcheck_sweep.py --seeds 0 1 2 --n 1000
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from inhnet import checks
from inhnet.engine import Preclusion, Strategy, evaluate
from inhnet.policy import Policy
from inhnet.randomnets import NetShape, population


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--max-nodes", type=int, default=8)
    parser.add_argument("--max-arrows", type=int, default=14)
    parser.add_argument("--edge-prob", type=float, default=NetShape.edge_prob)
    parser.add_argument("--neg-prob", type=float, default=NetShape.neg_prob)
    args = parser.parse_args()
    shape = NetShape(args.max_nodes, args.max_arrows, args.edge_prob, args.neg_prob)

    for seed in args.seeds:
        start = time.perf_counter()
        nets = population(args.n, seed, shape)
        findings: Counter[str] = Counter()
        differ: Counter[str] = Counter()
        for d in nets:
            for policy in Policy:
                for name, rows in checks.run_checks(d, policy).failed().items():
                    findings[f"{policy.value}:{name}"] += len(rows)
            split = evaluate(d, Strategy(Preclusion.SPLIT)).valid
            for mode in (Preclusion.ON_PATH, Preclusion.TOTAL):
                if evaluate(d, Strategy(mode)).valid != split:
                    differ[mode.value] += 1
        elapsed = time.perf_counter() - start
        print(f"seed {seed}: {len(nets)} nets in {elapsed:.1f}s")
        print(f"  findings: {dict(findings) or 'none'}")
        print(f"  nets where valid paths differ from split: {dict(differ) or 'none'}")


if __name__ == "__main__":
    main()
