"""Print every conclusion of every bundled net under each strategy.

Rows where the strategies disagree are marked with ``*``.

    python3 scripts/corpus_table.py [--nets tweety nixon ...]
"""

from __future__ import annotations

import argparse

from inhnet import corpus
from inhnet.engine import Preclusion, Scepticism, Strategy, Verdict, concludes
from inhnet.policy import Policy

COLUMNS = {
    "split": Strategy(Preclusion.SPLIT),
    "onpath": Strategy(Preclusion.ON_PATH),
    "total": Strategy(Preclusion.TOTAL),
    "split/p21": Strategy(Preclusion.SPLIT, Scepticism.DIRECT, Policy.P21),
    "extensions": Strategy(Preclusion.SPLIT, Scepticism.EXTENSIONS),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nets", nargs="*", default=list(corpus.NAMES))
    args = parser.parse_args()
    header = f"  {'net':<14}{'pair':<10}" + "".join(f"{c:<12}" for c in COLUMNS)
    print(header)
    for name in args.nets:
        d = corpus.load(name)
        for x in d.nodes:
            for y in d.nodes:
                if x == y:
                    continue
                row = [concludes(d, x, y, s).value for s in COLUMNS.values()]
                if all(v is Verdict.NO_PATH for v in row):
                    continue
                mark = "*" if len(set(row)) > 1 else " "
                print(f"{mark} {name:<14}{x + ',' + y:<10}" + "".join(f"{v.value:<12}" for v in row))


if __name__ == "__main__":
    main()
