#!/usr/bin/env python3
"""Verify every presentation for a range of n and write a JSON report.

Timings are included here (unlike the CLI default) since this is a
benchmarking run.
"""

import argparse
import json
import time

from starmonoid.rewrite import SearchLimits
from starmonoid.verify import PRESENTED_CLASSES, VerifyConfig, verify_presentation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--strategy", choices=("GuessProve", "Exact", "Both"), default="Both")
    ap.add_argument("--max-visited", type=int, default=SearchLimits().max_visited)
    ap.add_argument("-o", "--output", default="verify_all.json")
    args = ap.parse_args()

    cfg = VerifyConfig(limits=SearchLimits(max_visited=args.max_visited))
    rows = []
    for n in args.n:
        for cls in PRESENTED_CLASSES:
            t0 = time.perf_counter()
            v = verify_presentation(cls, n, args.strategy, cfg)
            row = v.report(cls=cls, n=n, strategy=args.strategy, timings=True)
            rows.append(row)
            print(f"{cls:7} n={n} {v.status:12} {row['counts']} {time.perf_counter() - t0:7.1f}s", flush=True)
    with open(args.output, "w") as fh:
        json.dump(rows, fh, indent=1, sort_keys=True)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
