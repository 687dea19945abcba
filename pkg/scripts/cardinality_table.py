#!/usr/bin/env python3
"""Print the cardinality table: closed form, closure of the generators and
predicate filter for every class and n in a range."""

import argparse
import time

from starmonoid.enumeration import GRAPH_CLASSES, card_formula, generate_class, predicate_monoid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--classes", default=",".join(GRAPH_CLASSES + ("2PT",)))
    args = ap.parse_args()

    classes = args.classes.split(",")
    print(f"{'class':8} {'n':>2} {'formula':>9} {'generated':>9} {'predicate':>9}  ok   secs")
    for n in range(args.n_min, args.n_max + 1):
        for cls in classes:
            t0 = time.perf_counter()
            row = card_formula(cls, n), len(generate_class(cls, n)), len(predicate_monoid(cls, n))
            ok = "yes" if len(set(row)) == 1 else "NO"
            print(f"{cls:8} {n:>2} {row[0]:>9} {row[1]:>9} {row[2]:>9}  {ok:3} {time.perf_counter() - t0:6.2f}")


if __name__ == "__main__":
    main()
