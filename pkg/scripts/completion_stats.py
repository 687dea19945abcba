#!/usr/bin/env python3
"""Knuth-Bendix and Todd-Coxeter statistics per presentation: rule counts,
normal-form counts, enumeration nodes and wall time."""

import argparse
import time

from starmonoid.enumeration import card_formula
from starmonoid.rewrite import RewriteSystem, count_normal_forms, kb_complete
from starmonoid.todd_coxeter import tc_enumerate
from starmonoid.verify import PRESENTED_CLASSES
from starmonoid.words import presentation_for


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[4])
    ap.add_argument("--skip-kb", action="store_true", help="only run the enumeration")
    args = ap.parse_args()

    print(f"{'class':7} {'n':>2} {'|R|':>6} {'expected':>8} {'tc':>8} {'tc nodes':>9} {'tc s':>6} {'rules':>6} {'nf':>8} {'kb s':>6}")
    for n in args.n:
        for cls in PRESENTED_CLASSES:
            p = presentation_for(cls, n)
            t0 = time.perf_counter()
            tc = tc_enumerate(p)
            t_tc = time.perf_counter() - t0
            rules = nf = "-"
            t_kb = 0.0
            if not args.skip_kb:
                t0 = time.perf_counter()
                s = kb_complete(p)
                t_kb = time.perf_counter() - t0
                if isinstance(s, RewriteSystem):
                    rules, nf = len(s), count_normal_forms(s)
                else:
                    rules, nf = f"{len(s.partial)}+", "?"
            print(f"{cls:7} {n:>2} {len(p):>6} {card_formula(cls, n):>8} {tc.size!s:>8} {tc.defined:>9} "
                  f"{t_tc:6.1f} {rules!s:>6} {nf!s:>8} {t_kb:6.1f}", flush=True)


if __name__ == "__main__":
    main()
