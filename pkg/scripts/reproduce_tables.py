#!/usr/bin/env python3
"""Recompute both comparison tables and the optimized small-plane bounds,
printing markdown with per-cell match flags."""

import argparse

from pgturan.bounds import reproduce_arc_optima, reproduce_tables


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", choices=("1", "2", "optima"), default=None)
    args = ap.parse_args()

    if args.only in (None, "1", "2"):
        tabs = reproduce_tables()
        for name in ("table1", "table2"):
            if args.only and name != f"table{args.only}":
                continue
            print(f"\n## {name}\n")
            print("| q | t | general bound | partition bound | alpha | larger | match |")
            print("|---|---|---|---|---|---|---|")
            for r in tabs[name]:
                print(f"| {r.q} | {r.t} | {r.thm1:.10f} | {r.cor1:.10f} "
                      f"| {r.alpha:.10f} | {r.larger} | {'yes' if r.ok else 'NO'} |")

    if args.only in (None, "optima"):
        print("\n## optimized arc-partition bounds\n")
        print("| q | M | value | alpha | beta | gamma | match |")
        print("|---|---|---|---|---|---|---|")
        for r in reproduce_arc_optima():
            a = r["argmax"]
            ok = r["value_ok"] and r["argmax_ok"]
            print(f"| {r['q']} | {r['M']} | {r['value']:.10f} | {a['alpha']:.10f} "
                  f"| {a['beta']:.10f} | {a['gamma']:.10f} | {'yes' if ok else 'NO'} |")


if __name__ == "__main__":
    main()
