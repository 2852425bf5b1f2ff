#!/usr/bin/env python3
"""Compute the minimum passant-cover invariant M(q) with full class detail."""

import argparse
import json
import time

from pgturan.covering import compute_Mq
from pgturan.geometry import build_geometry, format_coords


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[3, 4, 5, 7, 8])
    args = ap.parse_args()
    for q in args.q:
        g = build_geometry(2, q)
        t0 = time.perf_counter()
        rep = compute_Mq(g)
        out = {
            "q": q,
            "M": rep.M_q,
            "seconds": round(time.perf_counter() - t0, 2),
            "classes": [
                {"arc_size": c.representative.size,
                 "arcs_in_class": c.class_size,
                 "m_of_arc": c.cover.minimum_size,
                 "nodes": c.cover.explored_nodes,
                 "cover": [format_coords(g, "point", p)
                           for p in c.cover.witness_ids()]}
                for c in rep.per_class],
        }
        print(json.dumps(out, ensure_ascii=False))


if __name__ == "__main__":
    main()
