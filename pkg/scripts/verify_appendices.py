#!/usr/bin/env python3
"""Reproduce the passant-pencil analyses of the complete 6-arcs in the planes
of order 7 and 8, one line per claim; exits nonzero if anything differs."""

import sys

from pgturan.covering import verify_appendix
from pgturan.geometry import build_geometry


def main() -> int:
    failures = 0
    for which, q in (("A", 7), ("B", 8)):
        print(f"== appendix {which} (plane of order {q}) ==")
        for c in verify_appendix(build_geometry(2, q), which):
            print(f"  {c.status.upper():4} {c.claim_id}: expected {c.expected}, "
                  f"computed {c.computed}")
            failures += c.status == "fail"
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
