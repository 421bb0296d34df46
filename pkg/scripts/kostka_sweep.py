#!/usr/bin/env python3
"""Time both graded-Kostka routes over a range of degrees and diff them.

Usage: python scripts/kostka_sweep.py [--max-n 6]
"""

import argparse
import time

from symq.hl import kostka_orthogonality, kostka_triangular


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        tri = kostka_triangular(n)
        t1 = time.perf_counter()
        orth = kostka_orthogonality(n)
        t2 = time.perf_counter()
        verdict = "agree" if tri == orth else "DIFFER"
        print(
            f"n = {n}: {len(tri.labels)} partitions, {len(tri.entries)} entries, "
            f"triangular {t1 - t0:.3f}s, orthogonality {t2 - t1:.3f}s, {verdict}"
        )
        if tri != orth:
            raise SystemExit(1)


if __name__ == "__main__":
    main()
