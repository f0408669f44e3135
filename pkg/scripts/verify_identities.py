#!/usr/bin/env python3
"""Run the Omega-class identity suite and stream one JSON line per check.

    python3 scripts/verify_identities.py --grid small
    python3 scripts/verify_identities.py --grid full   # the acceptance grid
"""

from __future__ import annotations

import argparse
import sys
import time

from tautint.checks import FULL_GRID, SMALL_GRID, iter_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", choices=("small", "full"), default="small")
    args = ap.parse_args()
    grid = FULL_GRID if args.grid == "full" else SMALL_GRID

    t0 = time.time()
    failures = 0
    total = 0
    for report in iter_suite(grid):
        total += 1
        print(report.to_json(), flush=True)
        if not report.passed:
            failures += 1
    print(
        f"# {total} checks, {failures} failures, {time.time() - t0:.1f}s",
        file=sys.stderr,
    )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
