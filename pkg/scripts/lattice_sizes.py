"""Submodule-lattice sizes and enumeration times for every corpus module.

    python3 scripts/lattice_sizes.py [--max-order 200] [--csv sizes.csv]
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import replace

from sasmall.modules import enumerate_submodules, parse_module
from sasmall.rings import parse_ring
from sasmall.verifier.corpus import DEFAULT, finite_modules


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=DEFAULT.max_module_order)
    p.add_argument("--csv", default=None)
    args = p.parse_args()
    cfg = replace(DEFAULT, max_module_order=args.max_order)
    rows = []
    for r, m in finite_modules(cfg):
        M = parse_module(m, parse_ring(r))
        t0 = time.perf_counter()
        lat = enumerate_submodules(M)
        rows.append({"ring": r, "module": m, "order": M.order, "submodules": len(lat),
                     "seconds": round(time.perf_counter() - t0, 4)})
    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    w = csv.DictWriter(out, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    if args.csv:
        out.close()
        big = max(rows, key=lambda row: row["submodules"])
        print(f"{len(rows)} modules; largest lattice {big['submodules']} ({big['module']} "
              f"over {big['ring']})")


if __name__ == "__main__":
    main()
