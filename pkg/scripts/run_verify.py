"""Run the statement registry and write JSON lines plus a status summary.

    python3 scripts/run_verify.py --out reports.jsonl [--max-order 200] [--ids T2.3.i P2.6.iv]
"""
from __future__ import annotations

import argparse
import collections
import time
from dataclasses import replace

from sasmall.verifier import DEFAULT, run_all, to_json_lines


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="reports.jsonl")
    p.add_argument("--max-order", type=int, default=DEFAULT.max_module_order)
    p.add_argument("--ids", nargs="*", default=None)
    p.add_argument("--jobs", type=int, default=None)
    args = p.parse_args()
    cfg = replace(DEFAULT, max_module_order=args.max_order)
    t0 = time.time()
    reports = run_all(cfg, args.jobs, args.ids)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_json_lines(reports))
    counts = collections.Counter(r.status for r in reports)
    print(f"{len(reports)} reports in {time.time() - t0:.1f}s -> {args.out}")
    for status, n in sorted(counts.items()):
        print(f"  {status}: {n}")
    for r in reports:
        if r.status == "falsified":
            print(f"  falsified {r.id}: {r.counterexample_count} of {r.hypothesis_hits} hits")


if __name__ == "__main__":
    main()
