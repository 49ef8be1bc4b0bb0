"""Run the disjoint-union-of-chains conjecture harness over integer partitions.

Partitions whose candidate space exceeds the budget are skipped and reported.
"""

import argparse
import json
import time

from chainasl.asl_enum import CANDIDATE_BUDGET, candidate_count, conjecture_report
from chainasl.birkhoff import build_lattice
from chainasl.poset import disjoint_union_of_chains


def partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield [k] + rest


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--degree-bound", type=int, default=3)
    ap.add_argument("--budget", type=int, default=CANDIDATE_BUDGET)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for n in range(1, args.max_size + 1):
        for lengths in partitions(n):
            cands = candidate_count(build_lattice(disjoint_union_of_chains(lengths)))
            if cands > args.budget:
                rows.append({"lengths": lengths, "skipped": f"{cands} candidates"})
                continue
            t = time.perf_counter()
            rep = conjecture_report(lengths, args.degree_bound, args.budget)
            row = rep.to_json()
            row["seconds"] = round(time.perf_counter() - t, 2)
            row["candidates"] = cands
            rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        if "skipped" in r:
            print(f"{r['lengths']}: skipped ({r['skipped']})")
        else:
            print(f"{r['lengths']}: {r['count']} systems of {r['candidates']} candidates, "
                  f"canonical distinct {r['canonical_distinct']}, equals trio {r['equals_canonical_trio']} "
                  f"({r['seconds']}s)")


if __name__ == "__main__":
    main()
