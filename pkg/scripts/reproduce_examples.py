"""Count compatible ASLs on J(P) for the three example posets at several degree bounds.

Also lists, for each poset, which systems are fixed by every lattice
automorphism, and prints each system as low/high pairs.
"""

import argparse

from chainasl.asl_enum import candidate_count, enumerate_compatible
from chainasl.birkhoff import build_lattice
from chainasl.poset import BUILTIN_POSETS, format_subset


def describe(system):
    e = system.lattice.elements
    return "; ".join(
        f"{format_subset(e[a])}|{format_subset(e[b])} -> {format_subset(e[lo])},{format_subset(e[hi])}"
        for a, b, lo, hi in system.relations
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bounds", default="2,3,4")
    ap.add_argument("--list", action="store_true", help="print every system")
    args = ap.parse_args()
    bounds = [int(b) for b in args.bounds.split(",")]
    for name, P in BUILTIN_POSETS.items():
        L = build_lattice(P)
        print(f"{name}: {P}  |J(P)|={len(L)}  candidates={candidate_count(L)}")
        for b in bounds:
            found = enumerate_compatible(L, b)
            sym = sum(s.symmetric for s in found)
            tags = sorted({t for s in found for t in s.tags})
            print(f"  degree bound {b}: {len(found)} systems, {sym} automorphism-fixed, canonical tags {tags}")
        if args.list:
            for s in enumerate_compatible(L, max(bounds)):
                print(f"    [{s.tag}{', fixed' if s.symmetric else ''}] {describe(s.system)}")


if __name__ == "__main__":
    main()
