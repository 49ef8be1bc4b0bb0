"""Brute-force reference computations, kept independent of the package internals.

Only ``Poset.d`` and ``Poset.covers`` are read from package objects.
"""

import itertools
from fractions import Fraction


def closure(P):
    d = P.d
    leq = [[i == j for j in range(d + 1)] for i in range(d + 1)]
    for i, j in P.covers:
        leq[i][j] = True
    for k in range(1, d + 1):
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    return leq


def subsets(d):
    for r in range(d + 1):
        for c in itertools.combinations(range(1, d + 1), r):
            yield frozenset(c)


def to_mask(s):
    return sum(1 << (i - 1) for i in s)


def brute_ideals(P):
    leq = closure(P)
    return [s for s in subsets(P.d) if all(j in s for i in s for j in range(1, P.d + 1) if leq[j][i])]


def brute_antichains(P):
    leq = closure(P)
    return [s for s in subsets(P.d) if all(not leq[i][j] for i in s for j in s if i != j)]


def brute_linear_extensions(P):
    leq = closure(P)
    count = 0
    for perm in itertools.permutations(range(1, P.d + 1)):
        pos = {x: k for k, x in enumerate(perm)}
        if all(pos[i] <= pos[j] for i in range(1, P.d + 1) for j in range(1, P.d + 1) if leq[i][j]):
            count += 1
    return count


def brute_multichains(P, n):
    ids = brute_ideals(P)
    return sum(
        1 for seq in itertools.product(ids, repeat=n) if all(a <= b for a, b in zip(seq, seq[1:]))
    )


def brute_chain_points(P, n):
    """Lattice points of n*C(P), constraining every chain (not only maximal ones)."""
    leq = closure(P)
    chains = [s for s in subsets(P.d) if all(leq[i][j] or leq[j][i] for i in s for j in s)]
    return [
        pt for pt in itertools.product(range(n + 1), repeat=P.d)
        if all(sum(pt[i - 1] for i in c) <= n for c in chains)
    ]


def brute_order_points(P, n):
    leq = closure(P)
    return [
        pt for pt in itertools.product(range(n + 1), repeat=P.d)
        if all(pt[i - 1] >= pt[j - 1] for i in range(1, P.d + 1) for j in range(1, P.d + 1) if leq[i][j])
    ]


def brute_hilbert(gens, n):
    """Distinct exponent vectors among products of n generators (given as dicts)."""
    seen = set()
    for combo in itertools.product(range(len(gens)), repeat=n):
        acc = {}
        for k in combo:
            for var, e in gens[k].items():
                acc[var] = acc.get(var, 0) + e
        seen.add(tuple(sorted((v, e) for v, e in acc.items() if e)))
    return len(seen)


def poly_leading_coefficient(values):
    """Leading coefficient by finite differences: Delta^d f / d!."""
    diffs = list(values)
    for _ in range(len(values) - 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    d = len(values) - 1
    fact = 1
    for k in range(2, d + 1):
        fact *= k
    return Fraction(diffs[0], fact)
