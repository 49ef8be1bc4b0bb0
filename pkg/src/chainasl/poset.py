"""Finite posets on {1..d} and their subset calculus.

Subsets of the ground set are plain ``int`` bitmasks: element ``i`` (1-based)
is bit ``i - 1``.  Every enumeration is returned in the canonical order
(cardinality first, then bitmask value).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, NewType

from .errors import BudgetExceeded, ParseError

Ideal = NewType("Ideal", int)
Antichain = NewType("Antichain", int)

LINEAR_EXTENSION_BOUND = 10


def bit(i: int) -> int:
    return 1 << (i - 1)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= bit(i)
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_key(mask: int) -> tuple[int, int]:
    return (popcount(mask), mask)


def format_subset(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


@dataclass(frozen=True)
class Poset:
    """A poset given by its Hasse diagram.

    ``covers`` holds pairs ``(i, j)`` meaning ``x_i < x_j`` is a covering
    relation.  Construction rejects cycles, out-of-range indices and covers
    implied by transitivity.
    """

    d: int
    covers: frozenset[tuple[int, int]]
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)
    up: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ParseError(f"element count must be a positive integer, got {self.d!r}")
        covers = frozenset((int(i), int(j)) for i, j in self.covers)
        object.__setattr__(self, "covers", covers)
        for i, j in covers:
            if not (1 <= i <= self.d and 1 <= j <= self.d):
                raise ParseError(f"cover ({i}, {j}) out of range 1..{self.d}")
            if i == j:
                raise ParseError(f"cycle detected: self-cover at {i}")

        # down[i-1] = elements <= x_i, by fixpoint over the cover graph
        down = [bit(i) for i in range(1, self.d + 1)]
        changed = True
        while changed:
            changed = False
            for i, j in covers:
                new = down[j - 1] | down[i - 1]
                if new != down[j - 1]:
                    down[j - 1] = new
                    changed = True
        for i in range(1, self.d + 1):
            for j in members(down[i - 1]):
                if j != i and down[j - 1] & bit(i):
                    raise ParseError(f"cycle detected through {i} and {j}")
        for i, j in covers:
            strictly_between = (down[j - 1] & ~bit(j)) & ~down[i - 1]
            for k in members(strictly_between):
                if down[k - 1] & bit(i):
                    raise ParseError(f"redundant cover {i} {j}: implied via {k}")
        up = [0] * self.d
        for j in range(1, self.d + 1):
            for i in members(down[j - 1]):
                up[i - 1] |= bit(j)
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "up", tuple(up))

    @property
    def full(self) -> int:
        return (1 << self.d) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j - 1] & bit(i))

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def leq_matrix(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(1, self.d + 1)] for i in range(1, self.d + 1)]

    def sorted_covers(self) -> list[tuple[int, int]]:
        return sorted(self.covers)

    def __str__(self):
        body = ", ".join(f"{i}<{j}" for i, j in self.sorted_covers())
        return f"Poset(d={self.d}, covers={{{body}}})"


def parse_poset(text: str) -> Poset:
    data = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise ParseError("empty poset description")
    lineno, first = data[0]
    if not re.fullmatch(r"[+-]?\d+", first):
        raise ParseError(f"line {lineno}: expected element count, got {first!r}")
    d = int(first)
    if d < 1:
        raise ParseError(f"line {lineno}: element count must be positive, got {d}")
    covers = []
    for lineno, line in data[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise ParseError(f"line {lineno}: malformed cover line {line!r}")
        covers.append((int(parts[0]), int(parts[1])))
    if len(set(covers)) != len(covers):
        raise ParseError("duplicate cover line")
    return Poset(d, frozenset(covers))


def format_poset(P: Poset) -> str:
    lines = [str(P.d)] + [f"{i} {j}" for i, j in P.sorted_covers()]
    return "\n".join(lines) + "\n"


BUILTIN_POSETS = {
    "fig1": Poset(3, frozenset({(1, 2)})),
    "fig2": Poset(4, frozenset({(1, 2), (1, 3), (4, 3)})),
    "fig3": Poset(5, frozenset({(1, 3), (2, 3), (3, 4), (3, 5)})),
}


def load_poset(source: str) -> Poset:
    """Resolve a builtin name, ``chains:l1,l2,...``, or a file path."""
    if source in BUILTIN_POSETS:
        return BUILTIN_POSETS[source]
    if source.startswith("chains:"):
        try:
            lengths = [int(x) for x in source[len("chains:"):].split(",")]
        except ValueError:
            raise ParseError(f"bad chain lengths in {source!r}") from None
        return disjoint_union_of_chains(lengths)
    path = Path(source)
    if not path.is_file():
        raise ParseError(f"no builtin poset or file named {source!r}")
    return parse_poset(path.read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def ideals(P: Poset) -> tuple[Ideal, ...]:
    # grow from the empty ideal by adjoining elements whose strict down-set is present
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for I in frontier:
            for i in range(1, P.d + 1):
                if not I & bit(i) and (P.down[i - 1] & ~bit(i)) & ~I == 0:
                    J = I | bit(i)
                    if J not in seen:
                        seen.add(J)
                        nxt.append(J)
        frontier = nxt
    return tuple(sorted(seen, key=canonical_key))


def is_ideal(P: Poset, mask: int) -> bool:
    return all(P.down[i - 1] & ~mask == 0 for i in members(mask))


def is_antichain(P: Poset, mask: int) -> bool:
    return all(P.down[i - 1] & mask == bit(i) for i in members(mask))


def max_subset(P: Poset, Z: int) -> Antichain:
    """Elements of ``Z`` that are maximal within ``Z``."""
    return Antichain(mask_of(i for i in members(Z) if (P.up[i - 1] & Z) == bit(i)))


def min_subset(P: Poset, Z: int) -> int:
    return mask_of(i for i in members(Z) if (P.down[i - 1] & Z) == bit(i))


def ideal_generated_by(P: Poset, Y: int) -> Ideal:
    m = 0
    for i in members(Y):
        m |= P.down[i - 1]
    return Ideal(m)


@lru_cache(maxsize=None)
def antichains(P: Poset) -> tuple[Antichain, ...]:
    return tuple(sorted((max_subset(P, I) for I in ideals(P)), key=canonical_key))


def dual(P: Poset) -> Poset:
    return Poset(P.d, frozenset((j, i) for i, j in P.covers))


def maximal_chains(P: Poset) -> list[list[int]]:
    succ = {i: sorted(j for a, j in P.covers if a == i) for i in range(1, P.d + 1)}
    minimal = [i for i in range(1, P.d + 1) if P.down[i - 1] == bit(i)]
    chains = []

    def walk(path):
        nexts = succ[path[-1]]
        if not nexts:
            chains.append(list(path))
        for j in nexts:
            walk(path + [j])

    for i in minimal:
        walk([i])
    return chains


def disjoint_union_of_chains(lengths: list[int]) -> Poset:
    lengths = list(lengths)
    if not lengths:
        raise ParseError("need at least one chain length")
    if any(l < 1 for l in lengths):
        raise ParseError(f"chain lengths must be positive, got {lengths}")
    covers = []
    start = 1
    for l in lengths:
        covers.extend((start + k, start + k + 1) for k in range(l - 1))
        start += l
    return Poset(start - 1, frozenset(covers))


def count_linear_extensions(P: Poset, bound: int = LINEAR_EXTENSION_BOUND) -> int:
    """Number of order-preserving bijections onto {1..d}.

    Uses the delete-a-minimal-element recursion over remaining subsets.
    """
    if P.d > bound:
        raise BudgetExceeded(f"linear extension count needs d <= {bound}, got {P.d}")

    @lru_cache(maxsize=None)
    def count(remaining):
        if remaining == 0:
            return 1
        return sum(count(remaining & ~bit(i)) for i in members(min_subset(P, remaining)))

    return count(P.full)


def posets_from_relation(d: int, strict: Iterable[tuple[int, int]]) -> Poset:
    """Build a poset from a transitive strict order relation by Hasse reduction."""
    rel = set(strict)
    covers = {
        (i, j)
        for i, j in rel
        if not any((i, k) in rel and (k, j) in rel for k in range(1, d + 1))
    }
    return Poset(d, frozenset(covers))


def labeled_posets(d: int) -> list[Poset]:
    """Every poset on the labeled set {1..d}, no isomorphism reduction."""
    pairs = [(i, j) for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
    out = []
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            continue
        out.append(posets_from_relation(d, rel))
    return out


def all_small_posets(max_d: int = 4) -> list[Poset]:
    out = []
    for d in range(1, max_d + 1):
        out.extend(labeled_posets(d))
    return out
