"""The distributive lattice J(P) of poset ideals.

Lattice elements are referred to by their index in the canonical ideal list;
``L.elements[k]`` is the bitmask of the k-th ideal.  The canonical order is a
linear extension of inclusion, so ``a <= b`` in the lattice implies
``index(a) <= index(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceeded, NotInLattice
from .poset import Poset, ideal_generated_by, ideals, max_subset, popcount

LATTICE_BOUND = 4096
MULTICHAIN_DEGREE_BOUND = 6


@dataclass(frozen=True)
class DistLattice:
    host: Poset
    elements: tuple[int, ...]
    index: dict = field(repr=False, compare=False)
    leq: tuple[tuple[bool, ...], ...] = field(repr=False, compare=False)
    meet_table: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    join_table: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def __hash__(self):
        return hash((self.host, self.elements))

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def idx(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise NotInLattice(f"{mask:#b} is not an ideal of {self.host}") from None

    def down_set(self, k: int) -> list[int]:
        return [j for j in range(len(self)) if self.leq[j][k]]

    def up_set(self, k: int) -> list[int]:
        return [j for j in range(len(self)) if self.leq[k][j]]

    def comparable(self, a: int, b: int) -> bool:
        return self.leq[a][b] or self.leq[b][a]

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Covering pairs of the inclusion order (one element added)."""
        return [
            (a, b)
            for a in range(len(self))
            for b in range(a + 1, len(self))
            if self.leq[a][b] and popcount(self.elements[b]) == popcount(self.elements[a]) + 1
        ]


@lru_cache(maxsize=None)
def build_lattice(P: Poset, bound: int = LATTICE_BOUND) -> DistLattice:
    elems = ideals(P)
    if len(elems) > bound:
        raise BudgetExceeded(f"J(P) has {len(elems)} elements, bound is {bound}")
    index = {m: k for k, m in enumerate(elems)}
    n = len(elems)
    leq = tuple(tuple(elems[a] & ~elems[b] == 0 for b in range(n)) for a in range(n))
    meet = tuple(tuple(index[elems[a] & elems[b]] for b in range(n)) for a in range(n))
    join = tuple(tuple(index[elems[a] | elems[b]] for b in range(n)) for a in range(n))
    return DistLattice(P, elems, index, leq, meet, join)


def _check(L: DistLattice, I: int) -> None:
    if I not in L.index:
        raise NotInLattice(f"{I:#b} is not an ideal of {L.host}")


def meet_join(L: DistLattice, I: int, J: int) -> tuple[int, int]:
    _check(L, I)
    _check(L, J)
    return I & J, I | J


def star_ideal(P: Poset, I: int, J: int) -> int:
    """I*J: the ideal generated by max(I & J) & (max(I) | max(J))."""
    return ideal_generated_by(P, max_subset(P, I & J) & (max_subset(P, I) | max_subset(P, J)))


def star(L: DistLattice, I: int, J: int) -> int:
    _check(L, I)
    _check(L, J)
    return star_ideal(L.host, I, J)


def incomparable_pairs(L: DistLattice) -> list[tuple[int, int]]:
    """Unordered incomparable pairs as index pairs ``(a, b)`` with ``a < b``."""
    n = len(L)
    return [(a, b) for a in range(n) for b in range(a + 1, n) if not L.comparable(a, b)]


def count_multichains(L: DistLattice, n: int, bound: int = MULTICHAIN_DEGREE_BOUND) -> int:
    """Weakly increasing sequences I_1 <= ... <= I_n, by path counting."""
    if n > bound:
        raise BudgetExceeded(f"multichain degree {n} exceeds bound {bound}")
    if n == 0:
        return 1
    size = len(L)
    ways = [1] * size
    for _ in range(n - 1):
        ways = [sum(ways[a] for a in range(b + 1) if L.leq[a][b]) for b in range(size)]
    return sum(ways)


def multichains(L: DistLattice, n: int) -> list[tuple[int, ...]]:
    """All degree-n multichains as nondecreasing index tuples."""
    out = []

    def extend(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else None
        for k in range(last if last is not None else 0, len(L)):
            if last is None or L.leq[last][k]:
                prefix.append(k)
                extend(prefix)
                prefix.pop()

    extend([])
    return out


def maximal_lattice_chains(L: DistLattice) -> list[list[int]]:
    succ = {a: [] for a in range(len(L))}
    for a, b in L.cover_pairs():
        succ[a].append(b)
    chains = []

    def walk(path):
        if path[-1] == L.top:
            chains.append(list(path))
            return
        for b in succ[path[-1]]:
            walk(path + [b])

    walk([L.bottom])
    return chains
