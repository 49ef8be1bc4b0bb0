"""Enumeration of compatible algebras with straightening laws on J(P).

A compatible ASL is identified with its relation system: for each
incomparable pair {I, I'} a comparable pair (J, J') with J <= I ^ I' and
J' >= I v I'.  A system is *realizable* when some assignment of monomials
w_I satisfies w_I w_I' = w_J w_J' for every pair while keeping distinct
standard monomials distinct.

Realizability is decided over any number of variables at once.  Each
coordinate of a monomial assignment is a function f on the lattice with
f(I) + f(I') = f(J) + f(J'); these form a rational vector space V.  Taking a
basis of V as coordinates separates two standard monomials exactly when some
f in V separates them, so one witness built from the basis is as good as any.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .birkhoff import DistLattice, build_lattice, incomparable_pairs, multichains
from .errors import BudgetExceeded, VerificationFailure
from .linalg import integer_scaled, nullspace
from .poset import disjoint_union_of_chains, mask_of, members
from .toric import KINDS, Monomial, RelationSystem, product, ring_spec, verify_straightening

CANDIDATE_BUDGET = 10 ** 6
ENUM_DEGREE_BOUND = 3

__all__ = [
    "RelationSystem",
    "MonomialAssignment",
    "CompatibleASL",
    "canonical_system",
    "pair_choices",
    "candidate_count",
    "candidate_systems",
    "solution_space",
    "is_realizable",
    "enumerate_compatible",
    "conjecture_report",
    "lattice_automorphisms",
    "is_symmetric",
]


@dataclass(frozen=True)
class MonomialAssignment:
    omega: tuple[Monomial, ...]
    nvars: int

    def to_json(self, L: DistLattice) -> list[dict]:
        return [{"ideal": I, "monomial": str(w)} for I, w in zip(L.elements, self.omega)]


@dataclass(frozen=True)
class CompatibleASL:
    system: RelationSystem
    tags: tuple[str, ...]
    witness: MonomialAssignment
    symmetric: bool

    @property
    def tag(self) -> str:
        return "+".join(self.tags) if self.tags else "other"


def canonical_system(L: DistLattice, kind: str) -> RelationSystem:
    return verify_straightening(ring_spec(L, kind)).system


def pair_choices(L: DistLattice) -> list[tuple[tuple[int, int], list[tuple[int, int]]]]:
    out = []
    for a, b in incomparable_pairs(L):
        lows = L.down_set(L.meet_table[a][b])
        highs = L.up_set(L.join_table[a][b])
        out.append(((a, b), [(lo, hi) for lo in lows for hi in highs]))
    return out


def candidate_count(L: DistLattice) -> int:
    total = 1
    for _, opts in pair_choices(L):
        total *= len(opts)
    return total


def candidate_systems(L: DistLattice, budget: int = CANDIDATE_BUDGET) -> Iterator[RelationSystem]:
    choices = pair_choices(L)
    total = candidate_count(L)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate relation systems exceed budget {budget}")
    pairs = [p for p, _ in choices]
    for pick in itertools.product(*(opts for _, opts in choices)):
        yield RelationSystem(L, tuple((a, b, lo, hi) for (a, b), (lo, hi) in zip(pairs, pick)))


def solution_space(R: RelationSystem) -> list[list[Fraction]]:
    """Basis of the functions f on the lattice satisfying every relation additively."""
    n = len(R.lattice)
    rows = []
    for a, b, lo, hi in R.relations:
        row = [0] * n
        row[a] += 1
        row[b] += 1
        row[lo] -= 1
        row[hi] -= 1
        rows.append(row)
    return nullspace(rows, n)


def _separated(coords: list[tuple], L: DistLattice, degree_bound: int) -> bool:
    for n in range(1, degree_bound + 1):
        seen = set()
        for mc in multichains(L, n):
            v = tuple(sum(col) for col in zip(*(coords[k] for k in mc)))
            if v in seen:
                return False
            seen.add(v)
    return True


def _witness(basis: list[list[Fraction]], n: int) -> MonomialAssignment:
    columns = []
    for vec in basis:
        ints = integer_scaled(vec)
        shift = -min(ints)
        # a common factor x_i^shift on every generator keeps all relations and distinctions
        columns.append([x + shift for x in ints])
    omega = tuple(
        Monomial.of({i + 1: col[k] for i, col in enumerate(columns)}, tdeg=1) for k in range(n)
    )
    return MonomialAssignment(omega, len(columns))


def is_realizable(R: RelationSystem, degree_bound: int = ENUM_DEGREE_BOUND) -> tuple[bool, MonomialAssignment | None]:
    if degree_bound < 2:
        raise ValueError("degree_bound must be at least 2")
    L = R.lattice
    basis = solution_space(R)
    coords = [tuple(vec[k] for vec in basis) for k in range(len(L))]
    if not _separated(coords, L, degree_bound):
        return False, None
    witness = _witness(basis, len(L))
    w = witness.omega
    for a, b, lo, hi in R.relations:
        if w[a] * w[b] != w[lo] * w[hi]:
            raise VerificationFailure("witness violates a relation", witness={"relation": [a, b, lo, hi]})
    for n in range(1, degree_bound + 1):
        values = [product(w[k] for k in mc) for mc in multichains(L, n)]
        if len(set(values)) != len(values):
            raise VerificationFailure("witness merges standard monomials", witness={"degree": n})
    return True, witness


def lattice_automorphisms(L: DistLattice) -> list[tuple[int, ...]]:
    """Automorphisms of J(P) as index permutations, induced by automorphisms of P."""
    P = L.host
    out = []
    for perm in itertools.permutations(range(1, P.d + 1)):
        if frozenset((perm[i - 1], perm[j - 1]) for i, j in P.covers) != P.covers:
            continue
        out.append(tuple(L.idx(mask_of(perm[i - 1] for i in members(I))) for I in L.elements))
    return out


def is_symmetric(R: RelationSystem, autos: list[tuple[int, ...]] | None = None) -> bool:
    """Is the system fixed by every lattice automorphism?"""
    assign = R.assign
    for g in autos if autos is not None else lattice_automorphisms(R.lattice):
        for (a, b), (lo, hi) in assign.items():
            key = (min(g[a], g[b]), max(g[a], g[b]))
            if assign[key] != (g[lo], g[hi]):
                return False
    return True


def enumerate_compatible(L: DistLattice, degree_bound: int = ENUM_DEGREE_BOUND,
                         budget: int = CANDIDATE_BUDGET) -> list[CompatibleASL]:
    canon = {kind: canonical_system(L, kind) for kind in KINDS}
    autos = lattice_automorphisms(L)
    found = []
    for R in candidate_systems(L, budget):
        ok, witness = is_realizable(R, degree_bound)
        if ok:
            tags = tuple(kind for kind in KINDS if canon[kind] == R)
            found.append(CompatibleASL(R, tags, witness, is_symmetric(R, autos)))
    return found


@dataclass
class ConjectureReport:
    lengths: list[int]
    degree_bound: int
    systems: list[CompatibleASL]
    canonical_found: dict[str, bool]
    canonical_equal: dict[str, bool]
    canonical_distinct: int
    equals_canonical_trio: bool

    def to_json(self) -> dict:
        return {
            "lengths": self.lengths,
            "degree_bound": self.degree_bound,
            "count": len(self.systems),
            "tags": [s.tag for s in self.systems],
            "canonical_found": self.canonical_found,
            "canonical_equal": self.canonical_equal,
            "canonical_distinct": self.canonical_distinct,
            "equals_canonical_trio": self.equals_canonical_trio,
        }


def conjecture_report(lengths: list[int], degree_bound: int = ENUM_DEGREE_BOUND,
                      budget: int = CANDIDATE_BUDGET) -> ConjectureReport:
    L = build_lattice(disjoint_union_of_chains(lengths))
    systems = enumerate_compatible(L, degree_bound, budget)
    canon = {kind: canonical_system(L, kind) for kind in KINDS}
    found_set = {s.system for s in systems}
    trio = set(canon.values())
    return ConjectureReport(
        lengths=list(lengths),
        degree_bound=degree_bound,
        systems=systems,
        canonical_found={k: canon[k] in found_set for k in KINDS},
        canonical_equal={f"{x}={y}": canon[x] == canon[y] for x, y in itertools.combinations(KINDS, 2)},
        canonical_distinct=len(trio),
        equals_canonical_trio=found_set == trio,
    )
