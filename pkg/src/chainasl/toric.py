"""Monomial realizations of algebras with straightening laws on J(P).

A ring is described by one degree-1 generator ``t * w_I`` per lattice element.
All straightening relations in this setting are monomial identities
``w_I w_I' = w_J w_J'``, so no coefficient field is ever needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .birkhoff import DistLattice, count_multichains, incomparable_pairs, multichains, star_ideal
from .errors import BudgetExceeded, NotInLattice, VerificationFailure
from .poset import dual, max_subset, members, min_subset

DEGREE_BOUND = 4
KINDS = ("order", "chain", "chain_dual")


@dataclass(frozen=True, order=True)
class Monomial:
    """``t^tdeg * prod x_i^e`` with ``exps`` a sorted tuple of nonzero ``(i, e)``."""

    exps: tuple[tuple[int, int], ...] = ()
    tdeg: int = 0

    def __post_init__(self):
        for i, e in self.exps:
            if e < 0:
                raise ValueError(f"negative exponent {e} on x{i}")

    @classmethod
    def of(cls, exps: Mapping[int, int] | Iterable[tuple[int, int]] = (), tdeg: int = 0) -> "Monomial":
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[int, int] = {}
        for i, e in items:
            acc[i] = acc.get(i, 0) + e
        return cls(tuple(sorted((i, e) for i, e in acc.items() if e)), tdeg)

    @classmethod
    def squarefree(cls, mask: int, tdeg: int = 1) -> "Monomial":
        return cls(tuple((i, 1) for i in members(mask)), tdeg)

    def exponent(self, i: int) -> int:
        return dict(self.exps).get(i, 0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.of(itertools.chain(self.exps, other.exps), self.tdeg + other.tdeg)

    def __str__(self):
        parts = []
        if self.tdeg:
            parts.append("t" if self.tdeg == 1 else f"t^{self.tdeg}")
        parts += [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.exps]
        return "*".join(parts) or "1"


def product(gens: Iterable[Monomial]) -> Monomial:
    acc = Monomial()
    for g in gens:
        acc = acc * g
    return acc


def _require(L: DistLattice, I: int) -> None:
    if I not in L.index:
        raise NotInLattice(f"{I:#b} is not an ideal of {L.host}")


def order_generator(L: DistLattice, I: int) -> Monomial:
    _require(L, I)
    return Monomial.squarefree(I)


def chain_generator(L: DistLattice, I: int) -> Monomial:
    _require(L, I)
    return Monomial.squarefree(max_subset(L.host, I))


def dual_chain_generator(L: DistLattice, I: int) -> Monomial:
    # maxima of the P*-ideal P \ I are the P-minima of the complement
    _require(L, I)
    return Monomial.squarefree(min_subset(L.host, L.host.full & ~I))


_GENERATORS = {
    "order": order_generator,
    "chain": chain_generator,
    "chain_dual": dual_chain_generator,
}


@dataclass(frozen=True)
class RelationSystem:
    """Assignment of a comparable pair (low, high) to every incomparable pair.

    ``relations`` is the sorted tuple of ``(a, b, low, high)`` lattice indices
    with ``a < b``; two systems are equal exactly when these tuples agree.
    """

    lattice: DistLattice
    relations: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def from_assign(cls, L: DistLattice, assign: Mapping[tuple[int, int], tuple[int, int]]) -> "RelationSystem":
        rels = []
        for (a, b), (lo, hi) in assign.items():
            a, b = min(a, b), max(a, b)
            rels.append((a, b, lo, hi))
        return cls(L, tuple(sorted(rels)))

    @property
    def assign(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {(a, b): (lo, hi) for a, b, lo, hi in self.relations}

    def is_compatible(self) -> bool:
        L = self.lattice
        if [(a, b) for a, b, _, _ in self.relations] != incomparable_pairs(L):
            return False
        return all(
            L.leq[lo][L.meet_table[a][b]] and L.leq[L.join_table[a][b]][hi]
            for a, b, lo, hi in self.relations
        )

    def to_json(self) -> list[dict]:
        e = self.lattice.elements
        return [
            {"pair": [e[a], e[b]], "low": e[lo], "high": e[hi]}
            for a, b, lo, hi in self.relations
        ]


@dataclass(frozen=True)
class RingSpec:
    kind: str
    lattice: DistLattice
    gens: tuple[Monomial, ...]
    system: RelationSystem | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.gens) != len(self.lattice):
            raise ValueError("need one generator per lattice element")
        if any(g.tdeg != 1 for g in self.gens):
            raise ValueError("generators must have t-degree 1")
        if len(set(self.gens)) != len(self.gens):
            raise VerificationFailure(
                "generator assignment is not injective",
                witness=_first_collision(self.lattice, self.gens),
            )

    def value(self, factors: Iterable[int]) -> Monomial:
        return product(self.gens[k] for k in factors)


def _first_collision(L, gens):
    seen = {}
    for k, g in enumerate(gens):
        if g in seen:
            return {"elements": [L.elements[seen[g]], L.elements[k]], "monomial": str(g)}
        seen[g] = k
    return None


def ring_spec(L: DistLattice, kind: str) -> RingSpec:
    if kind not in _GENERATORS:
        raise ValueError(f"unknown ring kind {kind!r}; expected one of {KINDS}")
    gen = _GENERATORS[kind]
    return RingSpec(kind, L, tuple(gen(L, I) for I in L.elements))


def custom_ring(L: DistLattice, omega: Iterable[Monomial], system: RelationSystem | None = None) -> RingSpec:
    return RingSpec("custom", L, tuple(omega), system)


def canonical_pair(spec: RingSpec, a: int, b: int) -> tuple[int, int]:
    """The (low, high) straightening pair the ring's formula prescribes for {a, b}."""
    L = spec.lattice
    P = L.host
    I, J = L.elements[a], L.elements[b]
    if spec.kind == "order":
        return L.idx(I & J), L.idx(I | J)
    if spec.kind == "chain":
        return L.idx(star_ideal(P, I, J)), L.idx(I | J)
    if spec.kind == "chain_dual":
        co = P.full
        s = star_ideal(dual(P), co & ~I, co & ~J)
        return L.idx(I & J), L.idx(co & ~s)
    raise ValueError(f"no formula for ring kind {spec.kind!r}")


@dataclass
class PairCheck:
    pair: tuple[int, int]
    low: int
    high: int
    lhs: Monomial
    rhs: Monomial

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class StraighteningReport:
    kind: str
    checks: list[PairCheck]
    system: RelationSystem

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        e = self.system.lattice.elements
        return {
            "kind": self.kind,
            "ok": self.ok,
            "pairs": [
                {
                    "pair": [e[c.pair[0]], e[c.pair[1]]],
                    "low": e[c.low],
                    "high": e[c.high],
                    "lhs": str(c.lhs),
                    "rhs": str(c.rhs),
                    "ok": c.ok,
                }
                for c in self.checks
            ],
        }


def _search_pair(spec: RingSpec, a: int, b: int) -> tuple[int, int]:
    # custom rings: locate the unique standard degree-2 monomial equal to the product
    L = spec.lattice
    target = spec.gens[a] * spec.gens[b]
    hits = [
        (lo, hi)
        for lo in range(len(L))
        for hi in range(lo, len(L))
        if L.leq[lo][hi] and spec.gens[lo] * spec.gens[hi] == target
    ]
    e = L.elements
    if len(hits) != 1:
        raise VerificationFailure(
            f"product over pair has {len(hits)} standard expressions, expected 1",
            witness={"pair": [e[a], e[b]], "matches": [[e[x], e[y]] for x, y in hits]},
        )
    lo, hi = hits[0]
    if not (L.leq[lo][a] and L.leq[lo][b]):
        raise VerificationFailure(
            "leading factor of straightening relation is not below both factors",
            witness={"pair": [e[a], e[b]], "low": e[lo], "high": e[hi]},
        )
    return lo, hi


def verify_straightening(spec: RingSpec, raise_on_failure: bool = True) -> StraighteningReport:
    L = spec.lattice
    checks = []
    for a, b in incomparable_pairs(L):
        if spec.kind == "custom":
            lo, hi = _search_pair(spec, a, b)
        else:
            lo, hi = canonical_pair(spec, a, b)
        checks.append(PairCheck((a, b), lo, hi, spec.gens[a] * spec.gens[b], spec.gens[lo] * spec.gens[hi]))
    system = RelationSystem.from_assign(L, {c.pair: (c.low, c.high) for c in checks})
    report = StraighteningReport(spec.kind, checks, system)
    if raise_on_failure:
        for c in checks:
            if not c.ok:
                e = L.elements
                raise VerificationFailure(
                    "straightening identity fails",
                    witness={"pair": [e[c.pair[0]], e[c.pair[1]]], "lhs": str(c.lhs), "rhs": str(c.rhs)},
                )
    return report


def relation_system(spec: RingSpec) -> RelationSystem:
    if spec.system is not None:
        return spec.system
    return verify_straightening(spec).system


def hilbert_dim(spec: RingSpec, n: int, bound: int = DEGREE_BOUND) -> int:
    """Number of distinct monomials that are products of exactly n generators."""
    if n > bound:
        raise BudgetExceeded(f"degree {n} exceeds bound {bound}")
    return len({spec.value(f) for f in itertools.combinations_with_replacement(range(len(spec.gens)), n)})


def straighten(factors: Iterable[int], system: RelationSystem, fuel: int | None = None) -> tuple[tuple[int, ...], int]:
    """Rewrite a factor multiset to a multichain; returns (factors, steps)."""
    L = system.lattice
    assign = system.assign
    cur = sorted(factors)
    n = len(cur)
    if fuel is None:
        fuel = 10 * (n * n + 1)
    steps = 0
    while True:
        hit = next(
            ((p, q) for p in range(n) for q in range(p + 1, n) if not L.comparable(cur[p], cur[q])),
            None,
        )
        if hit is None:
            return tuple(cur), steps
        if steps >= fuel:
            raise VerificationFailure(
                "rewriting fuel exhausted",
                witness={"factors": [L.elements[k] for k in cur], "fuel": fuel},
            )
        p, q = hit
        lo, hi = assign[(cur[p], cur[q])]
        cur[p], cur[q] = lo, hi
        cur.sort()
        steps += 1


@dataclass
class DegreeCheck:
    n: int
    multichains: int
    hilbert_dim: int
    distinct_standard: int
    products: int
    max_steps: int

    @property
    def ok(self) -> bool:
        return self.multichains == self.distinct_standard == self.hilbert_dim


@dataclass
class BasisReport:
    kind: str
    degrees: list[DegreeCheck]

    @property
    def ok(self) -> bool:
        return all(d.ok for d in self.degrees)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "degrees": [
                {
                    "n": d.n,
                    "multichains": d.multichains,
                    "hilbert_dim": d.hilbert_dim,
                    "distinct_standard": d.distinct_standard,
                    "products": d.products,
                    "max_rewrite_steps": d.max_steps,
                }
                for d in self.degrees
            ],
        }


def standard_basis_check(spec: RingSpec, n_max: int, bound: int = DEGREE_BOUND) -> BasisReport:
    """Check independence and spanning of standard monomials up to degree n_max."""
    if n_max > bound:
        raise BudgetExceeded(f"degree {n_max} exceeds bound {bound}")
    L = spec.lattice
    system = relation_system(spec)
    e = L.elements
    degrees = []
    for n in range(1, n_max + 1):
        chains = multichains(L, n)
        values = {}
        for mc in chains:
            v = spec.value(mc)
            if v in values:
                raise VerificationFailure(
                    "two standard monomials share a value",
                    witness={"degree": n, "first": [e[k] for k in values[v]], "second": [e[k] for k in mc], "monomial": str(v)},
                )
            values[v] = mc
        max_steps = 0
        n_products = 0
        for f in itertools.combinations_with_replacement(range(len(L)), n):
            n_products += 1
            std, steps = straighten(f, system)
            max_steps = max(max_steps, steps)
            if spec.value(std) != spec.value(f):
                raise VerificationFailure(
                    "rewriting changed the monomial value",
                    witness={"degree": n, "factors": [e[k] for k in f], "result": [e[k] for k in std]},
                )
        hd = hilbert_dim(spec, n, bound)
        check = DegreeCheck(n, count_multichains(L, n), hd, len(values), n_products, max_steps)
        if not check.ok:
            raise VerificationFailure(
                "standard monomial count differs from Hilbert function",
                witness={"degree": n, "multichains": check.multichains, "hilbert_dim": hd},
            )
        degrees.append(check)
    return BasisReport(spec.kind, degrees)
