"""Order and chain polytopes: membership, Ehrhart counts, IDP, triangulation.

Everything is exact integer or rational arithmetic.  Lattice points are plain
tuples of ints.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .birkhoff import build_lattice, maximal_lattice_chains
from .errors import BudgetExceeded, ParseError, VerificationFailure
from .linalg import det, inverse, lagrange_leading_coefficient
from .poset import Poset, antichains, count_linear_extensions, ideals, max_subset, maximal_chains, members

BOX_BUDGET = 10 ** 7
POLYTOPE_KINDS = ("order", "chain")

LatticePoint = tuple[int, ...]


def rho(P: Poset, W: int) -> LatticePoint:
    """Indicator vector of the subset W."""
    return tuple((W >> i) & 1 for i in range(P.d))


@dataclass(frozen=True)
class PolytopeSpec:
    host: Poset
    kind: str

    def __post_init__(self):
        if self.kind not in POLYTOPE_KINDS:
            raise ValueError(f"unknown polytope kind {self.kind!r}")


@lru_cache(maxsize=None)
def _chain_index_lists(P: Poset) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(i - 1 for i in c) for c in maximal_chains(P))


@lru_cache(maxsize=None)
def _strict_relations(P: Poset) -> tuple[tuple[int, int], ...]:
    return tuple((i - 1, j - 1) for j in range(1, P.d + 1) for i in members(P.down[j - 1]) if i != j)


def contains_dilated(spec: PolytopeSpec, pt: LatticePoint, n: int) -> bool:
    P = spec.host
    if len(pt) != P.d:
        raise ParseError(f"point has {len(pt)} coordinates, poset has {P.d} elements")
    if any(a < 0 for a in pt):
        return False
    if spec.kind == "order":
        if any(a > n for a in pt):
            return False
        return all(pt[i] >= pt[j] for i, j in _strict_relations(P))
    return all(sum(pt[i] for i in c) <= n for c in _chain_index_lists(P))


def _is_midpoint(p, q, r) -> bool:
    return all(2 * a == b + c for a, b, c in zip(p, q, r))


def vertices(spec: PolytopeSpec) -> list[LatticePoint]:
    P = spec.host
    subsets = ideals(P) if spec.kind == "order" else antichains(P)
    pts = [rho(P, W) for W in subsets]
    for p in pts:
        if not contains_dilated(spec, p, 1):
            raise VerificationFailure("listed vertex lies outside the polytope", witness={"point": list(p)})
        for q, r in itertools.combinations(pts, 2):
            if p != q and p != r and _is_midpoint(p, q, r):
                raise VerificationFailure("listed vertex is a midpoint", witness={"point": list(p)})
    return pts


def _check_budget(P: Poset, n: int, budget: int) -> None:
    if (n + 1) ** P.d > budget:
        raise BudgetExceeded(f"box scan needs {(n + 1) ** P.d} points, budget is {budget}")


def lattice_points(spec: PolytopeSpec, n: int, budget: int = BOX_BUDGET) -> list[LatticePoint]:
    """Integer points of n * polytope, by scanning the box [0, n]^d."""
    _check_budget(spec.host, n, budget)
    return [pt for pt in itertools.product(range(n + 1), repeat=spec.host.d) if contains_dilated(spec, pt, n)]


def ehrhart_count(spec: PolytopeSpec, n: int, budget: int = BOX_BUDGET) -> int:
    return len(lattice_points(spec, n, budget))


def ehrhart_table(spec: PolytopeSpec, max_dilate: int, budget: int = BOX_BUDGET) -> list[int]:
    return [ehrhart_count(spec, n, budget) for n in range(max_dilate + 1)]


@dataclass
class IDPReport:
    n: int
    ok: bool
    counts: list[int]
    witness: LatticePoint | None = None

    def __bool__(self):
        return self.ok


def idp_check(spec: PolytopeSpec, n: int, budget: int = BOX_BUDGET) -> IDPReport:
    """Is every lattice point of n * polytope a sum of n lattice points of the polytope?"""
    _check_budget(spec.host, n, budget)
    base = lattice_points(spec, 1, budget)
    sums = {tuple([0] * spec.host.d)}
    counts = [1]
    for _ in range(n):
        sums = {tuple(a + b for a, b in zip(s, p)) for s in sums for p in base}
        counts.append(len(sums))
    target = lattice_points(spec, n, budget)
    missing = sorted(set(target) - sums)
    return IDPReport(n, not missing and len(sums) == len(target), counts, missing[0] if missing else None)


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[LatticePoint, ...]
    chain: tuple[int, ...] = field(default=(), compare=False)

    def edge_matrix(self) -> list[list[int]]:
        v0 = self.vertices[0]
        return [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]

    def determinant(self) -> int:
        return det(self.edge_matrix())


def canonical_triangulation(P: Poset) -> list[Simplex]:
    """One simplex per maximal chain of J(P), vertices rho(max(I_k))."""
    L = build_lattice(P)
    return [
        Simplex(tuple(rho(P, max_subset(P, L.elements[k])) for k in chain), tuple(chain))
        for chain in maximal_lattice_chains(L)
    ]


def normalized_volume(P: Poset, budget: int = BOX_BUDGET) -> int:
    """d! times the leading Ehrhart coefficient of C(P), interpolated on n = 0..d."""
    spec = PolytopeSpec(P, "chain")
    xs = list(range(P.d + 1))
    lead = lagrange_leading_coefficient(xs, [ehrhart_count(spec, n, budget) for n in xs])
    vol = lead * math.factorial(P.d)
    if vol.denominator != 1:
        raise VerificationFailure("normalized volume is not an integer", witness={"volume": str(vol)})
    return int(vol)


@dataclass
class TriangulationReport:
    simplices: int
    linear_extensions: int
    determinants: list[int]
    volume_sum: int
    ehrhart_volume: int
    dilation: int
    points_checked: int
    uncovered: int
    flag_cliques: int
    ok: bool = True

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _cliques(adj: dict[int, set[int]]):
    def extend(clique, cands):
        yield clique
        for v in sorted(cands):
            yield from extend(clique + [v], {u for u in cands if u > v and u in adj[v]})

    yield from extend([], set(adj))


def verify_triangulation(P: Poset, tri: list[Simplex], dilation: int = 2, budget: int = BOX_BUDGET) -> TriangulationReport:
    """Unimodularity, volume, interior-disjointness and flagness of ``tri``.

    Raises VerificationFailure with a witness on the first failing clause.
    """
    d = P.d
    n_ext = count_linear_extensions(P)
    if len(tri) != n_ext:
        raise VerificationFailure("simplex count differs from linear extension count",
                                  witness={"simplices": len(tri), "linear_extensions": n_ext})

    dets = [s.determinant() for s in tri]
    for s, D in zip(tri, dets):
        if abs(D) != 1:
            raise VerificationFailure("simplex is not unimodular",
                                      witness={"simplex": [list(v) for v in s.vertices], "det": D})

    vol = normalized_volume(P, budget)
    if sum(abs(D) for D in dets) != vol:
        raise VerificationFailure("normalized volumes do not add up to the volume of C(P)",
                                  witness={"sum": sum(abs(D) for D in dets), "volume": vol})

    # barycentric coordinates via the inverse edge matrix (integral, as det is +-1)
    inverses = []
    for s in tri:
        inv = inverse([list(col) for col in zip(*s.edge_matrix())])
        inverses.append([[int(x) for x in row] for row in inv])
    spec = PolytopeSpec(P, "chain")
    pts = lattice_points(spec, dilation, budget)
    uncovered = 0
    for pt in pts:
        interior_in = []
        covered = False
        for k, (s, inv) in enumerate(zip(tri, inverses)):
            shifted = [a - dilation * b for a, b in zip(pt, s.vertices[0])]
            lam = [sum(r * x for r, x in zip(row, shifted)) for row in inv]
            lam0 = dilation - sum(lam)
            bary = [lam0] + lam
            if all(x >= 0 for x in bary):
                covered = True
            if all(x > 0 for x in bary):
                interior_in.append(k)
        if len(interior_in) > 1:
            raise VerificationFailure("lattice point interior to two simplices",
                                      witness={"point": list(pt), "simplices": interior_in})
        uncovered += not covered
    if uncovered:
        raise VerificationFailure("dilated lattice points not covered by the triangulation",
                                  witness={"uncovered": uncovered})

    # flagness: every clique of the 1-skeleton spans a face
    faces = [frozenset(s.vertices) for s in tri]
    verts = sorted(set().union(*faces))
    vid = {v: i for i, v in enumerate(verts)}
    adj = {i: set() for i in range(len(verts))}
    for f in faces:
        for u, v in itertools.combinations(f, 2):
            adj[vid[u]].add(vid[v])
            adj[vid[v]].add(vid[u])
    n_cliques = 0
    for cl in _cliques(adj):
        n_cliques += 1
        vs = frozenset(verts[i] for i in cl)
        if not any(vs <= f for f in faces):
            raise VerificationFailure("triangulation is not flag: clique without face",
                                      witness={"clique": [list(v) for v in sorted(vs)]})

    return TriangulationReport(len(tri), n_ext, dets, sum(abs(D) for D in dets), vol,
                               dilation, len(pts), uncovered, n_cliques)
