import itertools
from fractions import Fraction

import pytest
import sympy

from chainasl.asl_enum import (
    candidate_count, candidate_systems, canonical_system, conjecture_report, enumerate_compatible,
    is_realizable, is_symmetric, lattice_automorphisms, solution_space,
)
from chainasl.birkhoff import build_lattice, multichains
from chainasl.errors import BudgetExceeded
from chainasl.poset import BUILTIN_POSETS, Poset, disjoint_union_of_chains, mask_of
from chainasl.toric import KINDS, RelationSystem, custom_ring, standard_basis_check, verify_straightening


def S(*xs):
    return mask_of(xs)


def by_masks(R):
    e = R.lattice.elements
    return {(e[a], e[b]): (e[lo], e[hi]) for (a, b), (lo, hi) in R.assign.items()}


def rank_oracle(R, degree_bound):
    """Realizable iff no difference of equal-degree standard monomials lies in the relation row space."""
    L = R.lattice
    n = len(L)
    rows = []
    for a, b, lo, hi in R.relations:
        v = [0] * n
        v[a] += 1
        v[b] += 1
        v[lo] -= 1
        v[hi] -= 1
        rows.append(v)
    pivots = []
    if rows:
        red, cols = sympy.Matrix(rows).rref()
        pivots = [(c, [Fraction(int(red[i, j].p), int(red[i, j].q)) for j in range(n)]) for i, c in enumerate(cols)]
    for deg in range(1, degree_bound + 1):
        for m1, m2 in itertools.combinations(multichains(L, deg), 2):
            f = [Fraction(0)] * n
            for k in m1:
                f[k] += 1
            for k in m2:
                f[k] -= 1
            for c, row in pivots:
                if f[c] != 0:
                    coef = f[c]
                    f = [x - coef * y for x, y in zip(f, row)]
            if not any(f):
                return False
    return True


def test_canonical_systems_fig3(fig3):
    L = build_lattice(fig3)
    P = fig3.full
    assert by_masks(canonical_system(L, "order")) == {
        (S(1), S(2)): (0, S(1, 2)),
        (S(1, 2, 3, 4), S(1, 2, 3, 5)): (S(1, 2, 3), P),
    }
    assert by_masks(canonical_system(L, "chain")) == {
        (S(1), S(2)): (0, S(1, 2)),
        (S(1, 2, 3, 4), S(1, 2, 3, 5)): (0, P),
    }
    chain_lattice = build_lattice(disjoint_union_of_chains([3]))
    assert canonical_system(chain_lattice, "order").relations == ()


def test_canonical_systems_compatible(small_posets):
    for P in small_posets:
        L = build_lattice(P)
        for kind in KINDS:
            assert canonical_system(L, kind).is_compatible()


def test_candidate_counts(fig3):
    assert candidate_count(build_lattice(fig3)) == 25
    assert len(list(candidate_systems(build_lattice(fig3)))) == 25
    assert len(list(candidate_systems(build_lattice(disjoint_union_of_chains([3]))))) == 1
    assert len(list(candidate_systems(build_lattice(Poset(2, frozenset()))))) == 1
    with pytest.raises(BudgetExceeded):
        next(candidate_systems(build_lattice(fig3), budget=24))


def test_candidates_are_compatible_and_distinct(fig2):
    L = build_lattice(fig2)
    cands = list(candidate_systems(L))
    assert len(set(cands)) == len(cands)
    assert all(R.is_compatible() for R in cands)


def test_canonical_order_realizable(small_posets):
    for P in small_posets:
        ok, witness = is_realizable(canonical_system(build_lattice(P), "order"))
        assert ok and witness is not None


def test_fig3_chain_candidate_realizable(fig3):
    L = build_lattice(fig3)
    R = RelationSystem.from_assign(L, {
        (L.idx(S(1)), L.idx(S(2))): (L.idx(0), L.idx(S(1, 2))),
        (L.idx(S(1, 2, 3, 4)), L.idx(S(1, 2, 3, 5))): (L.idx(0), L.top),
    })
    assert R == canonical_system(L, "chain")
    assert is_realizable(R)[0]


def test_fig3_obstructions(fig3):
    """Only four candidates fail, each by an explicit degree-2 coincidence.

    With bottom pair -> (0, {1,2,3,k}) and top pair -> ({j}, P), adding the two
    relations cancels {1,2,3,k} and {j}: w({j'}) w({1,2,3,k'}) = w(0) w(P),
    and both sides are standard monomials.
    """
    L = build_lattice(fig3)
    found = {s.system for s in enumerate_compatible(L)}
    failed = [R for R in candidate_systems(L) if R not in found]
    bottom, top = (S(1), S(2)), (S(1, 2, 3, 4), S(1, 2, 3, 5))
    assert {(by_masks(R)[bottom][1], by_masks(R)[top][0]) for R in failed} == {
        (h, l) for h in (S(1, 2, 3, 4), S(1, 2, 3, 5)) for l in (S(1), S(2))
    }
    assert len(found) == 21


@pytest.mark.parametrize("name,bound", [("fig1", 3), ("fig2", 2), ("fig3", 3), ("fig3", 4)])
def test_realizability_matches_rank_oracle(name, bound):
    L = build_lattice(BUILTIN_POSETS[name])
    for R in candidate_systems(L):
        assert is_realizable(R, bound)[0] == rank_oracle(R, bound)


def test_monotone_in_degree_bound(fig2, fig3):
    for P in (fig2, fig3):
        L = build_lattice(P)
        for R in candidate_systems(L):
            hi = is_realizable(R, 4)[0]
            mid = is_realizable(R, 3)[0]
            lo = is_realizable(R, 2)[0]
            assert (not hi or mid) and (not mid or lo)


def test_degree_bound_validation(fig1):
    with pytest.raises(ValueError):
        is_realizable(canonical_system(build_lattice(fig1), "order"), 1)


def test_solution_space_contains_constants(fig2):
    L = build_lattice(fig2)
    R = canonical_system(L, "chain")
    basis = solution_space(R)
    rows = [[int(k == a) + int(k == b) - int(k == lo) - int(k == hi) for k in range(len(L))]
            for a, b, lo, hi in R.relations]
    assert len(basis) == len(L) - sympy.Matrix(rows).rank()
    ones = sympy.Matrix([[1] * len(L)])
    B = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in basis])
    assert B.col_join(ones).rank() == B.rank()


def test_enumerated_witnesses(fig2, fig3):
    for P in (fig2, fig3):
        L = build_lattice(P)
        for s in enumerate_compatible(L):
            assert s.system.is_compatible()
            ring = custom_ring(L, s.witness.omega)
            assert verify_straightening(ring).system == s.system
            assert standard_basis_check(ring, 3).ok
            assert all(e >= 0 for w in s.witness.omega for _, e in w.exps)


def test_canonical_always_enumerated(small_posets, fig2, fig3):
    sample = [P for P in small_posets if candidate_count(build_lattice(P)) <= 4096][::5]
    for P in sample + [fig2, fig3]:
        L = build_lattice(P)
        found = {s.system for s in enumerate_compatible(L)}
        for kind in KINDS:
            assert canonical_system(L, kind) in found


def test_automorphisms(fig1, fig3):
    assert len(lattice_automorphisms(build_lattice(fig1))) == 1
    L3 = build_lattice(fig3)
    assert len(lattice_automorphisms(L3)) == 4
    assert all(is_symmetric(canonical_system(L3, k)) for k in KINDS)
    assert sum(s.symmetric for s in enumerate_compatible(L3)) == 9


def test_conjecture_examples():
    rep = conjecture_report([2, 1])
    assert len(rep.systems) == 1 and rep.equals_canonical_trio
    assert all(rep.canonical_equal.values())
    rep = conjecture_report([1])
    assert len(rep.systems) == 1 and rep.systems[0].system.relations == ()
    rep = conjecture_report([2, 2])
    assert all(rep.canonical_found.values())
    assert isinstance(rep.equals_canonical_trio, bool)
