from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from chainasl.linalg import det, integer_scaled, inverse, lagrange_leading_coefficient, nullspace, rank

matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5)
)
square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_nullspace_against_sympy(rows):
    ncols = len(rows[0])
    basis = nullspace(rows, ncols)
    M = sympy.Matrix(rows)
    assert len(basis) == ncols - M.rank()
    assert rank(rows) == M.rank()
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in rows)
    if basis:
        assert sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in basis]).rank() == len(basis)


@settings(max_examples=100, deadline=None)
@given(square)
def test_det_against_sympy(rows):
    assert det(rows) == sympy.Matrix(rows).det()


@settings(max_examples=50, deadline=None)
@given(square)
def test_inverse(rows):
    inv = inverse(rows)
    if sympy.Matrix(rows).det() == 0:
        assert inv is None
    else:
        n = len(rows)
        prod = [[sum(Fraction(rows[i][k]) * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


def test_integer_scaled():
    assert integer_scaled([Fraction(1, 2), Fraction(-1, 3)]) == [3, -2]
    assert integer_scaled([Fraction(2), Fraction(4)]) == [1, 2]


def test_leading_coefficient():
    # (n+1)(n+2)/2 has leading coefficient 1/2
    xs = [0, 1, 2]
    assert lagrange_leading_coefficient(xs, [(n + 1) * (n + 2) // 2 for n in xs]) == Fraction(1, 2)
    n = sympy.symbols("n")
    poly = 3 * n ** 3 - n + 7
    xs = [0, 1, 2, 3]
    assert lagrange_leading_coefficient(xs, [int(poly.subs(n, x)) for x in xs]) == 3
