from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from anglekit.linalg import (dot, fr, identity, matvec, nullspace, primitive,
                             rank, rref, solve, transpose, vec)

small = st.integers(min_value=-6, max_value=6)
matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                       min_size=1, max_size=5))


def test_fr_coerces():
    assert fr(2) == Fraction(2)
    assert fr("3/4") == Fraction(3, 4)
    assert fr(Fraction(1, 3)) == Fraction(1, 3)


def test_rref_identity_is_fixed():
    m = identity(4)
    work, pivots = rref(m)
    assert work == identity(4)
    assert pivots == [0, 1, 2, 3]


def test_rref_known_case():
    work, pivots = rref([[2, 4], [1, 2]])
    assert work == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]]
    assert pivots == [0]


@given(matrices)
def test_rref_idempotent(m):
    once, piv1 = rref(m)
    twice, piv2 = rref(once)
    assert once == twice and piv1 == piv2


@given(matrices)
def test_rank_nullity(m):
    ncols = len(m[0])
    r = rank(m)
    basis = nullspace(m)
    assert r + len(basis) == ncols
    for v in basis:
        assert all(x == 0 for x in matvec(m, v))
    # independence: stack the basis and re-rank
    if basis:
        assert rank(basis) == len(basis)


@given(matrices, st.data())
def test_solve_or_certificate(m, data):
    ncols = len(m[0])
    b = data.draw(st.lists(small, min_size=len(m), max_size=len(m)))
    x, cert = solve(m, b)
    if cert is None:
        assert matvec(m, x) == [fr(v) for v in b]
    else:
        assert all(v == 0 for v in matvec(transpose(m), cert))
        assert dot(cert, vec(b)) == 1


@given(matrices, st.data())
def test_solve_finds_constructed_solutions(m, data):
    ncols = len(m[0])
    x0 = data.draw(st.lists(small, min_size=ncols, max_size=ncols))
    b = matvec(m, x0)
    x, cert = solve(m, b)
    assert cert is None
    assert matvec(m, x) == b


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert primitive([4, 6]) == [2, 3]
    assert primitive([0, 0]) == [0, 0]
    assert primitive([Fraction(-2, 7)]) == [-1]
