import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ybalg.errors import DimensionError, FieldMismatchError, SingularMatrixError
from ybalg.fields import GF, QQ
from ybalg.linalg import (
    Matrix, kron, lift12, lift13, lift23, mat_inverse, mat_mul, nullspace, rank, solve,
    tensor_vectors, twist,
)


def M(rows, field=QQ):
    return Matrix(rows, field)


def factor_permutation(d, perm):
    """Oracle: matrix permuting the tensor factors of (k^d)^(x)3.

    ``perm`` maps output position -> input position, so the basis tensor
    e_(i0) (x) e_(i1) (x) e_(i2) goes to e_(i[perm[0]]) (x) ...
    """
    n = d ** 3
    rows = [[0] * n for _ in range(n)]
    for idx in itertools.product(range(d), repeat=3):
        src = idx[0] * d * d + idx[1] * d + idx[2]
        out = tuple(idx[perm[k]] for k in range(3))
        dst = out[0] * d * d + out[1] * d + out[2]
        rows[dst][src] = 1
    return M(rows)


def random_matrix(rng, n, field=QQ, lo=-3, hi=3):
    return M([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], field)


# --- mat_mul -------------------------------------------------------------

def test_mat_mul_examples():
    I2 = Matrix.identity(2)
    swap = M([[0, 1], [1, 0]])
    a = M([[1, 2], [3, 4]])
    assert I2 @ I2 == I2
    assert swap @ swap == I2
    assert a @ I2 == a
    assert M([[1, 2], [3, 4]]) @ M([[5], [6]]) == M([[17], [39]])


def test_mat_mul_errors():
    with pytest.raises(DimensionError):
        M([[1, 2]]) @ M([[1, 2]])
    with pytest.raises(FieldMismatchError):
        M([[1]]) @ M([[1]], GF(5))
    with pytest.raises(FieldMismatchError):
        M([[1]], GF(3)) @ M([[1]], GF(5))


# --- mat_inverse ---------------------------------------------------------

def test_inverse_examples():
    assert mat_inverse(Matrix.identity(4)) == Matrix.identity(4)
    d = M([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
    assert mat_inverse(d) == d
    with pytest.raises(SingularMatrixError):
        mat_inverse(M([[1, 1], [1, 1]]))
    with pytest.raises(DimensionError):
        mat_inverse(M([[1, 2, 3]]))


@pytest.mark.parametrize("field", [QQ, GF(2), GF(7)])
def test_inverse_round_trips(field):
    rng = random.Random(4)
    found = 0
    for n in (1, 2, 3, 4, 5):
        for _ in range(15):
            a = random_matrix(rng, n, field)
            try:
                ai = mat_inverse(a)
            except SingularMatrixError:
                assert rank(a) < n
                continue
            found += 1
            ident = Matrix.identity(n, field)
            assert a @ ai == ident
            assert ai @ a == ident
    assert found > 20


def test_inverse_of_fraction_matrix():
    a = M([["1/2", "1/3"], ["1/5", "-7"]])
    assert a @ mat_inverse(a) == Matrix.identity(2)


def test_solve_and_nullspace():
    a = M([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert a.apply(v) == (0, 0)
    part, ns = solve(a, (1, 2))
    assert a.apply(part) == (1, 2)
    assert solve(a, (1, 3)) is None


# --- kron ----------------------------------------------------------------

def test_kron_examples():
    assert kron(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(4)
    assert kron(M([[2]]), M([[3]])) == M([[6]])
    # tau (x) I on (k^2)^(x)3 swaps the first two tensor factors
    assert kron(twist(2), Matrix.identity(2)) == factor_permutation(2, (1, 0, 2))


def test_kron_block_convention():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 5], [6, 7]])
    k = kron(a, b)
    for i, j, r, s in itertools.product(range(2), repeat=4):
        assert k[i * 2 + r, j * 2 + s] == a[i, j] * b[r, s]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_kron_associative(data):
    shapes = [data.draw(st.tuples(st.integers(1, 3), st.integers(1, 3))) for _ in range(3)]
    ents = st.integers(-4, 4)
    a, b, c = (M([[data.draw(ents) for _ in range(cc)] for _ in range(rr)]) for rr, cc in shapes)
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


def test_kron_mixed_product():
    rng = random.Random(1)
    a, b, c, d = (random_matrix(rng, 2) for _ in range(4))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_tensor_vectors_match_kron_columns():
    u, v = (Fraction(1), Fraction(2)), (Fraction(3), Fraction(0), Fraction(-1))
    col_u = M([[x] for x in u])
    col_v = M([[x] for x in v])
    assert tensor_vectors(u, v) == kron(col_u, col_v).column(0)


# --- twist and lifts ----------------------------------------------------

def test_twist_examples():
    assert twist(1) == M([[1]])
    assert twist(2) == M([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    with pytest.raises(DimensionError):
        twist(0)


@pytest.mark.parametrize("d", range(1, 7))
def test_twist_involution(d):
    t = twist(d)
    assert t @ t == Matrix.identity(d * d)
    for i in range(d):
        for j in range(d):
            e = [0] * (d * d)
            e[i * d + j] = 1
            assert t.apply(e) == tuple(1 if k == j * d + i else 0 for k in range(d * d))


def test_lift_examples():
    assert lift13(twist(2), 2) == factor_permutation(2, (2, 1, 0))
    assert lift12(Matrix.identity(4), 2) == Matrix.identity(8)
    assert lift23(twist(2), 2) == factor_permutation(2, (0, 2, 1))
    assert lift12(twist(3), 3) == factor_permutation(3, (1, 0, 2))
    with pytest.raises(DimensionError):
        lift12(Matrix.identity(4), 3)


@pytest.mark.parametrize("d", [2, 3])
def test_lift13_acts_on_outer_factors(d):
    """Enumerate basis tensors: lift13(r) applies r to factors 1 and 3 only."""
    rng = random.Random(d)
    r = M([[rng.randint(-2, 2) for _ in range(d * d)] for _ in range(d * d)])
    L = lift13(r, d)
    for i, j, k in itertools.product(range(d), repeat=3):
        col = L.column(i * d * d + j * d + k)
        expected = [0] * d ** 3
        for p, q in itertools.product(range(d), repeat=2):
            coeff = r[p * d + q, i * d + k]
            expected[p * d * d + j * d + q] += coeff
        assert list(col) == expected


def test_scale_and_arith():
    a = M([[1, 2], [3, 4]])
    assert 2 * a == a + a
    assert (a - a).is_zero()
    assert Fraction(1, 2) * a == M([["1/2", 1], ["3/2", 2]])
    assert a.T == M([[1, 3], [2, 4]])
    assert Matrix.from_columns([(1, 3), (2, 4)]) == a
