from fractions import Fraction

import pytest

from splitfields.errors import DimensionMismatch
from splitfields.fields import prime_field, rationals
from splitfields.linalg import Matrix, in_row_space, row_space_basis
from splitfields import polys

Q = rationals()
F5 = prime_field(5)


def qmat(rows):
    return Matrix.from_rows(Q, [[Q.element([Fraction(e)]) for e in r] for r in rows])


def test_rref_and_rank():
    m = qmat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    red, rank, pivots = m.rref()
    assert rank == 2
    assert pivots == (0, 1)
    # pivot rows are normalized
    assert red.entries[0][0] == Q.one()


def test_kernel_basis_is_canonical_and_correct():
    m = qmat([[1, 2, 3], [2, 4, 6]])
    ker = m.kernel_basis()
    assert len(ker) == 2
    for v in ker:
        assert all(not bool(c) for c in m.apply(v))


def test_solve_and_no_solution():
    m = qmat([[1, 1], [0, 1]])
    b = [Q.element([Fraction(3)]), Q.element([Fraction(1)])]
    x = m.solve(b)
    assert list(m.apply(x)) == b
    singular = qmat([[1, 1], [2, 2]])
    assert singular.solve([Q.one(), Q.zero()]) is None


def test_inverse():
    m = qmat([[2, 1], [1, 1]])
    inv = m.inverse()
    assert inv @ m == Matrix.identity(Q, 2)
    assert qmat([[1, 2], [2, 4]]).inverse() is None


def test_matmul_shape_check():
    with pytest.raises(DimensionMismatch):
        qmat([[1, 2]]) @ qmat([[1, 2]])


def test_min_poly_rotation():
    # companion of x^2 + 1
    m = qmat([[0, -1], [1, 0]])
    mp = m.min_poly()
    assert [c.coords[0] for c in mp] == [1, 0, 1]


def test_min_poly_divides_evaluation_to_zero():
    m = Matrix.from_rows(F5, [[F5.element([1]), F5.element([2])],
                              [F5.element([0]), F5.element([1])]])
    mp = m.min_poly()
    assert polys.eval_matrix(mp, m) == Matrix.zeros(F5, 2, 2)


def test_row_space_membership():
    basis = row_space_basis(Q, [
        (Q.one(), Q.zero(), Q.one()),
        (Q.zero(), Q.one(), Q.one()),
    ])
    assert in_row_space(Q, basis, (Q.one(), Q.one(), Q.element([Fraction(2)])))
    assert not in_row_space(Q, basis, (Q.one(), Q.zero(), Q.zero()))


def test_kronecker_dimensions():
    a = qmat([[1, 2], [3, 4]])
    b = qmat([[0, 1], [1, 0]])
    k = a.kronecker(b)
    assert (k.rows, k.cols) == (4, 4)
    assert k.entries[0][1] == Q.one()
