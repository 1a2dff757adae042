import pytest

from splitfields.algebras import (
    algebra_validate,
    cyclic_group_algebra,
    diagonal_algebra,
    field_algebra,
    group_algebra,
    is_two_sided_ideal,
    matrix_algebra,
    quaternion_algebra,
    quotient_algebra,
    upper_triangular_algebra,
)
from splitfields.errors import BadParams, NotAGroup, NotAnIdeal
from splitfields.fields import finite_field_of_degree, prime_field, rationals

Q = rationals()
F2 = prime_field(2)


@pytest.mark.parametrize("make", [
    lambda: matrix_algebra(2, Q),
    lambda: matrix_algebra(3, F2),
    lambda: cyclic_group_algebra(4, Q),
    lambda: upper_triangular_algebra(3, Q),
    lambda: quaternion_algebra(-1, -1, Q),
    lambda: diagonal_algebra(3, Q),
    lambda: field_algebra(finite_field_of_degree(2, 2)),
])
def test_constructions_satisfy_axioms(make):
    assert algebra_validate(make()) is None


def test_matrix_units_multiply():
    A = matrix_algebra(2, Q)
    # e01 * e10 = e00, e01 * e01 = 0  (row-major basis order)
    e01 = A.basis_vector(1)
    e10 = A.basis_vector(2)
    assert A.mul_coords(e01, e10) == A.basis_vector(0)
    assert all(not bool(c) for c in A.mul_coords(e01, e01))


def test_group_algebra_rejects_non_group():
    # row 1 repeats an element: not a Latin square
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1, 1]], Q)


def test_quaternion_relations():
    H = quaternion_algebra(-1, -1, Q)
    one, i, j, k = (H.basis_vector(n) for n in range(4))
    assert H.mul_coords(i, i) == tuple(-c for c in one)
    assert H.mul_coords(i, j) == k
    assert H.mul_coords(j, i) == tuple(-c for c in k)


def test_quaternions_need_odd_characteristic():
    with pytest.raises(BadParams):
        quaternion_algebra(-1, -1, F2)


def test_quotient_by_radical_of_upper_triangular():
    A = upper_triangular_algebra(2, Q)
    from splitfields.structure import radical
    rad = radical(A)
    assert is_two_sided_ideal(A, rad)
    B, proj = quotient_algebra(A, rad)
    assert B.dim == 2
    assert algebra_validate(B) is None


def test_quotient_rejects_non_ideal():
    A = matrix_algebra(2, Q)
    with pytest.raises(NotAnIdeal):
        quotient_algebra(A, [A.basis_vector(0)])


def test_opposite_is_valid():
    A = upper_triangular_algebra(2, Q)
    assert algebra_validate(A.opposite()) is None
