import pytest

from splitfields.algebras import (
    cyclic_group_algebra,
    diagonal_algebra,
    matrix_algebra,
    quaternion_algebra,
    upper_triangular_algebra,
)
from splitfields.fields import prime_field, rationals
from splitfields.structure import (
    composition_factors,
    is_semisimple,
    oracle_composition_series_dims,
    oracle_is_simple,
    oracle_submodules,
    radical,
    simple_modules,
)

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)


def test_radical_of_semisimple_is_zero():
    for A in (matrix_algebra(2, Q), diagonal_algebra(3, Q),
              cyclic_group_algebra(3, F2)):
        assert radical(A) == []
        assert is_semisimple(A)


def test_radical_of_upper_triangular():
    A = upper_triangular_algebra(2, Q)
    rad = radical(A)
    assert len(rad) == 1
    # the strictly-upper part: coordinates concentrated on e12
    assert [bool(c) for c in rad[0]] == [False, True, False]


def test_radical_of_modular_group_algebra():
    # F_2 C_2 is local: radical spanned by 1 + g
    A = cyclic_group_algebra(2, F2)
    rad = radical(A)
    assert len(rad) == 1
    assert all(bool(c) for c in rad[0])


def test_composition_factors_matrix_algebra():
    A = matrix_algebra(3, Q)
    facs = composition_factors(A.regular_module())
    assert [(S.dim, m) for S, m in facs] == [(3, 3)]


def test_composition_factors_cyclic3_rational():
    A = cyclic_group_algebra(3, Q)
    facs = composition_factors(A.regular_module())
    assert sorted((S.dim, m) for S, m in facs) == [(1, 1), (2, 1)]


def test_composition_factors_modular():
    A = cyclic_group_algebra(2, F2)
    facs = composition_factors(A.regular_module())
    assert [(S.dim, m) for S, m in facs] == [(1, 2)]


def test_quaternions_regular_module_is_simple():
    H = quaternion_algebra(-1, -1, Q)
    facs = composition_factors(H.regular_module())
    assert [(S.dim, m) for S, m in facs] == [(4, 1)]


def test_factors_are_seed_independent():
    A = cyclic_group_algebra(4, F2)
    base = sorted(S.dim for S, m in composition_factors(A.regular_module(), seed=0)
                  for _ in range(m))
    for seed in (1, 2, 17):
        dims = sorted(S.dim for S, m
                      in composition_factors(A.regular_module(), seed=seed)
                      for _ in range(m))
        assert dims == base


def test_simple_modules_multiplicities():
    A = matrix_algebra(2, F3)
    entries = simple_modules(A).entries
    assert [(S.dim, m) for S, m in entries] == [(2, 2)]


def test_oracle_simplicity():
    A = matrix_algebra(2, F2)
    M = A.regular_module()
    assert not oracle_is_simple(M)
    S = composition_factors(M)[0][0]
    assert oracle_is_simple(S)


def test_oracle_submodule_lattice():
    # F_2 C_2 regular module: 0, the radical, and the whole thing
    A = cyclic_group_algebra(2, F2)
    assert oracle_submodules(A.regular_module()) == [0, 1, 2]


def test_oracle_series_agrees_with_structure():
    for A in (cyclic_group_algebra(4, F2), matrix_algebra(2, F3),
              upper_triangular_algebra(2, F2)):
        M = A.regular_module()
        assert sorted(oracle_composition_series_dims(M)) == \
            sorted(S.dim for S, m in composition_factors(M) for _ in range(m))
