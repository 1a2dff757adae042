import pytest

from splitfields.algebras import (
    cyclic_group_algebra,
    diagonal_algebra,
    field_algebra,
    matrix_algebra,
    quaternion_algebra,
    upper_triangular_algebra,
)
from splitfields.errors import DegreeCapExceeded, NotSimple, PreconditionFailed
from splitfields.fields import (
    FieldEmbedding,
    embed_find,
    finite_field_of_degree,
    identity_embedding,
    number_field,
    poly_roots,
    prime_field,
    rationals,
)
from splitfields.splitting import (
    find_splitting_field,
    is_absolutely_simple,
    is_split,
    is_splitting_field,
    verify_chain_theorem,
    verify_split_radical,
)
from splitfields.structure import composition_factors

Q = rationals()
F2 = prime_field(2)
Qi = number_field([1, 0, 1])
EMB_QI = FieldEmbedding(Q, Qi, Qi.one())


def test_is_absolutely_simple_matrix_column():
    A = matrix_algebra(2, Q)
    S = composition_factors(A.regular_module())[0][0]
    flag, dim_end, image_rank = is_absolutely_simple(S)
    assert flag and dim_end == 1 and image_rank == 4


def test_is_absolutely_simple_rejects_non_simple():
    A = cyclic_group_algebra(2, Q)
    with pytest.raises(NotSimple):
        is_absolutely_simple(A.regular_module())


def test_quaternion_simple_fails_absoluteness():
    H = quaternion_algebra(-1, -1, Q)
    S = composition_factors(H.regular_module())[0][0]
    flag, dim_end, image_rank = is_absolutely_simple(S, assume_simple=True)
    assert not flag and dim_end == 4 and image_rank == 4


def test_is_split_verdicts():
    assert is_split(matrix_algebra(2, Q)).verdict
    assert is_split(diagonal_algebra(2, Q)).verdict
    assert not is_split(quaternion_algebra(-1, -1, Q)).verdict
    assert not is_split(cyclic_group_algebra(3, Q)).verdict


def test_is_splitting_field_cyclotomic():
    A = cyclic_group_algebra(3, Q)
    Qz = number_field([1, 1, 1])
    emb = FieldEmbedding(Q, Qz, Qz.one())
    rep = is_splitting_field(A, emb)
    assert rep.verdict
    assert sorted((e.module.dim, e.multiplicity) for e in rep.per_simple) \
        == [(1, 1)] * 3
    assert not is_splitting_field(A, identity_embedding(Q)).verdict


def test_is_splitting_field_gf4():
    A = field_algebra(finite_field_of_degree(2, 2))
    rep = is_splitting_field(A, embed_find(F2, finite_field_of_degree(2, 2)))
    assert rep.verdict
    assert len(rep.per_simple) == 2


def test_find_splitting_field_quaternions():
    H = quaternion_algebra(-1, -1, Q)
    res = find_splitting_field(H)
    assert res.degree == 2
    per = res.certificate.per_simple
    assert [(e.module.dim, e.multiplicity, e.dim_end) for e in per] == [(2, 2, 1)]


def test_find_splitting_field_cyclic4():
    res = find_splitting_field(cyclic_group_algebra(4, Q))
    E = res.final_field
    assert res.degree == 2
    assert poly_roots([E.one(), E.zero(), E.one()], E)  # contains a root of x^2+1


def test_find_splitting_field_respects_degree_cap():
    H = quaternion_algebra(-1, -1, Q)
    with pytest.raises(DegreeCapExceeded):
        find_splitting_field(H, max_degree=1)


def test_find_splitting_field_already_split():
    res = find_splitting_field(matrix_algebra(2, F2))
    assert res.degree == 1 and res.iterations == 0


def test_verify_split_radical_true_cases():
    emb4 = embed_find(F2, finite_field_of_degree(2, 2))
    assert verify_split_radical(matrix_algebra(2, Q), EMB_QI)
    assert verify_split_radical(upper_triangular_algebra(2, Q), EMB_QI)
    assert verify_split_radical(cyclic_group_algebra(2, F2), emb4)
    assert verify_split_radical(diagonal_algebra(2, Q), EMB_QI)


def test_verify_split_radical_requires_split():
    with pytest.raises(PreconditionFailed):
        verify_split_radical(quaternion_algebra(-1, -1, Q), EMB_QI)


def test_chain_finite_tower():
    F4 = finite_field_of_degree(2, 2)
    F16 = finite_field_of_degree(2, 4)
    rep = verify_chain_theorem(cyclic_group_algebra(3, F2),
                               embed_find(F2, F4), embed_find(F4, F16))
    assert rep.decisive and rep.agree
    assert rep.side_mid is True and rep.side_top is True


def test_chain_negative_mid():
    # QQ is not a splitting field of QC_3, and neither side claims it is
    Qz = number_field([1, 1, 1])
    emb = FieldEmbedding(Q, Qz, Qz.one())
    rep = verify_chain_theorem(cyclic_group_algebra(3, Q),
                               identity_embedding(Q), emb)
    assert rep.decisive and rep.agree
    assert rep.side_mid is False and rep.side_top is False
