from fractions import Fraction

import pytest

from splitfields.errors import BadParams, NoEmbedding
from splitfields.fields import (
    FieldEmbedding,
    adjoin_root,
    compose_embeddings,
    element_min_poly,
    embed_find,
    embedding_preimage,
    finite_field,
    finite_field_of_degree,
    number_field,
    poly_roots,
    prime_field,
    rationals,
    subfield_generated,
)


def test_prime_field_arithmetic():
    F5 = prime_field(5)
    a, b = F5.element([3]), F5.element([4])
    assert (a * b).coords == (2,)
    assert (a + b).coords == (2,)
    assert (a / b).coords == (2,)  # 3 * 4^{-1} = 3 * 4 = 12 = 2
    assert (-a).coords == (2,)


def test_prime_field_requires_prime():
    with pytest.raises(BadParams):
        prime_field(6)


def test_gf4_generator_relation():
    F4 = finite_field(2, [1, 1, 1])
    t = F4.generator()
    assert (t * t).coords == (1, 1)  # t^2 = t + 1
    assert (t * t * t) == F4.one()


def test_finite_field_rejects_reducible():
    with pytest.raises(BadParams):
        finite_field(2, [1, 0, 1])  # x^2 + 1 = (x+1)^2 over F_2


def test_canonical_field_of_degree():
    F16 = finite_field_of_degree(2, 4)
    # lex-least monic irreducible of degree 4 over F_2
    assert F16.modulus == (1, 0, 0, 1, 1)
    assert F16.order == 16


def test_gaussian_rationals_inverse():
    Qi = number_field([1, 0, 1])
    a = Qi.element([Fraction(1), Fraction(2)])  # 1 + 2i
    inv = a.inverse()
    assert a * inv == Qi.one()
    assert inv.coords == (Fraction(1, 5), Fraction(-2, 5))


def test_poly_roots_finite_exhaustive():
    F7 = prime_field(7)
    # x^2 - 2 has roots 3, 4 mod 7
    f = [F7.element([-2]), F7.zero(), F7.one()]
    roots = sorted(r.coords[0] for r in poly_roots(f, F7))
    assert roots == [3, 4]
    for r in poly_roots(f, F7):
        assert r * r == F7.element([2])


def test_poly_roots_rational():
    Q = rationals()
    # (x - 1/2)(x + 3)
    f = [Q.element([Fraction(-3, 2)]), Q.element([Fraction(5, 2)]), Q.one()]
    roots = sorted(r.coords[0] for r in poly_roots(f, Q))
    assert roots == [Fraction(-3), Fraction(1, 2)]


def test_embedding_is_homomorphism():
    F4 = finite_field_of_degree(2, 2)
    F16 = finite_field_of_degree(2, 4)
    emb = embed_find(F4, F16)
    for a in F4.elements():
        for b in F4.elements():
            assert emb.apply(a + b) == emb.apply(a) + emb.apply(b)
            assert emb.apply(a * b) == emb.apply(a) * emb.apply(b)
    assert emb.apply(F4.one()) == F16.one()


def test_embedding_requires_degree_divisibility():
    with pytest.raises(NoEmbedding):
        embed_find(finite_field_of_degree(2, 2), finite_field_of_degree(2, 3))


def test_embedding_rejects_non_root():
    F4 = finite_field_of_degree(2, 2)
    F16 = finite_field_of_degree(2, 4)
    with pytest.raises(NoEmbedding):
        FieldEmbedding(F4, F16, F16.generator())


def test_embedding_preimage_round_trip():
    F4 = finite_field_of_degree(2, 2)
    F16 = finite_field_of_degree(2, 4)
    emb = embed_find(F4, F16)
    for a in F4.elements():
        assert embedding_preimage(emb, emb.apply(a)) == a
    assert embedding_preimage(emb, F16.generator()) is None


def test_compose_embeddings():
    F2, F4, F16 = prime_field(2), finite_field_of_degree(2, 2), \
        finite_field_of_degree(2, 4)
    e1 = embed_find(F2, F4)
    e2 = embed_find(F4, F16)
    comp = compose_embeddings(e1, e2)
    assert comp.source == F2 and comp.target == F16
    assert comp.apply(F2.one()) == F16.one()


def test_min_poly_of_generator():
    F4 = finite_field(2, [1, 1, 1])
    mp = element_min_poly(F4.generator())
    assert list(mp) == [1, 1, 1]


def test_subfield_generated_finite():
    F16 = finite_field_of_degree(2, 4)
    E, emb = subfield_generated(F16, [F16.one()])
    assert E.degree == 1
    E, emb = subfield_generated(F16, [F16.generator()])
    assert E == F16


def test_subfield_generated_char0():
    Qi = number_field([1, 0, 1])
    i = Qi.generator()
    E, emb = subfield_generated(Qi, [i])
    assert E.degree == 2
    assert emb.apply(emb.source.generator()) in (i, -i)


def test_adjoin_root_over_rationals():
    Q = rationals()
    g = [Q.element([1]), Q.element([1]), Q.one()]  # x^2 + x + 1
    E, emb, root = adjoin_root(Q, g)
    assert E.degree == 2
    assert root * root + root + E.one() == E.zero()


def test_adjoin_root_over_number_field():
    Qi = number_field([1, 0, 1])
    g = [Qi.element([-2, 0]), Qi.zero(), Qi.one()]  # x^2 - 2 over QQ(i)
    E, emb, root = adjoin_root(Qi, g)
    assert E.degree == 4
    assert root * root == E.from_base(2)
    i = emb.apply(Qi.generator())
    assert i * i == -E.one()
