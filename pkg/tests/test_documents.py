import json

import pytest

from splitfields import documents as docs
from splitfields.algebras import cyclic_group_algebra, matrix_algebra
from splitfields.corpus import bundled_algebras, gaussian_rationals
from splitfields.errors import InputError
from splitfields.fields import finite_field_of_degree, prime_field, rationals


def test_field_round_trip():
    for F in (rationals(), prime_field(3), gaussian_rationals(),
              finite_field_of_degree(2, 4)):
        text = docs.dumps(docs.field_out(F))
        kind, back = docs.parse_any(text)
        assert kind == "field" and back == F
        assert docs.dumps(docs.field_out(back)) == text


def test_algebra_round_trip():
    for A in (matrix_algebra(2, rationals()),
              cyclic_group_algebra(3, prime_field(2)),
              matrix_algebra(2, gaussian_rationals())):
        text = docs.dumps(docs.algebra_out(A))
        kind, back = docs.parse_any(text)
        assert kind == "algebra" and back == A
        assert docs.dumps(docs.algebra_out(back)) == text


def test_module_round_trip():
    M = cyclic_group_algebra(3, prime_field(2)).regular_module()
    text = docs.dumps(docs.module_out(M))
    kind, back = docs.parse_any(text)
    assert kind == "module" and back == M
    assert docs.dumps(docs.module_out(back)) == text


def test_rational_scalars_are_exact_strings():
    from fractions import Fraction

    Q = rationals()
    a = Q.element([Fraction(3, 4)])
    assert docs.element_out(a) == "3/4"
    assert docs.element_in("3/4", Q, "t") == a


def test_unknown_keys_rejected():
    doc = docs.field_out(rationals())
    doc["payload"]["extra"] = 1
    with pytest.raises(InputError):
        docs.field_in(docs.loads(docs.dumps(doc)))


def test_bad_format_version_rejected():
    doc = docs.field_out(rationals())
    doc["format_version"] = "2"
    with pytest.raises(InputError):
        docs.loads(docs.dumps(doc))


def test_corrupted_constants_rejected():
    A = matrix_algebra(2, prime_field(3))
    doc = docs.algebra_out(A)
    doc["payload"]["constants"][0] = 99  # outside [0, 3)
    with pytest.raises(InputError):
        docs.algebra_in(doc)


def test_non_associative_constants_rejected():
    A = cyclic_group_algebra(2, prime_field(3))
    doc = docs.algebra_out(A)
    doc["payload"]["constants"][0] = 2  # breaks the unit law
    with pytest.raises(InputError):
        docs.algebra_in(doc)


def test_bundled_documents_validate():
    import importlib.resources as res

    names = set()
    for entry in res.files("splitfields").joinpath("data").iterdir():
        if entry.name.endswith(".json"):
            kind, obj = docs.parse_any(entry.read_text())
            assert kind in ("field", "algebra")
            names.add(entry.name[:-5])
    for name in bundled_algebras():
        assert name in names
