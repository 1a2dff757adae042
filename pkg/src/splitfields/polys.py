"""Polynomials with coefficients in an exact field.

Polynomials are little-endian lists of field elements with no trailing zeros.
Factorization over finite fields is brute-force trial division (desk scale);
over QQ and number fields it delegates to sympy's exact routines and converts
the coefficients back into our coordinate representation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd as _int_gcd

from .errors import BadParams, TooLarge
from .fields import FieldElement, RATIONALS

_BRUTE_FORCE_CAP = 1_000_000  # candidate divisors per degree level


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def degree(coeffs):
    return len(trim(coeffs)) - 1


def add(a, b, F):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero()
        y = b[i] if i < len(b) else F.zero()
        out.append(x + y)
    return trim(out)


def sub(a, b, F):
    return add(a, [-c for c in b], F)


def mul(a, b, F):
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def poly_divmod(a, b, F):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [F.zero()] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv = b[-1].inverse()
    while len(r) >= len(b):
        if not r[-1]:
            r.pop()
            continue
        k = len(r) - len(b)
        c = r[-1] * inv
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = r[k + j] - c * y
        r.pop()
    return trim(q), trim(r)


def monic(a, F):
    a = trim(a)
    if not a:
        return a
    inv = a[-1].inverse()
    return [inv * c for c in a]


def gcd(a, b, F):
    a, b = trim(a), trim(b)
    while b:
        _, r = poly_divmod(a, b, F)
        a, b = b, r
    return monic(a, F)


def eval_at(coeffs, a):
    acc = a.field.zero()
    for c in reversed(trim(coeffs)):
        acc = acc * a + c
    return acc


def eval_matrix(coeffs, M):
    """The matrix polynomial f(M)."""
    from .linalg import Matrix

    out = Matrix.zeros(M.field, M.rows, M.cols)
    power = Matrix.identity(M.field, M.rows)
    for i, c in enumerate(trim(coeffs)):
        if c:
            out = out + power.scale(c)
        if i + 1 < len(trim(coeffs)):
            power = power @ M
    return out


def poly_key(coeffs):
    return tuple(c.coords for c in coeffs)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def factor(coeffs, F):
    """Monic irreducible factors with multiplicities, deterministically ordered.

    The product of the factors (with multiplicities) equals the monic
    normalization of the input.
    """
    coeffs = trim(coeffs)
    if degree(coeffs) < 1:
        raise BadParams("cannot factor a constant")
    f = monic(coeffs, F)
    if F.characteristic:
        factors = _factor_finite(f, F)
    else:
        factors = _factor_char0(f, F)
    factors.sort(key=lambda gm: (degree(gm[0]), poly_key(gm[0])))
    return factors


def is_irreducible(coeffs, F):
    fs = factor(coeffs, F)
    return len(fs) == 1 and fs[0][1] == 1


def _factor_finite(f, F):
    out = []
    q = F.order
    rest = f
    d = 1
    while degree(rest) > 0:
        if 2 * d > degree(rest):
            out.append((rest, 1))
            break
        if q ** d > _BRUTE_FORCE_CAP:
            raise TooLarge("finite-field factorization exceeds the desk-scale cap")
        found = False
        for tail in product(*[list(F.elements())] * d):
            g = list(tail) + [F.one()]
            quo, rem = poly_divmod(rest, g, F)
            if rem:
                continue
            mult = 1
            rest = quo
            while True:
                quo, rem = poly_divmod(rest, g, F)
                if rem:
                    break
                mult += 1
                rest = quo
            out.append((g, mult))
            found = True
        d += 1 if not found else 0
        if found:
            continue
    # collect repeats of identical factors found at the same level
    merged = {}
    order = []
    for g, m in out:
        k = poly_key(g)
        if k in merged:
            merged[k] = (g, merged[k][1] + m)
        else:
            merged[k] = (g, m)
            order.append(k)
    return [merged[k] for k in order]


def _sympy_field(F):
    import sympy

    if F.kind == RATIONALS:
        return sympy.QQ, None
    x = sympy.Symbol("x")
    den = 1
    for c in F.modulus:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    int_poly = sum(int(c * den) * x ** i for i, c in enumerate(F.modulus))
    alpha = sympy.CRootOf(sympy.Poly(int_poly, x), 0)
    return sympy.QQ.algebraic_field(alpha), alpha


def _to_sympy_rat(c):
    import sympy

    return sympy.Rational(c.numerator, c.denominator)


def _factor_char0(f, F):
    import sympy

    x = sympy.Symbol("x")
    K, _alpha = _sympy_field(F)
    if F.kind == RATIONALS:
        poly = sympy.Poly([_to_sympy_rat(c.coords[0]) for c in reversed(f)],
                          x, domain=K)
    else:
        coeffs = [K(list(reversed([_to_sympy_rat(v) for v in c.coords])))
                  for c in reversed(f)]
        poly = sympy.Poly(coeffs, x, domain=K)
    out = []
    for g, mult in poly.factor_list()[1]:
        gc = [K.convert(c) for c in reversed(g.all_coeffs())]
        elems = [_from_sympy_coeff(c, F, K) for c in gc]
        out.append((monic(elems, F), mult))
    return out


def _from_sympy_coeff(c, F, K):
    if F.kind == RATIONALS:
        r = K.to_sympy(c)
        return F.from_base(Fraction(int(r.p), int(r.q)))
    dn = list(reversed(c.to_list()))  # ascending powers of the generator
    coords = [Fraction(int(v.numerator), int(v.denominator)) for v in dn]
    return F.element(coords)
