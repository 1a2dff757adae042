"""Exact arithmetic in the supported field tower.

Supported fields: the rationals QQ, number fields QQ[x]/(f), prime fields
GF(p) and finite extensions GF(p)[x]/(g).  Every field is stored in absolute
form over its prime base; elements are coefficient vectors over that base
(``fractions.Fraction`` in characteristic 0, reduced integers otherwise).
Embeddings between fields are explicit and recorded by the image of the
source generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .errors import (
    BadParams,
    FieldMismatch,
    NoEmbedding,
    PrimitiveElementError,
)

RATIONALS = "rationals"
NUMBER_FIELD = "number_field"
PRIME_FIELD = "prime_field"
FINITE_FIELD = "finite_field"


# ---------------------------------------------------------------------------
# base-scalar polynomial helpers (little-endian coefficient lists)
# ---------------------------------------------------------------------------

def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _bp_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _bp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p:
        out = [c % p for c in out]
    return _bp_trim(out)


def _bp_sub(a, b, p):
    out = list(a) + [0] * (len(b) - len(a))
    for j, y in enumerate(b):
        out[j] -= y
    if p:
        out = [c % p for c in out]
    return _bp_trim(out)


def _bp_divmod(a, b, p):
    """Polynomial division; the divisor's leading coefficient must be invertible."""
    a = _bp_trim(list(a))
    b = _bp_trim(list(b))
    q = [0] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    inv = pow(lead, -1, p) if p else Fraction(1) / lead
    while a and len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        k = len(a) - len(b)
        c = a[-1] * inv
        if p:
            c %= p
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
            if p:
                a[k + j] %= p
        a.pop()
    return _bp_trim(q), _bp_trim(a)


def _bp_irreducible_mod_p(coeffs, p):
    """Brute-force irreducibility over GF(p): trial division up to half degree."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            _, r = _bp_divmod(list(coeffs), g, p)
            if not r:
                return False
    return True


def _rational_poly_irreducible(coeffs):
    """Irreducibility over QQ via exact factorization (sympy)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
               for i, c in enumerate(coeffs))
    factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))[1]
    return len(factors) == 1 and factors[0][1] == 1 and \
        factors[0][0].degree() == len(coeffs) - 1


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    """An exact field: QQ, QQ[x]/(f), GF(p) or GF(p)[x]/(g).

    ``modulus`` is the monic irreducible defining polynomial over the prime
    base, little-endian, or ``None`` when the degree is 1.
    """

    kind: str
    characteristic: int
    modulus: tuple | None
    degree: int

    # -- constructors for elements --------------------------------------

    def _reduce_scalar(self, c):
        if self.characteristic:
            return int(c) % self.characteristic
        if isinstance(c, Fraction):
            return c
        return Fraction(c)

    def element(self, coords):
        coords = list(coords)
        if len(coords) > self.degree:
            raise BadParams("coordinate vector longer than the field degree")
        coords += [0] * (self.degree - len(coords))
        return FieldElement(self, tuple(self._reduce_scalar(c) for c in coords))

    def from_base(self, c):
        return self.element([c])

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def generator(self):
        """The class of x for extensions, 1 for degree-1 fields."""
        if self.degree == 1:
            return self.one()
        return self.element([0, 1])

    def elements(self):
        """All elements in canonical (lexicographic coordinate) order; finite only."""
        if not self.characteristic:
            raise BadParams("cannot enumerate an infinite field")
        p = self.characteristic
        for coords in product(range(p), repeat=self.degree):
            yield FieldElement(self, coords)

    @property
    def order(self):
        if not self.characteristic:
            raise BadParams("infinite field has no order")
        return self.characteristic ** self.degree

    def __repr__(self):
        if self.kind == RATIONALS:
            return "QQ"
        if self.kind == PRIME_FIELD:
            return f"GF({self.characteristic})"
        if self.kind == FINITE_FIELD:
            return f"GF({self.characteristic}^{self.degree})"
        return f"QQ[x]/({_poly_str(self.modulus)})"


def _poly_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*x" if c != 1 else "x")
        else:
            terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
    return " + ".join(terms) if terms else "0"


def rationals():
    return FieldDescriptor(RATIONALS, 0, None, 1)


def prime_field(p):
    if not _is_prime(p):
        raise BadParams(f"{p} is not prime")
    return FieldDescriptor(PRIME_FIELD, p, None, 1)


def number_field(modulus):
    """QQ[x]/(f) for monic irreducible f of degree >= 2 over QQ."""
    coeffs = [Fraction(c) for c in modulus]
    if len(coeffs) < 3:
        raise BadParams("number field modulus must have degree >= 2")
    if coeffs[-1] != 1:
        raise BadParams("modulus must be monic")
    if not _rational_poly_irreducible(coeffs):
        raise BadParams("modulus is reducible over QQ")
    return FieldDescriptor(NUMBER_FIELD, 0, tuple(coeffs), len(coeffs) - 1)


def finite_field(p, modulus):
    """GF(p)[x]/(g) for monic irreducible g of degree >= 2 over GF(p)."""
    if not _is_prime(p):
        raise BadParams(f"{p} is not prime")
    coeffs = [int(c) % p for c in modulus]
    if len(coeffs) < 3:
        raise BadParams("finite field modulus must have degree >= 2")
    if coeffs[-1] != 1:
        raise BadParams("modulus must be monic")
    if not _bp_irreducible_mod_p(coeffs, p):
        raise BadParams("modulus is reducible over the prime field")
    return FieldDescriptor(FINITE_FIELD, p, tuple(coeffs), len(coeffs) - 1)


def finite_field_of_degree(p, m):
    """The canonical GF(p^m): lexicographically least monic irreducible modulus."""
    if m == 1:
        return prime_field(p)
    for tail in product(range(p), repeat=m):
        coeffs = list(tail) + [1]
        if _bp_irreducible_mod_p(coeffs, p):
            return finite_field(p, coeffs)
    raise BadParams("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

_REDUCTION_CACHE = {}


def _reduction_rows(field):
    """Coordinates of x^k mod modulus for k = degree .. 2*degree-2."""
    rows = _REDUCTION_CACHE.get(field)
    if rows is None:
        d = field.degree
        mod = field.modulus
        p = field.characteristic
        cur = [(-c) % p if p else -c for c in mod[:d]]
        rows = [tuple(cur)]
        for _ in range(d - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for j in range(d):
                    nxt[j] -= top * mod[j]
            if p:
                nxt = [c % p for c in nxt]
            rows.append(tuple(nxt))
            cur = nxt
        _REDUCTION_CACHE[field] = rows
    return rows


class FieldElement:
    """An element of a :class:`FieldDescriptor`, stored as reduced coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch(f"elements of {self.field} expected")

    def __add__(self, other):
        self._check(other)
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coords, other.coords)))
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, tuple((-a) % p for a in self.coords))
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        p = f.characteristic
        d = f.degree
        if d == 1:
            v = self.coords[0] * other.coords[0]
            return FieldElement(f, ((v % p) if p else v,))
        out = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                out[i + j] += a * b
        rows = _reduction_rows(f)
        for k in range(2 * d - 2, d - 1, -1):
            c = out[k]
            if c:
                row = rows[k - d]
                for j in range(d):
                    out[j] += c * row[j]
        if p:
            return FieldElement(f, tuple(c % p for c in out[:d]))
        return FieldElement(f, tuple(out[:d]))

    def inverse(self):
        f = self.field
        p = f.characteristic
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if f.degree == 1:
            c = self.coords[0]
            return FieldElement(f, ((pow(c, -1, p) if p else Fraction(1) / c),))
        # extended Euclid against the modulus over the prime base
        r0, r1 = list(f.modulus), _bp_trim(list(self.coords))
        t0, t1 = [], [1 if p else Fraction(1)]
        while r1:
            q, r = _bp_divmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _bp_sub(t0, _bp_mul(q, t1, p), p)
        # r0 is a nonzero constant gcd
        c = r0[0]
        inv = pow(c, -1, p) if p else Fraction(1) / c
        coeffs = [(x * inv) % p if p else x * inv for x in t0]
        return f.element(coeffs)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.field == other.field \
            and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def sort_key(self):
        return self.coords

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coords[0])
        return f"({_poly_str(self.coords)})"


def field_arith(op, a, b=None):
    """Dispatcher over the element operations; ``inv`` raises on zero."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise BadParams(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        a._check(b)
        return a == b
    raise BadParams(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

_EMB_POWERS = {}


@dataclass(frozen=True)
class FieldEmbedding:
    """A field map recorded by the image of the source generator."""

    source: FieldDescriptor
    target: FieldDescriptor
    generator_image: FieldElement

    def __post_init__(self):
        if self.source.characteristic != self.target.characteristic:
            raise NoEmbedding("characteristics differ")
        if self.generator_image.field != self.target:
            raise FieldMismatch("generator image must live in the target field")
        if self.source.degree > 1:
            g = self.generator_image
            acc = self.target.zero()
            for c in reversed(self.source.modulus):
                acc = acc * g + self.target.from_base(c)
            if acc:
                raise NoEmbedding("generator image is not a root of the source modulus")
        elif self.generator_image != self.target.one():
            raise NoEmbedding("a degree-1 field embeds via 1 -> 1")

    def _powers(self):
        key = (self.source, self.target, self.generator_image.coords)
        pows = _EMB_POWERS.get(key)
        if pows is None:
            pows = [self.target.one()]
            for _ in range(self.source.degree - 1):
                pows.append(pows[-1] * self.generator_image)
            _EMB_POWERS[key] = pows
        return pows

    def apply(self, a):
        if a.field != self.source:
            raise FieldMismatch("element does not belong to the embedding source")
        pows = self._powers()
        out = self.target.zero()
        for c, g in zip(a.coords, pows):
            if c:
                out = out + _scalar_mul(c, g)
        return out

    def __repr__(self):
        return f"{self.source} -> {self.target} (gen -> {self.generator_image})"


def _scalar_mul(c, elem):
    p = elem.field.characteristic
    if p:
        return FieldElement(elem.field, tuple((c * x) % p for x in elem.coords))
    return FieldElement(elem.field, tuple(c * x for x in elem.coords))


def identity_embedding(F):
    if F.degree == 1:
        return FieldEmbedding(F, F, F.one())
    return FieldEmbedding(F, F, F.generator())


def compose_embeddings(first, second):
    """The embedding second∘first."""
    if first.target != second.source:
        raise FieldMismatch("embeddings do not compose")
    return FieldEmbedding(first.source, second.target,
                          second.apply(first.generator_image))


def embed_find(E, F):
    """The canonical embedding E -> F: least root in lexicographic coordinate order."""
    if E.characteristic != F.characteristic:
        raise NoEmbedding("characteristics differ")
    if E.degree == 1:
        return FieldEmbedding(E, F, F.one())
    if E == F:
        return identity_embedding(E)
    if F.characteristic and F.degree % E.degree:
        raise NoEmbedding(f"[{E}] does not divide into [{F}]")
    target_mod = [F.from_base(c) for c in E.modulus]
    roots = poly_roots(target_mod, F)
    if not roots:
        raise NoEmbedding(f"the modulus of {E} has no root in {F}")
    root = min(roots, key=lambda r: r.sort_key())
    return FieldEmbedding(E, F, root)


def embedding_preimage(emb, elem):
    """The unique preimage of ``elem`` under ``emb``, or None if not in the image."""
    from .linalg import Matrix

    if elem.field != emb.target:
        raise FieldMismatch("element does not belong to the embedding target")
    base = prime_field(emb.target.characteristic) if emb.target.characteristic \
        else rationals()
    pows = emb._powers()
    cols = [[base.from_base(c) for c in g.coords] for g in pows]
    mat = Matrix(base, emb.target.degree, emb.source.degree,
                 [[cols[j][i] for j in range(emb.source.degree)]
                  for i in range(emb.target.degree)])
    rhs = [base.from_base(c) for c in elem.coords]
    sol = mat.solve(rhs)
    if sol is None:
        return None
    return emb.source.element([c.coords[0] for c in sol])


# ---------------------------------------------------------------------------
# roots, minimal polynomials, generated subfields
# ---------------------------------------------------------------------------

def poly_roots(coeffs, F):
    """All distinct roots in F of a nonzero polynomial with coefficients in F."""
    from . import polys

    coeffs = polys.trim(list(coeffs))
    if not coeffs:
        raise BadParams("the zero polynomial has every root")
    if len(coeffs) == 1:
        return []
    if F.characteristic:
        return [a for a in F.elements() if not polys.eval_at(coeffs, a)]
    roots = []
    for g, _ in polys.factor(coeffs, F):
        if len(g) == 2:  # monic linear x + c
            roots.append(-g[0])
    roots.sort(key=lambda r: r.sort_key())
    return roots


def element_min_poly(a):
    """Monic minimal polynomial of ``a`` over the prime base, as base scalars."""
    from .linalg import Matrix

    F = a.field
    base = prime_field(F.characteristic) if F.characteristic else rationals()
    pows = [F.one()]
    for k in range(1, F.degree + 1):
        pows.append(pows[-1] * a)
        rows = [[base.from_base(c) for c in e.coords] for e in pows[:-1]]
        mat = Matrix(base, F.degree, k, [[rows[j][i] for j in range(k)]
                                         for i in range(F.degree)])
        rhs = [base.from_base(c) for c in pows[-1].coords]
        sol = mat.solve(rhs)
        if sol is not None:
            coeffs = [-c.coords[0] for c in sol] + [1]
            if F.characteristic:
                coeffs = [c % F.characteristic for c in coeffs]
            return coeffs
    raise RuntimeError("unreachable: the element degree is bounded by the field degree")


def element_degree(a):
    return len(element_min_poly(a)) - 1


def _span_rows(F, elems):
    """Row space over the prime base of the coordinate vectors of ``elems``."""
    from .linalg import Matrix

    base = prime_field(F.characteristic) if F.characteristic else rationals()
    rows = [[base.from_base(c) for c in e.coords] for e in elems]
    mat = Matrix(base, len(rows), F.degree, rows)
    red, rank, _ = mat.rref()
    return [red.row(i) for i in range(rank)], base


def _in_span(rows, vec, base, width):
    from .linalg import Matrix

    if not rows:
        return not any(bool(c) for c in vec)
    mat = Matrix(base, width, len(rows),
                 [[rows[j][i] for j in range(len(rows))] for i in range(width)])
    return mat.solve(list(vec)) is not None


def _closure_span(F, gens):
    """Basis (as elements of F) of the subfield generated by the prime base and gens."""
    elems = [F.one()] + list(gens)
    rows, base = _span_rows(F, elems)
    basis = [F.one()] + [g for g in gens]
    while True:
        rows, base = _span_rows(F, basis)
        grown = False
        current = list(basis)
        for b in current:
            for g in gens:
                prod_ = b * g
                vec = [base.from_base(c) for c in prod_.coords]
                if not _in_span(rows, vec, base, F.degree):
                    basis.append(prod_)
                    rows, base = _span_rows(F, basis)
                    grown = True
        if not grown:
            break
    return len(rows)


def subfield_generated(F, gens):
    """Smallest subfield of F containing the prime base (or QQ) and ``gens``.

    Returns ``(E, embedding E -> F)``.
    """
    gens = [g for g in gens if g.field == F]
    if F.characteristic:
        m = 1
        for g in gens:
            m = lcm(m, element_degree(g))
        E = finite_field_of_degree(F.characteristic, m)
        return E, embed_find(E, F)
    dim = _closure_span(F, gens)
    if dim == 1:
        E = rationals()
        return E, FieldEmbedding(E, F, F.one())
    gamma = _primitive_element(F, gens, dim)
    coeffs = element_min_poly(gamma)
    E = number_field(coeffs)
    return E, FieldEmbedding(E, F, gamma)


def _primitive_element(F, gens, dim):
    """gamma with QQ(gamma) = QQ(gens), found by the c-multiplier search."""
    nontrivial = [g for g in gens if element_degree(g) > 1]
    if not nontrivial:
        raise PrimitiveElementError("no generator of degree > 1")
    gamma = nontrivial[0]
    for g in nontrivial[1:]:
        pair_dim = _closure_span(F, [gamma, g])
        if element_degree(gamma) == pair_dim:
            continue
        for c in _multipliers():
            cand = gamma + _scalar_mul(F._reduce_scalar(c), g)
            if element_degree(cand) == pair_dim:
                gamma = cand
                break
        else:
            raise PrimitiveElementError(
                "no primitive element with multipliers up to +-20")
    if element_degree(gamma) != dim:
        raise PrimitiveElementError("primitive element search failed")
    return gamma


def _multipliers():
    for c in range(1, 21):
        yield c
        yield -c


# ---------------------------------------------------------------------------
# adjoining a root of an irreducible polynomial
# ---------------------------------------------------------------------------

def adjoin_root(E, g):
    """Extend E by a root of the monic irreducible polynomial g over E.

    Returns ``(E2, embedding E -> E2, root in E2)``.  In characteristic p the
    result is the canonical field of the right degree; in characteristic 0 it
    is an absolute number field built from a primitive element.
    """
    from . import polys

    d = polys.degree(g)
    if d < 1:
        raise BadParams("cannot adjoin a root of a constant")
    if d == 1:
        return E, identity_embedding(E), -g[0]
    if E.characteristic:
        E2 = finite_field_of_degree(E.characteristic, E.degree * d)
        emb = embed_find(E, E2)
        mapped = [emb.apply(c) for c in g]
        roots = poly_roots(mapped, E2)
        return E2, emb, min(roots, key=lambda r: r.sort_key())
    if E.kind == RATIONALS:
        coeffs = [c.coords[0] for c in g]
        E2 = number_field(coeffs)
        emb = FieldEmbedding(E, E2, E2.one())
        return E2, emb, E2.generator()
    return _adjoin_root_number_field(E, g)


class _QuotientRing:
    """E[x]/(g) as an exact QQ-algebra; elements are coefficient lists over E."""

    def __init__(self, E, g):
        from . import polys

        self.E = E
        self.g = g
        self.polys = polys
        self.deg = polys.degree(g)
        self.dim = E.degree * self.deg

    def coords(self, elem):
        out = []
        for j in range(self.deg):
            c = elem[j] if j < len(elem) else self.E.zero()
            out.extend(c.coords)
        return out

    def mul(self, a, b):
        prod_ = self.polys.mul(a, b, self.E)
        _, r = self.polys.poly_divmod(prod_, self.g, self.E)
        return r


def _adjoin_root_number_field(E, g):
    from .linalg import Matrix

    ring = _QuotientRing(E, g)
    QQ = rationals()
    alpha = [E.generator()]          # generator of E as a constant polynomial
    xbar = [E.zero(), E.one()]       # the adjoined root
    for c in _multipliers():
        gamma = ring.polys.add(xbar, [_scalar_mul(Fraction(c), E.generator())], E)
        pows = [[E.one()]]
        rows = [ring.coords(pows[0])]
        for _ in range(ring.dim):
            pows.append(ring.mul(pows[-1], gamma))
            rows.append(ring.coords(pows[-1]))
        qrows = [[QQ.from_base(v) for v in row] for row in rows]
        mat = Matrix(QQ, ring.dim, ring.dim,
                     [[qrows[j][i] for j in range(ring.dim)]
                      for i in range(ring.dim)])
        _, rank, _ = mat.rref()
        if rank < ring.dim:
            continue
        # minimal polynomial of gamma: express gamma^dim in lower powers
        rhs = [QQ.from_base(v) for v in rows[ring.dim]]
        sol = mat.solve(rhs)
        modulus = [-c.coords[0] for c in sol] + [Fraction(1)]
        E2 = number_field(modulus)
        in_powers = lambda elem: [c.coords[0] for c in mat.solve(
            [QQ.from_base(v) for v in ring.coords(elem)])]
        emb = FieldEmbedding(E, E2, E2.element(in_powers(alpha)))
        root = E2.element(in_powers(xbar))
        return E2, emb, root
    raise PrimitiveElementError("no primitive element with multipliers up to +-20")
