"""Left modules over a structure-constant algebra.

A module of dimension m is one m x m action matrix per algebra basis element.
The module axioms (representation relation and unit acting as identity) are
checkable exactly.  Hom spaces are computed as kernels of the stacked
intertwining equations, so their bases are canonical and reproducible.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Optional

from .errors import AlgebraMismatch, BadParams, NotInvariant
from .linalg import Matrix, in_row_space, row_space_basis


class Module:
    __slots__ = ("algebra", "dim", "actions")

    def __init__(self, algebra, dim, actions):
        actions = tuple(actions)
        if len(actions) != algebra.dim:
            raise BadParams("one action matrix per algebra basis element required")
        for m in actions:
            if m.rows != dim or m.cols != dim:
                raise BadParams("action matrices must be dim x dim")
            if m.field != algebra.field:
                raise BadParams("action matrix over the wrong field")
        self.algebra = algebra
        self.dim = dim
        self.actions = actions

    def action_of(self, coords):
        """The action matrix of an arbitrary algebra element."""
        out = Matrix.zeros(self.algebra.field, self.dim, self.dim)
        for c, m in zip(coords, self.actions):
            if c:
                out = out + m.scale(c)
        return out

    def key(self):
        return (self.algebra.key(), self.dim,
                tuple(m.key() for m in self.actions))

    def __eq__(self, other):
        return isinstance(other, Module) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Module(dim {self.dim} over {self.algebra!r})"


def module_validate(M):
    """None when the module axioms hold, else a violation report."""
    A = M.algebra
    unit_action = M.action_of(A.unit)
    if unit_action != Matrix.identity(A.field, M.dim):
        return "the unit does not act as the identity"
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = M.actions[i] @ M.actions[j]
            rhs = M.action_of(A.constants[i][j])
            if lhs != rhs:
                return f"representation relation fails at pair ({i}, {j})"
    return None


def zero_module(A):
    return Module(A, 0, [Matrix.zeros(A.field, 0, 0)] * A.dim)


# ---------------------------------------------------------------------------
# spinning and subquotients
# ---------------------------------------------------------------------------

def spin(M, seed_vectors):
    """Canonical basis of the submodule generated by the seed vectors."""
    field = M.algebra.field
    basis = row_space_basis(field, [v for v in seed_vectors if any(bool(c) for c in v)])
    frontier = list(basis)
    while frontier:
        new_frontier = []
        for v in frontier:
            for act in M.actions:
                w = act.apply(v)
                if any(bool(c) for c in w) and not in_row_space(field, basis, w):
                    basis = row_space_basis(field, basis + [w])
                    new_frontier.append(w)
        frontier = new_frontier
    return basis


def is_invariant(M, vectors):
    basis = row_space_basis(M.algebra.field, vectors)
    return spin(M, basis) == basis


class SubQuotient(NamedTuple):
    sub: Module
    quot: Module
    sub_basis: tuple          # canonical rows spanning the submodule
    complement_cols: tuple    # standard-basis columns spanning the complement


def sub_quotient(M, sub_vectors):
    """Restricted and induced modules on canonical bases."""
    field = M.algebra.field
    basis = row_space_basis(field, sub_vectors)
    if spin(M, basis) != basis:
        raise NotInvariant("the subspace is not closed under the action")
    s = len(basis)
    if basis:
        _, _, pivots = Matrix.from_rows(field, basis).rref()
    else:
        pivots = ()
    comp = tuple(j for j in range(M.dim) if j not in pivots)

    def reduce_mod_sub(v):
        v = list(v)
        for row, pc in zip(basis, pivots):
            c = v[pc]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v[j] for j in comp)

    basis_mat = Matrix(field, M.dim, s,
                       [[basis[j][i] for j in range(s)] for i in range(M.dim)]) \
        if s else None
    sub_actions, quot_actions = [], []
    for act in M.actions:
        if s:
            cols = []
            for v in basis:
                w = act.apply(v)
                sol = basis_mat.solve(list(w))
                cols.append(sol)
            sub_actions.append(Matrix(field, s, s,
                                      [[cols[j][i] for j in range(s)]
                                       for i in range(s)]))
        else:
            sub_actions.append(Matrix.zeros(field, 0, 0))
        qcols = []
        for j in comp:
            e = [field.zero()] * M.dim
            e[j] = field.one()
            qcols.append(reduce_mod_sub(act.apply(e)))
        quot_actions.append(Matrix(field, len(comp), len(comp),
                                   [[qcols[j][i] for j in range(len(comp))]
                                    for i in range(len(comp))]))
    S = Module(M.algebra, s, sub_actions)
    Q = Module(M.algebra, len(comp), quot_actions)
    return SubQuotient(S, Q, tuple(basis), comp)


def direct_sum(M, N):
    if M.algebra != N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    field = M.algebra.field
    actions = []
    for am, an in zip(M.actions, N.actions):
        top = am.augment(Matrix.zeros(field, M.dim, N.dim))
        bot = Matrix.zeros(field, N.dim, M.dim).augment(an)
        actions.append(top.stack(bot))
    return Module(M.algebra, M.dim + N.dim, actions)


def conjugate(M, P):
    """The same module written in the basis given by the columns of P."""
    Pinv = P.inverse()
    if Pinv is None:
        raise BadParams("change of basis must be invertible")
    return Module(M.algebra, M.dim, [Pinv @ a @ P for a in M.actions])


def inflate(M, projection, A):
    """Pull a module over a quotient algebra back along the projection."""
    actions = []
    for i in range(A.dim):
        coords = projection.apply(
            [A.field.one() if j == i else A.field.zero() for j in range(A.dim)])
        # projection rows are Q-coords of A basis vectors; columns here
        actions.append(M.action_of(coords))
    return Module(A, M.dim, actions)


# ---------------------------------------------------------------------------
# hom spaces
# ---------------------------------------------------------------------------

class HomBasis(NamedTuple):
    source: Module
    target: Module
    mats: tuple


def hom_space(M, N):
    """Canonical basis of the intertwiner space Hom(M, N)."""
    if M.algebra != N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    field = M.algebra.field
    nm, nn = M.dim, N.dim
    if nm == 0 or nn == 0:
        return HomBasis(M, N, ())
    unknowns = nn * nm  # f[r][c], row-major
    rows = []
    for am, an in zip(M.actions, N.actions):
        # (f @ am - an @ f)[r][c] = 0
        for r in range(nn):
            for c in range(nm):
                row = [field.zero()] * unknowns
                for k in range(nm):
                    row[r * nm + k] = row[r * nm + k] + am.entries[k][c]
                for k in range(nn):
                    row[k * nm + c] = row[k * nm + c] - an.entries[r][k]
                rows.append(row)
    system = Matrix(field, len(rows), unknowns, rows)
    mats = []
    for v in system.kernel_basis():
        mats.append(Matrix(field, nn, nm,
                           [[v[r * nm + c] for c in range(nm)] for r in range(nn)]))
    return HomBasis(M, N, tuple(mats))


def end_algebra(M):
    """The endomorphism algebra on the canonical hom basis.

    Returns ``(algebra, hom_basis)``; multiplication is matrix composition.
    """
    from .algebras import Algebra

    if M.dim < 1:
        raise BadParams("end_algebra needs a nonzero module")
    hb = hom_space(M, M)
    field = M.algebra.field
    d = len(hb.mats)
    cols = [m.vec() for m in hb.mats]
    coord_mat = Matrix(field, M.dim * M.dim, d,
                       [[cols[j][i] for j in range(d)]
                        for i in range(M.dim * M.dim)])
    constants = []
    for i in range(d):
        row = []
        for j in range(d):
            prod_ = hb.mats[i] @ hb.mats[j]
            sol = coord_mat.solve(list(prod_.vec()))
            row.append(list(sol))
        constants.append(row)
    unit = list(coord_mat.solve(list(Matrix.identity(field, M.dim).vec())))
    labels = [f"f{i}" for i in range(d)]
    return Algebra(field, d, labels, constants, unit), hb


# ---------------------------------------------------------------------------
# isomorphism testing
# ---------------------------------------------------------------------------

class IsoResult(NamedTuple):
    isomorphic: Optional[bool]   # None means Unknown (randomized cap hit)
    witness: Optional[Matrix]


_RANDOM_CAP = 200
_EXHAUSTIVE_CAP = 1 << 16


def is_isomorphic(M, N, seed=0, both_simple=False):
    """Search for an invertible intertwiner.

    Basis elements first, then seeded random small-coefficient combinations;
    over finite fields at desk scale the search is exhaustive and the verdict
    is decisive.  Over QQ a cap-out returns Unknown (``isomorphic=None``).
    """
    if M.algebra != N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if M.dim != N.dim:
        return IsoResult(False, None)
    if M.dim == 0:
        return IsoResult(True, Matrix.zeros(M.algebra.field, 0, 0))
    hb = hom_space(M, N)
    if not hb.mats:
        return IsoResult(False, None)
    for f in hb.mats:
        if f.is_invertible():
            return IsoResult(True, f)
    if both_simple:
        # Schur: a nonzero hom between simple modules is an isomorphism, so
        # reaching this point means the basis elements are all zero (impossible)
        return IsoResult(True, hb.mats[0])
    field = M.algebra.field
    d = len(hb.mats)
    if field.characteristic and field.order ** d <= _EXHAUSTIVE_CAP:
        from itertools import product as iproduct

        for coeffs in iproduct(*[list(field.elements())] * d):
            f = _combine(hb.mats, coeffs, field)
            if f is not None and f.is_invertible():
                return IsoResult(True, f)
        return IsoResult(False, None)
    rng = random.Random(seed)
    for _ in range(_RANDOM_CAP):
        if field.characteristic:
            coeffs = [field.element([rng.randrange(field.characteristic)
                                     for _ in range(field.degree)])
                      for _ in range(d)]
        else:
            coeffs = [field.from_base(rng.randint(-3, 3)) for _ in range(d)]
        f = _combine(hb.mats, coeffs, field)
        if f is not None and f.is_invertible():
            return IsoResult(True, f)
    return IsoResult(None, None)


def _combine(mats, coeffs, field):
    out = None
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        term = m.scale(c)
        out = term if out is None else out + term
    return out
