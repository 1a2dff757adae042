"""Scalar extension of algebras and modules, and descent to subfields.

Extension maps structure constants and action matrices entrywise through an
explicit field embedding.  The hom-space dimension identity (extension
commutes with taking intertwiners) is checked exactly; a failure is raised as
an internal invariant breach, never returned as data.  Descent recovers the
smallest subfield containing all action-matrix entries and rewrites the
module there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .algebras import Algebra, algebra_validate
from .errors import (
    AlgebraMismatch,
    BadBasis,
    FieldMismatch,
    InternalInvariantError,
    NotOverE,
)
from .fields import (
    FieldEmbedding,
    compose_embeddings,
    embed_find,
    embedding_preimage,
    identity_embedding,
    subfield_generated,
)
from .linalg import Matrix
from .modules import Module, conjugate, hom_space, is_isomorphic


@dataclass(frozen=True)
class ExtensionContext:
    emb: FieldEmbedding
    algebra: Algebra
    extended: Algebra


def map_matrix(emb, m):
    return Matrix(emb.target, m.rows, m.cols,
                  [[emb.apply(e) for e in row] for row in m.entries])


def extend_algebra(A, emb):
    """The algebra with the same structure constants over the larger field."""
    if A.field != emb.source:
        raise FieldMismatch("algebra is not defined over the embedding source")
    constants = [[[emb.apply(e) for e in vec] for vec in row]
                 for row in A.constants]
    unit = [emb.apply(e) for e in A.unit]
    extended = Algebra(emb.target, A.dim, A.basis_labels, constants, unit)
    report = algebra_validate(extended)
    if report is not None:  # pragma: no cover - embeddings are homomorphisms
        raise InternalInvariantError(f"extension broke the axioms: {report}")
    return ExtensionContext(emb, A, extended)


def extend_module(M, ctx):
    if M.algebra != ctx.algebra:
        raise AlgebraMismatch("module is not over the context's base algebra")
    return Module(ctx.extended, M.dim,
                  [map_matrix(ctx.emb, a) for a in M.actions])


class ThetaDimCheck(NamedTuple):
    dim_base: int
    dim_extended: int
    equal: bool


def theta_dim_check(M, N, ctx):
    """Hom dimensions before and after extension; inequality is a bug."""
    dim_base = len(hom_space(M, N).mats)
    dim_ext = len(hom_space(extend_module(M, ctx), extend_module(N, ctx)).mats)
    if dim_base != dim_ext:
        raise InternalInvariantError(
            f"hom dimension changed under extension: {dim_base} != {dim_ext}")
    return ThetaDimCheck(dim_base, dim_ext, True)


def theta_apply(f, M, N, ctx):
    """The entrywise-embedded intertwiner, re-verified against the extension."""
    MF = extend_module(M, ctx)
    NF = extend_module(N, ctx)
    g = map_matrix(ctx.emb, f)
    for am, an in zip(MF.actions, NF.actions):
        if g @ am != an @ g:
            raise InternalInvariantError("embedded map fails to intertwine")
    return g


def theta_images_independent(hom, ctx):
    """Images of a hom basis stay linearly independent after embedding."""
    if not hom.mats:
        return True
    rows = [list(map_matrix(ctx.emb, f).vec()) for f in hom.mats]
    return Matrix.from_rows(ctx.emb.target, rows).rank() == len(rows)


def end_algebra_extension_check(M, ctx):
    """[End(M)]^F and End(M^F) agree via the embedded basis, as F-algebras."""
    from .modules import end_algebra

    if M.dim == 0:
        return True
    endA, hb = end_algebra(M)
    MF = extend_module(M, ctx)
    endF, hbF = end_algebra(MF)
    if endA.dim != endF.dim:
        return False
    field = ctx.emb.target
    images = [map_matrix(ctx.emb, f) for f in hb.mats]
    rows = [list(g.vec()) for g in images]
    span = Matrix.from_rows(field, rows)
    if span.rank() != len(images):
        return False
    # multiplicativity: embedded products match embedded structure constants
    for i, gi in enumerate(images):
        for j, gj in enumerate(images):
            prod_ = gi @ gj
            expected = Matrix.zeros(field, M.dim, M.dim)
            for l, c in enumerate(endA.constants[i][j]):
                if c:
                    expected = expected + images[l].scale(ctx.emb.apply(c))
            if prod_ != expected:
                return False
    # the images span the full extended endomorphism space
    target_rows = [list(f.vec()) for f in hbF.mats]
    combined = Matrix.from_rows(field, rows + target_rows)
    return combined.rank() == len(images)


# ---------------------------------------------------------------------------
# descent
# ---------------------------------------------------------------------------

class Descent(NamedTuple):
    subfield: object                 # FieldDescriptor E
    emb_base: FieldEmbedding         # k -> E
    emb_up: FieldEmbedding           # E -> F
    module: Module                   # over A^E
    witness: Optional[Matrix]        # change of basis with extend(module) ~ V


def _base_to_mid_embedding(ctx, emb_up, emb_base=None):
    k = ctx.emb.source
    E = emb_up.source

    def compatible(cand):
        return compose_embeddings(cand, emb_up).generator_image == \
            ctx.emb.generator_image

    if emb_base is None:
        emb_base = embed_find(k, E)
        if k.degree > 1 and not compatible(emb_base):
            from .fields import poly_roots

            mod = [E.from_base(c) for c in k.modulus]
            for root in poly_roots(mod, E):
                cand = FieldEmbedding(k, E, root)
                if compatible(cand):
                    emb_base = cand
                    break
    if not compatible(emb_base):
        raise FieldMismatch("the tower k -> E -> F does not commute with k -> F")
    return emb_base


def write_in(ctx, V, emb_up, basis=None, emb_base=None):
    """Rewrite V (over the extended algebra) in the subfield E, if possible.

    ``basis`` is a list of coordinate vectors forming an F-basis of V; the
    default is the standard basis.  Raises NotOverE when some rewritten
    action entry lies outside the image of E.
    """
    if V.algebra != ctx.extended:
        raise AlgebraMismatch("module is not over the extended algebra")
    F = ctx.emb.target
    if emb_up.target != F:
        raise FieldMismatch("subfield embedding must land in the extension field")
    emb_base = _base_to_mid_embedding(ctx, emb_up, emb_base)
    if basis is None:
        W = V
        P = Matrix.identity(F, V.dim)
    else:
        P = Matrix(F, V.dim, len(basis),
                   [[basis[j][i] for j in range(len(basis))]
                    for i in range(V.dim)])
        if len(basis) != V.dim or not P.is_invertible():
            raise BadBasis("the supplied vectors are not an F-basis")
        W = conjugate(V, P)
    ctx_mid = extend_algebra(ctx.algebra, emb_base)
    actions = []
    for a in W.actions:
        rows = []
        for row in a.entries:
            out = []
            for e in row:
                pre = embedding_preimage(emb_up, e)
                if pre is None:
                    raise NotOverE(
                        "an action entry lies outside the requested subfield")
                out.append(pre)
            rows.append(out)
        actions.append(Matrix(emb_up.source, V.dim, V.dim, rows))
    U = Module(ctx_mid.extended, V.dim, actions)
    # witness: extending U along E -> F recovers V
    ctx_up = extend_algebra(ctx_mid.extended, emb_up)
    UF = extend_module(U, ctx_up)
    if UF.algebra != ctx.extended:  # pragma: no cover - tower compatibility
        raise InternalInvariantError("re-extended algebra differs from A^F")
    res = is_isomorphic(UF, V)
    if res.isomorphic is not True:  # pragma: no cover - P conjugation witness
        raise InternalInvariantError("re-extension is not isomorphic to V")
    return Descent(emb_up.source, emb_base, emb_up, U, res.witness)


def descend_module(ctx, V, emb_base_hint=None):
    """Smallest-entry-subfield descent in the standard basis (always succeeds)."""
    if V.algebra != ctx.extended:
        raise AlgebraMismatch("module is not over the extended algebra")
    F = ctx.emb.target
    gens = [e for a in V.actions for row in a.entries for e in row]
    gens.append(ctx.emb.generator_image)   # E must contain the base field k
    E, emb_up = subfield_generated(F, gens)
    return write_in(ctx, V, emb_up, emb_base=emb_base_hint)
