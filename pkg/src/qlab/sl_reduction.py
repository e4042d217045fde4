"""Reduction of the mREA by its central element ``ell = Tr_R L``.

Generators are shifted to ``l_i^j = f_i^j + (Tr C)^{-1} delta_i^j ell``.  In
word form the ``f`` generators keep the ids ``i*N + j`` and ``ell`` gets id
``N^2``.  The quotient SL(R_q) sets ``ell = 0``; its degree-one part is the
subspace of End(V) spanned by the vectors ``f_i^j``.
"""

from dataclasses import dataclass

from .exact import Matrix, ONE, ZERO, rf, kronecker, TensorLayout, place_operator
from .exact.linalg import row_space_rank
from .mrea import (GeneratorRep, RelationSet, RepresentationError, check_representation, ell_element,
                   in_relation_span, _poly_matrix_relations, _split, _word_index)
from .qlie import Report, adjoint_rep, _witness
from .words import PolyMatrix, kron_identity_left, poly_add

__all__ = ['SlUnavailable', 'SlPresentation', 'sl_present', 'ell_center_check', 'SlAdjoint', 'sl_adjoint_rep',
           'restricted_bracket_jacobi', 'TwistedRep', 'z_twist', 'sl_reduce_rep']


class SlUnavailable(ValueError):
    pass


def _require_trc(skew):
    if not skew.trC:
        raise SlUnavailable('sl-reduction unavailable: Tr C = 0')
    return skew.trC


def _poly_mul(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            out = poly_add(out, {w1 + w2: c1 * c2})
    return out


def _substitute(poly, images):
    """Replace every generator id by the poly ``images[id]``."""
    out = {}
    for w, v in poly.items():
        acc = {(): v}
        for g in w:
            acc = _poly_mul(acc, images[g])
        out = poly_add(out, acc)
    return out


def _shift_vectors(n, C, c):
    """``Phi`` (column g = l-coordinates of the vector f_g) and the l-coordinates of ell."""
    n2 = n * n
    ellv = [C.data[g % n][g // n] for g in range(n2)]
    phi = Matrix.from_function(n2, n2, lambda t, g: (ONE if t == g else ZERO)
                               - (ellv[t] * c if g // n == g % n else ZERO))
    return phi, Matrix.from_function(n2, 1, lambda t, _: ellv[t])


@dataclass(frozen=True, eq=False)
class SlPresentation:
    n: int
    trC: object
    C: Matrix
    omega: object
    hbar: object
    mixed: tuple            # polys in f (ids < N^2) and ell (id N^2)
    trace_constraint: dict  # Tr_R F as a poly in f
    quotient: RelationSet   # (sl-rea) on f
    phi: Matrix             # f_g as vectors of End(V)
    ell_vector: Matrix
    equivalent: bool
    trace_vanishes: bool

    @property
    def ell_id(self):
        return self.n * self.n


def sl_present(rels, skew):
    """Mixed (F, ell) system, the quotient relations, and the back-substitution check."""
    trc = _require_trc(skew)
    r = rels.braiding
    n = rels.n
    n2 = n * n
    c = trc.inverse()
    R = r.matrix
    omega = r.omega
    hbar = rels.hbar
    L1 = kron_identity_left(PolyMatrix.generators(n), n)
    rl = R @ L1
    lr = L1 @ R
    quad = rl @ rl - lr @ lr
    scal = {(): hbar} if hbar else {}
    if omega:
        scal[(n2,)] = -omega * c
    D = PolyMatrix(n2, n2, {(k, k): dict(scal) for k in range(n2)} if scal else {})
    mixed = [p for _, p in (quad - D @ (rl - lr)).entries()]
    for g in range(n2):
        mixed.append({(n2, g): ONE, (g, n2): -ONE})
    trace = ell_element(n, skew.C)
    qpolys = [p for _, p in _poly_matrix_relations(R, n, hbar).entries()]
    qq, ql = _split(qpolys, n)
    quotient = RelationSet(n, hbar, qq, ql, r)
    # back-substitution f_g -> l_g - c delta_g ell, ell -> Tr_R L
    ell = ell_element(n, skew.C)
    images = {}
    for g in range(n2):
        img = {(g,): ONE}
        if g // n == g % n:
            img = poly_add(img, ell, -c)
        images[g] = img
    images[n2] = ell
    back = [_substitute(p, images) for p in mixed]
    trace_vanishes = not _substitute(trace, images)
    index = _word_index(n2, 2)
    rows_a = [{index[w]: v for w, v in p.items()} for p in back if p]
    rows_b = [{index[w]: v for w, v in p.items()} for p in rels.polys() if p]
    ra = row_space_rank(rows_a, len(index))
    rb = row_space_rank(rows_b, len(index))
    rab = row_space_rank(rows_a + rows_b, len(index))
    phi, ellv = _shift_vectors(n, skew.C, c)
    return SlPresentation(n, trc, skew.C, omega, hbar, tuple(mixed), trace, quotient, phi, ellv,
                          ra == rb == rab, trace_vanishes)


def ell_center_check(rels, skew, reps=()):
    """``ell l - l ell`` in the degree-2 relation span, and ``[rho(ell), rho(l)] = 0`` in each rep."""
    rep = Report()
    n2 = rels.n ** 2
    ell = ell_element(rels.n, skew.C)
    bad = None
    for g in range(n2):
        comm = {}
        for (h,), v in ell.items():
            comm = poly_add(poly_add(comm, {(h, g): v}), {(g, h): -v})
        if not in_relation_span(rels, comm, 2):
            bad = {'generator': g}
            break
    rep.add('ell central modulo the degree-2 relations', bad is None, bad)
    for rho in reps:
        e = rho.ell_image(skew.C)
        bad = None
        for g, m in enumerate(rho.images):
            d = e @ m - m @ e
            if not d.is_zero():
                bad = {'generator': g, 'value': d.to_strings()}
                break
        rep.add('rho(ell) central in %s' % rho.name, bad is None, bad)
        chi = e.is_scalar()
        if rho.chi is not None:
            rep.add('rho(ell) = chi I in %s' % rho.name, chi is not None and chi == rho.chi)
    return rep


@dataclass(frozen=True, eq=False)
class SlAdjoint:
    f_images: tuple         # rho(f_g) on End(V), l-coordinates
    ell_image: Matrix
    report: Report
    coincides_with_restricted_bracket: bool


def sl_adjoint_rep(bd, slp):
    """The adjoint action in (F, ell) coordinates and the four identities it satisfies."""
    n = bd.n
    n2 = n * n
    c = slp.trC.inverse()
    ad = adjoint_rep(bd)
    ad_ell = ad.ell_image(slp.C)
    f_imgs = tuple(ad.images[g] - ad_ell * c if g // n == g % n else ad.images[g] for g in range(n2))
    phi, ellv = slp.phi, slp.ell_vector
    rep = Report()
    d = ad_ell @ ellv
    rep.add('rho(ell) > ell = 0', d.is_zero(), _witness(d))
    bad = None
    for g, m in enumerate(f_imgs):
        d = m @ ellv
        if not d.is_zero():
            bad = {'generator': g, 'value': d.to_strings()}
            break
    rep.add('rho(F_1) > ell = 0', bad is None, bad)
    d = ad_ell @ phi + phi * (slp.omega * slp.trC)
    rep.add('rho(ell) > F_1 = -omega Tr(C) F_1', d.is_zero(), _witness(d))
    R = bd.base.matrix
    Rinv = bd.base.inverse_matrix()
    F1 = kron_identity_left(PolyMatrix.generators(n), n)
    lhs = F1 @ R @ F1 @ Rinv
    rhs = F1 @ R - R @ F1
    if slp.omega:
        rhs = rhs + (R @ F1 @ Rinv).scale(slp.omega)
    acted = {}
    bad = None
    for (k, p), (_, p2) in zip(lhs.entries(), rhs.entries()):
        acc = Matrix.zeros(n2, 1)
        for (a, b), v in p.items():
            col = acted.get((a, b))
            if col is None:
                col = acted[(a, b)] = f_imgs[a] @ phi.submatrix(list(range(n2)), [b])
            acc = acc + col * v
        for (g,), v in p2.items():
            acc = acc - phi.submatrix(list(range(n2)), [g]) * v
        if not acc.is_zero():
            bad = {'entry': k, 'value': acc.to_strings()}
            break
    rep.add('rho(F_1b) > F_2b = F_1 R - R F_1 + omega R F_1 R^-1', bad is None, bad)
    # naive bracket: the gl structure constants with f in place of l
    action = bd.bracket @ kronecker(phi, phi)
    naive = phi @ bd.bracket
    return SlAdjoint(f_imgs, ad_ell, rep, action == naive)


def restricted_bracket_jacobi(bd, slp):
    """(q-Jac) for the bracket restricted to span(f) with ell set to zero; witness or None."""
    n2 = bd.n ** 2
    phi = slp.phi
    bs = phi @ bd.bracket @ kronecker(phi, phi)
    lay = TensorLayout.power(n2, 3)
    i2 = Matrix.identity(n2)
    i3 = Matrix.identity(lay.dim)
    q12 = place_operator(bd.Q, 1, lay)
    jac = bs @ kronecker(bs, i2) - bs @ kronecker(i2, bs) @ (i3 - q12)
    return _witness(jac)


@dataclass(frozen=True, eq=False)
class TwistedRep:
    base: GeneratorRep
    z: object
    rep: GeneratorRep

    @property
    def images(self):
        return self.rep.images


def z_twist(rho, z, r, skew=None, rels=None):
    """``rho^z(l_i^j) = z rho(l_i^j) + delta_i^j (1 - z) omega^-1 I``."""
    z = rf(z)
    omega = r.omega
    n = rho.n
    if z == ONE:
        shift = ZERO
    elif not omega:
        raise RepresentationError('z-twist needs a Hecke braiding (omega = 0)')
    else:
        shift = (ONE - z) / omega
    eye = Matrix.identity(rho.dim)
    images = tuple(m * z + (eye * shift if g // n == g % n else Matrix.zeros(rho.dim))
                   for g, m in enumerate(rho.images))
    chi = None
    if skew is not None:
        chi = GeneratorRep(n, rho.dim, images).ell_image(skew.C).is_scalar()
    out = GeneratorRep(n, rho.dim, images, chi, rho.equivariant, '%s^z' % rho.name, None, rho.factors)
    if rels is not None:
        w = check_representation(out, rels)
        if w is not None:
            raise RepresentationError('twisted representation fails the relations', w)
    return TwistedRep(rho, z, out)


def sl_reduce_rep(rho, skew, slp=None):
    """``rho~(f_i^j) = xi^-1 (rho(l_i^j) - (Tr C)^-1 chi delta_i^j)`` with ``xi = 1 - omega chi / Tr C``."""
    trc = _require_trc(skew)
    if rho.chi is None:
        raise RepresentationError('rho(ell) is not known to be scalar')
    chi = rho.chi
    c = trc.inverse()
    omega = slp.omega if slp is not None else ZERO
    xi = ONE - omega * c * chi
    if not xi:
        raise RepresentationError('reduction singular: xi = 0')
    if rho.ell_image(skew.C).is_scalar() != chi:
        raise RepresentationError('stored chi does not match rho(ell)')
    n = rho.n
    inv = xi.inverse()
    eye = Matrix.identity(rho.dim)
    images = tuple((m - eye * (c * chi)) * inv if g // n == g % n else m * inv
                   for g, m in enumerate(rho.images))
    out = GeneratorRep(n, rho.dim, images, ZERO, rho.equivariant, rho.name + '~', None, rho.factors)
    if slp is not None:
        w = check_representation(out, slp.quotient)
        if w is not None:
            raise RepresentationError('reduced representation fails (sl-rea)', w)
    if not out.ell_image(skew.C).is_zero():
        raise RepresentationError('reduced representation does not annihilate ell')
    return out
