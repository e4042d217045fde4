"""The modified reflection equation algebra and its representations.

Generators ``l_i^j`` get id ``g = i*N + j``; a word of length two
``l_a l_b`` is column ``a*N^2 + b`` of the quadratic coefficient matrix.
Representation images are column-convention matrices acting on the carrier.
"""

import os
from dataclasses import dataclass, field
from typing import Optional

from .braidings import BraidingError
from .exact import Matrix, kronecker, ONE, ZERO, rf
from .exact.linalg import row_space_rank, rank, column_basis, inverse
from .words import PolyMatrix, kron_identity_left, words_of_length

__all__ = ['RelationSet', 'GeneratorRep', 'BialgebraMaps', 'FilteredDims', 'RepresentationError',
           'relation_set', 'check_representation', 'vector_rep', 'covector_rep', 'bialgebra_maps',
           'tensor_rep', 'restrict_rep', 'filtered_dimension', 'degree_cap', 'ell_element']

DEFAULT_DEGREE_CAP = 3


class RepresentationError(ValueError):

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def degree_cap():
    v = os.environ.get('QLAB_DEGREE_CAP')
    return int(v) if v else DEFAULT_DEGREE_CAP


def _poly_matrix_relations(R, n, hbar):
    """``R L1 R L1 - L1 R L1 R - hbar (R L1 - L1 R)`` as an N^2 x N^2 poly matrix."""
    L1 = kron_identity_left(PolyMatrix.generators(n), n)
    rl = R @ L1
    lr = L1 @ R
    quad = rl @ rl - lr @ lr
    if not hbar:
        return quad
    return quad - (rl - lr).scale(hbar)


def _eq_form_relations(R, Rinv, n, hbar):
    """``L1b L2b - R^-1 L1b L2b R - hbar (L1 R - R L1)`` with ``L1b L2b = L1 R L1 R^-1``."""
    L1 = kron_identity_left(PolyMatrix.generators(n), n)
    ll = L1 @ R @ L1 @ Rinv
    lhs = ll - Rinv @ ll @ R
    if not hbar:
        return lhs
    return lhs - (L1 @ R - R @ L1).scale(hbar)


def _split(polys, n):
    n2 = n * n
    quad = [[ZERO] * (n2 * n2) for _ in polys]
    lin = [[ZERO] * n2 for _ in polys]
    for r, p in enumerate(polys):
        for w, v in p.items():
            if len(w) == 2:
                quad[r][w[0] * n2 + w[1]] = v
            elif len(w) == 1:
                lin[r][w[0]] = v
            else:
                raise ValueError('unexpected word %r in a quadratic-linear relation' % (w,))
    m = len(polys)
    return Matrix._raw(quad, m, n2 * n2), Matrix._raw(lin, m, n2)


@dataclass(frozen=True, eq=False)
class RelationSet:
    n: int
    hbar: object
    quadratic: Matrix   # relation x word (a*N^2 + b)
    linear: Matrix      # relation x generator
    braiding: object = None

    @property
    def count(self):
        return self.quadratic.rows

    def polys(self):
        n2 = self.n * self.n
        out = []
        for r in range(self.count):
            p = {}
            for w, v in self.quadratic.nonzero_rows()[r]:
                p[(w // n2, w % n2)] = v
            for g, v in self.linear.nonzero_rows()[r]:
                p[(g,)] = v
            out.append(p)
        return out

    def stacked(self):
        return self.quadratic.hstack(self.linear)

    def span_rank(self):
        return rank(self.stacked())

    def with_linear(self, linear):
        return RelationSet(self.n, self.hbar, self.quadratic, linear, self.braiding)


def relation_set(r, hbar=ONE, verify=True):
    hbar = rf(hbar)
    n = r.n
    pm = _poly_matrix_relations(r.matrix, n, hbar)
    quad, lin = _split([p for _, p in pm.entries()], n)
    rels = RelationSet(n, hbar, quad, lin, r)
    if verify:
        if not eq_form_equivalent(rels):
            raise BraidingError('rearranged relation form spans a different space')
    return rels


def eq_form_relations(r, hbar=ONE):
    n = r.n
    pm = _eq_form_relations(r.matrix, r.inverse_matrix(), n, rf(hbar))
    quad, lin = _split([p for _, p in pm.entries()], n)
    return RelationSet(n, rf(hbar), quad, lin, r)


def eq_form_equivalent(rels):
    """The two presentations generate the same span (rank of each = rank of the union)."""
    other = eq_form_relations(rels.braiding, rels.hbar)
    a = rels.stacked()
    b = other.stacked()
    ra = rank(a)
    return ra == rank(b) == rank(a.vstack(b))


# -- representations --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GeneratorRep:
    n: int
    dim: int
    images: tuple           # images[i*N + j] = rho(l_i^j)
    chi: Optional[object] = None
    equivariant: bool = False
    name: str = ''
    braid: Optional[Matrix] = None   # R_{End(V), U} for the carrier, when known
    factors: tuple = ()              # carrier as a word in 'V', 'V*' (equivariant reps)

    def image(self, i, j):
        return self.images[i * self.n + j]

    def ell_image(self, C):
        acc = Matrix.zeros(self.dim)
        n = self.n
        for i in range(n):
            for j in range(n):
                c = C.data[j][i]
                if c:
                    acc = acc + self.images[i * n + j] * c
        return acc

    def to_json(self):
        out = {'carrier_dim': self.dim, 'name': self.name,
               'images': [m.to_strings() for m in self.images]}
        if self.chi is not None:
            out['chi'] = str(self.chi)
        return out


def _with_chi(rep, C):
    chi = rep.ell_image(C).is_scalar()
    return GeneratorRep(rep.n, rep.dim, rep.images, chi, rep.equivariant, rep.name, rep.braid, rep.factors)


def relation_defects(rho, rels):
    """Yield ``(relation index, value matrix)`` for every relation."""
    n2 = rels.n ** 2
    imgs = rho.images
    prods = {}
    for r in range(rels.count):
        acc = Matrix.zeros(rho.dim)
        for w, v in rels.quadratic.nonzero_rows()[r]:
            p = prods.get(w)
            if p is None:
                p = prods[w] = imgs[w // n2] @ imgs[w % n2]
            acc = acc + p * v
        for g, v in rels.linear.nonzero_rows()[r]:
            acc = acc + imgs[g] * v
        yield r, acc


def check_representation(rho, rels):
    """None when every relation vanishes on the images, else a witness dict."""
    if len(rho.images) != rels.n ** 2:
        raise ValueError('representation has %d images, algebra has %d generators' % (len(rho.images), rels.n ** 2))
    for r, m in relation_defects(rho, rels):
        if not m.is_zero():
            n = rels.n
            a, b = divmod(r, n * n)
            return {'relation': r, 'row': [a // n, a % n], 'col': [b // n, b % n], 'value': m.to_strings()}
    return None


def vector_rep(r, skew):
    """``rho_1(l_i^j) x_k = x_i B_k^j``."""
    n = r.n
    B = skew.B
    if rank(B) < n:
        raise RepresentationError('B is singular')
    images = []
    for i in range(n):
        for j in range(n):
            images.append(Matrix.from_dict(n, n, {(i, k): B.data[k][j] for k in range(n)}))
    rep = GeneratorRep(n, n, tuple(images), None, True, 'V', None, ('V',))
    return _with_chi(rep, skew.C)


def covector_rep(r, skew=None):
    """``rho_1^*(l_i^j) x^k = - x^r R_{ri}^{kj}``."""
    n = r.n
    R = r.matrix
    images = []
    for i in range(n):
        for j in range(n):
            images.append(Matrix.from_dict(n, n, {(s, k): -R.data[s * n + i][k * n + j]
                                                  for s in range(n) for k in range(n)}))
    rep = GeneratorRep(n, n, tuple(images), None, True, 'V*', None, ('V*',))
    return _with_chi(rep, skew.C) if skew is not None else rep


@dataclass(frozen=True)
class BialgebraMaps:
    n: int
    # delta[g] = {(left, right): coeff}, left/right a generator id or None for the unit
    delta: tuple
    epsilon: dict = field(default_factory=dict)

    def counit_left(self, g):
        """``(eps (x) id) Delta(l_g)`` as {generator or None: coeff}."""
        return self._collapse(g, 0)

    def counit_right(self, g):
        return self._collapse(g, 1)

    def _collapse(self, g, side):
        out = {}
        for pair, c in self.delta[g].items():
            killed = pair[side]
            kept = pair[1 - side]
            if killed is not None:
                continue  # eps(l) = 0
            out[kept] = out.get(kept, ZERO) + c * self.epsilon[None]
        return {k: v for k, v in out.items() if v}


def bialgebra_maps(r):
    n = r.n
    w = r.omega
    delta = []
    for i in range(n):
        for j in range(n):
            g = i * n + j
            d = {(g, None): ONE, (None, g): ONE}
            for k in range(n):
                if w:
                    d[(i * n + k, k * n + j)] = -w
            delta.append(d)
    eps = {None: ONE}
    eps.update({g: ZERO for g in range(n * n)})
    maps = BialgebraMaps(n, tuple(delta), eps)
    for g in range(n * n):
        if maps.counit_left(g) != {g: ONE} or maps.counit_right(g) != {g: ONE}:
            raise ArithmeticError('counit law fails on generator %d' % g)
    return maps


def end_braiding_with(ext, factors):
    """``R_{End(V), U}`` for ``U`` a tensor word in 'V', 'V*'."""
    return ext.braiding_with_end(list(factors))


def tensor_rep(rho_u, rho_w, ext, braid_u=None, check=None):
    """``rho_{U (x) W}(Delta(l_i^j))`` with the twist by ``R_{End(V),U}``.

    Only equivariant inputs are accepted.  ``check`` may be a RelationSet;
    the result is then verified against it.
    """
    if not (rho_u.equivariant and rho_w.equivariant):
        raise RepresentationError('tensor_rep needs equivariant representations')
    n = ext.n
    n2 = n * n
    du, dw = rho_u.dim, rho_w.dim
    if braid_u is None:
        braid_u = end_braiding_with(ext, rho_u.factors)
    if braid_u.shape != (n2 * du, n2 * du):
        raise RepresentationError('braiding R_End(V),U has the wrong size')
    # op[g] = sum_g' blk[g][g'] (x) rho_w(g'), blk[g][g'][u'][u] = braid[u'*N^2 + g'][g*du + u]
    blk = [[{} for _ in range(n2)] for _ in range(n2)]
    for out, inp, v in braid_u.entries():
        u2, g2 = divmod(out, n2)
        g, u = divmod(inp, du)
        blk[g][g2][(u2, u)] = v
    op = []
    for g in range(n2):
        acc = Matrix.zeros(du * dw)
        for g2 in range(n2):
            if blk[g][g2]:
                acc = acc + kronecker(Matrix.from_dict(du, du, blk[g][g2]), rho_w.images[g2])
        op.append(acc)
    w = ext.base.omega
    iw = Matrix.identity(dw)
    left = [kronecker(m, iw) for m in rho_u.images]
    images = []
    for i in range(n):
        for j in range(n):
            m = left[i * n + j] + op[i * n + j]
            if w:
                for k in range(n):
                    m = m - (left[i * n + k] @ op[k * n + j]) * w
            images.append(m)
    rep = GeneratorRep(n, du * dw, tuple(images), None, True,
                       '%s(x)%s' % (rho_u.name, rho_w.name), None, tuple(rho_u.factors) + tuple(rho_w.factors))
    rep = _with_chi(rep, ext.skew.C)
    if check is not None:
        w = check_representation(rep, check)
        if w is not None:
            raise RepresentationError('tensor product representation fails the relations', w)
    return rep


def restrict_rep(rho, projector, name=None, check=None):
    """Restriction of ``rho`` to the image of a projector commuting with it."""
    for g, m in enumerate(rho.images):
        if not (projector @ m - m @ projector).is_zero():
            raise RepresentationError('projector does not commute with rho(l_%d)' % g)
    cols = column_basis(projector)
    if not cols:
        raise RepresentationError('projector has zero image')
    P = projector.submatrix(list(range(projector.rows)), cols)
    rows = column_basis(P.T)
    Pr_inv = inverse(P.submatrix(rows, list(range(len(cols)))))
    images = []
    for m in rho.images:
        mp = m @ P
        x = Pr_inv @ mp.submatrix(rows, list(range(len(cols))))
        if not (P @ x - mp).is_zero():
            raise RepresentationError('image of the projector is not invariant')
        images.append(x)
    # a scalar rho(ell) stays scalar on an invariant subspace
    rep = GeneratorRep(rho.n, len(cols), tuple(images), rho.chi, rho.equivariant, name or rho.name + '|E', None, ())
    if check is not None:
        w = check_representation(rep, check)
        if w is not None:
            raise RepresentationError('restricted representation fails the relations', w)
    return rep


def ell_element(n, C):
    """``ell = Tr_R L = sum C_j^i l_i^j`` as a poly."""
    return {(i * n + j,): C.data[j][i] for i in range(n) for j in range(n) if C.data[j][i]}


# -- filtered dimensions ------------------------------------------------------

@dataclass(frozen=True)
class FilteredDims:
    max_degree: int
    dims: tuple


def _ideal_rows(polys, ngen, m, index):
    """Sparse rows of ``a r b`` over words a, b with ``|a| + |b| + 2 <= m``."""
    rows = []
    for p in polys:
        top = max(len(w) for w in p)
        for la in range(m - top + 1):
            for lb in range(m - top - la + 1):
                for a in words_of_length(ngen, la):
                    for b in words_of_length(ngen, lb):
                        row = {}
                        for w, v in p.items():
                            row[index[a + w + b]] = v
                        rows.append(row)
    return rows


def _word_index(ngen, m):
    index = {}
    for k in range(m + 1):
        for w in words_of_length(ngen, k):
            index[w] = len(index)
    return index


def filtered_dimension(rels, d, cap=None):
    cap = degree_cap() if cap is None else cap
    if d > cap:
        raise ValueError('degree %d exceeds the configured cap %d' % (d, cap))
    ngen = rels.n ** 2
    polys = [p for p in rels.polys() if p]
    dims = []
    for m in range(d + 1):
        index = _word_index(ngen, m)
        rows = _ideal_rows(polys, ngen, m, index) if m >= 2 else []
        r = row_space_rank(rows, len(index)) if rows else 0
        dims.append(len(index) - r)
    return FilteredDims(d, tuple(dims))


def in_relation_span(rels, poly, m=2):
    """Whether ``poly`` (degree <= m) lies in the truncated two-sided ideal."""
    ngen = rels.n ** 2
    index = _word_index(ngen, m)
    rows = _ideal_rows([p for p in rels.polys() if p], ngen, m, index)
    base = row_space_rank(rows, len(index))
    extra = {index[w]: v for w, v in poly.items() if v}
    if not extra:
        return True
    return row_space_rank(rows + [extra], len(index)) == base

