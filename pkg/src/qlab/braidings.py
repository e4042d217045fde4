"""Braidings: construction, certification, skew-inverse data and duals.

Matrix conventions
------------------
``Braiding.matrix`` stores ``R`` the way the index formulas are written:
row ``(i, j)``, column ``(k, l)`` holds ``R_{ij}^{kl}`` where
``R(x_i (x) x_j) = R_{ij}^{kl} x_k (x) x_l``.  Matrix identities written with
``R_{12}``, ``L_1`` etc. are literal products of such matrices.

Everything that is a *composition of maps* (dual extension, ``R_End(V)``,
pairing invariance) is done with column-convention map matrices instead:
``M[out][in]``.  For ``V (x) V`` this is just the transpose, see
:meth:`Braiding.map`.
"""

from dataclasses import dataclass, field
from typing import Optional

from .exact import Matrix, TensorLayout, place_operator, partial_trace, q, omega, ONE, ZERO
from .exact.linalg import solve_linear, rank
from .exact.matrix import embed_operator, kronecker

__all__ = ['Braiding', 'Certificate', 'SkewInverseData', 'ExtendedBraiding', 'EndBraiding',
           'BraidingError', 'NotSkewInvertible', 'build_symmetry', 'certify_symmetry',
           'skew_inverse', 'bc_data', 'extend_to_dual', 'end_braiding', 'flip', 'super_flip',
           'standard_a_series', 'explicit', 'flip_matrix', 'ybe_defect', 'composition_table']


class BraidingError(ValueError):
    """Construction-time failure carrying a witness."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotSkewInvertible(BraidingError):
    pass


def flip_matrix(n):
    """The flip P of V (x) V, dim V = n (symmetric, so both conventions agree)."""
    return Matrix.from_dict(n * n, n * n, {(i * n + j, j * n + i): 1 for i in range(n) for j in range(n)})


def ybe_defect(m, n):
    """``R12 R23 R12 - R23 R12 R23`` on V^(x)3."""
    lay = TensorLayout.power(n, 3)
    r12 = place_operator(m, 1, lay)
    r23 = place_operator(m, 2, lay)
    return r12 @ r23 @ r12 - r23 @ r12 @ r23


def _ybe_witness(defect, n):
    w = defect.first_nonzero()
    if w is None:
        return None
    lay = TensorLayout.power(n, 3)
    i, j, v = w
    return {'row': list(lay.multi_index(i)), 'col': list(lay.multi_index(j)), 'value': str(v)}


def hecke_defect(m):
    ident = Matrix.identity(m.rows)
    return (m - ident * q) @ (m + ident * q.inverse())


def involutive_defect(m):
    return m @ m - Matrix.identity(m.rows)


def minimal_polynomial(m):
    """Monic minimal polynomial of ``m`` as a list of coefficients (low to high)."""
    n = m.rows
    powers = [Matrix.identity(n)]
    for d in range(1, n + 1):
        powers.append(powers[-1] @ m)
        # columns: flattened I, m, ..., m^(d-1); rhs: flattened m^d
        a = Matrix.from_function(n * n, d, lambda r, c: powers[c].data[r // n][r % n])
        b = Matrix.from_function(n * n, 1, lambda r, c: powers[d].data[r // n][r % n])
        res = solve_linear(a, b, method='sparse')
        if res.consistent and res.unique:
            return [-c for c in res.solution.column(0)] + [ONE]
    raise ArithmeticError('minimal polynomial search failed')


@dataclass(frozen=True)
class Certificate:
    ybe: bool
    cls: Optional[str]
    skew_invertible: Optional[bool] = None
    identities: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.ybe and self.cls is not None and self.skew_invertible is not False and all(self.identities.values())


@dataclass(frozen=True, eq=False)
class Braiding:
    n: int
    matrix: Matrix
    cls: str
    origin: str
    params: tuple = ()

    @property
    def layout(self):
        return TensorLayout.power(self.n, 2)

    def map(self):
        """Column-convention map matrix of R on V (x) V."""
        return self.matrix.T

    @property
    def omega(self):
        """``q - q^-1`` for a Hecke symmetry; 0 for an involutive one (the case q = 1)."""
        return ZERO if self.cls == 'involutive' else omega

    def inverse_matrix(self):
        if self.cls == 'involutive':
            return self.matrix
        return self.matrix - Matrix.identity(self.n ** 2) * omega

    def specialize(self, q0):
        return self.matrix.evaluate_at(q0)

    def describe(self):
        if self.params:
            return '%s(%s)' % (self.origin, ','.join(str(p) for p in self.params))
        return self.origin

    def __repr__(self):
        return 'Braiding(%s, N=%d, %s)' % (self.describe(), self.n, self.cls)


def _classify(m):
    if involutive_defect(m).is_zero():
        return 'involutive'
    if hecke_defect(m).is_zero():
        return 'hecke'
    return None


def _make(n, m, origin, params=()):
    if m.shape != (n * n, n * n):
        raise BraidingError('braiding for N=%d must be %dx%d, got %dx%d' % (n, n * n, n * n, m.rows, m.cols))
    defect = ybe_defect(m, n)
    if not defect.is_zero():
        raise BraidingError('Yang-Baxter equation fails', _ybe_witness(defect, n))
    cls = _classify(m)
    if cls is None:
        mp = minimal_polynomial(m)
        raise BraidingError('neither involutive nor Hecke; minimal polynomial has degree %d' % (len(mp) - 1),
                            {'minimal_polynomial': [str(c) for c in mp]})
    if origin in ('flip', 'super_flip') and cls != 'involutive':
        raise BraidingError('%s must be involutive' % origin)
    return Braiding(n, m, cls, origin, tuple(params))


def flip(n):
    return _make(n, flip_matrix(n), 'flip', (n,))


def super_flip(m, n):
    """Super-flip on V = V_0 + V_1 with dim V_0 = m, dim V_1 = n (even basis vectors first)."""
    d = m + n
    par = [0] * m + [1] * n
    entries = {(i * d + j, j * d + i): (-1) ** (par[i] * par[j]) for i in range(d) for j in range(d)}
    return _make(d, Matrix.from_dict(d * d, d * d, entries), 'super_flip', (m, n))


def standard_a_series(n):
    """Standard Hecke symmetry of U_q(sl(n)) type.

    ``R(x_i x_i) = q x_i x_i``; for ``i != j``: ``R(x_i x_j) = x_j x_i``
    plus ``(q - q^-1) x_i x_j`` when ``i < j``.
    """
    entries = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                entries[(i * n + i, i * n + i)] = q
            else:
                entries[(i * n + j, j * n + i)] = ONE
                if i < j:
                    entries[(i * n + j, i * n + j)] = omega
    return _make(n, Matrix.from_dict(n * n, n * n, entries), 'standard_a_series', (n,))


def explicit(n, matrix):
    if not isinstance(matrix, Matrix):
        matrix = Matrix(matrix)
    return _make(n, matrix, 'explicit', (n,))


def build_symmetry(spec):
    """Build a certified braiding from a spec dict.

    ``{"kind": "flip", "n": 2}``, ``{"kind": "super_flip", "m": 1, "n": 1}``,
    ``{"kind": "standard_a_series", "n": 3}`` or
    ``{"kind": "explicit", "n": 2, "entries": [[...], ...]}``.
    """
    kind = spec.get('kind')
    if kind == 'flip':
        return flip(int(spec['n']))
    if kind == 'super_flip':
        return super_flip(int(spec['m']), int(spec['n']))
    if kind == 'standard_a_series':
        return standard_a_series(int(spec['n']))
    if kind == 'explicit':
        return explicit(int(spec['n']), Matrix(spec['entries']))
    raise BraidingError('unknown braiding kind %r' % (kind,))


# -- skew-invertibility ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SkewInverseData:
    psi: Matrix
    B: Matrix
    C: Matrix
    a: int
    trC: object

    @property
    def sl_available(self):
        return bool(self.trC)


def _skew_inverse_system(r):
    """Coefficient matrix of ``R_{ij}^{kl} Psi_{lm}^{jn} = delta_m^k delta_i^n``.

    Rows ``(i, k)``, columns ``(j, l)``; the unknown column ``(n, m)`` then
    holds ``Psi_{lm}^{jn}``.
    """
    n = r.n
    R = r.matrix
    return Matrix.from_function(n * n, n * n, lambda row, col: R.data[(row // n) * n + col // n][(row % n) * n + col % n])


def _psi_from_solution(x, n):
    # x[(j, l)][(n', m)] = Psi_{lm}^{j n'}
    return Matrix.from_function(n * n, n * n,
                                lambda row, col: x.data[(col // n) * n + row // n][(col % n) * n + row % n])


def skew_inverse_defects(r, psi):
    """Both sides of ``Tr_2 Psi_12 R_23 = P_13 = Tr_2 Psi_23 R_12`` minus ``P_13``."""
    n = r.n
    lay = TensorLayout.power(n, 3)
    # both sides are operators on the outer factors 1, 3, where P_13 is the flip
    p13 = flip_matrix(n)
    first = partial_trace(place_operator(psi, 1, lay) @ place_operator(r.matrix, 2, lay), lay, 2)
    second = partial_trace(place_operator(psi, 2, lay) @ place_operator(r.matrix, 1, lay), lay, 2)
    return first - p13, second - p13


def skew_inverse(r):
    """The unique Psi with ``Tr_2 Psi_12 R_23 = P_13 = Tr_2 Psi_23 R_12``."""
    n = r.n
    res = solve_linear(_skew_inverse_system(r), Matrix.identity(n * n))
    if not res.consistent:
        raise NotSkewInvertible('braiding is not skew-invertible')
    if not res.unique:
        raise NotSkewInvertible('skew-inverse is not unique (nullity %d); degenerate braiding' % res.nullity)
    psi = _psi_from_solution(res.solution, n)
    d1, d2 = skew_inverse_defects(r, psi)
    for name, d in (('Tr_2 Psi_12 R_23 = P_13', d1), ('Tr_2 Psi_23 R_12 = P_13', d2)):
        w = d.first_nonzero()
        if w is not None:
            raise NotSkewInvertible('%s fails' % name, {'entry': [w[0], w[1]], 'value': str(w[2])})
    return psi


def tr_br_defects(r, B, C):
    lay = r.layout
    ident = Matrix.identity(r.n)
    b1 = kronecker(B, ident)
    c2 = kronecker(ident, C)
    d1 = partial_trace(b1 @ r.matrix, lay, 1) - ident
    d2 = partial_trace(c2 @ r.matrix, lay, 2) - ident
    return d1, d2


def _exponent_of(c):
    k = c.monomial_exponent()
    if k is None or k % 2:
        return None
    return -k // 2


def bc_data(r, psi=None):
    if psi is None:
        psi = skew_inverse(r)
    lay = r.layout
    B = partial_trace(psi, lay, 1)
    C = partial_trace(psi, lay, 2)
    d1, d2 = tr_br_defects(r, B, C)
    for name, d in (('Tr_(1)(B_1 R_12) = I', d1), ('Tr_(2)(C_2 R_12) = I', d2)):
        w = d.first_nonzero()
        if w is not None:
            raise BraidingError('%s fails' % name, {'entry': [w[0], w[1]], 'value': str(w[2])})
    cb = (C @ B).is_scalar()
    bc = (B @ C).is_scalar()
    if cb is None or bc is None or cb != bc or not cb:
        raise BraidingError('C*B is not a scalar matrix', {'CB': (C @ B).to_strings()})
    a = _exponent_of(cb)
    if a is None:
        raise BraidingError('C*B = %s is not of the form q^(-2a)' % cb, {'CB': str(cb)})
    return SkewInverseData(psi, B, C, a, C.trace())


def certify_symmetry(r):
    """Re-run every braiding-level check and collect pass/fail entries with witnesses."""
    n = r.n
    m = r.matrix
    identities = {}
    witnesses = {}
    defect = ybe_defect(m, n)
    ybe = defect.is_zero()
    if not ybe:
        witnesses['ybe'] = _ybe_witness(defect, n)
    cls = _classify(m)
    if cls is None:
        witnesses['class'] = {'minimal_polynomial': [str(c) for c in minimal_polynomial(m)]}
    skew = None
    try:
        psi = skew_inverse(r)
        skew = True
    except NotSkewInvertible as exc:
        skew = False
        witnesses['skew_inverse'] = {'error': str(exc), 'witness': exc.witness}
        psi = None
    if psi is not None:
        d1, d2 = skew_inverse_defects(r, psi)
        identities['skew_inverse_first'] = d1.is_zero()
        identities['skew_inverse_second'] = d2.is_zero()
        lay = r.layout
        B = partial_trace(psi, lay, 1)
        C = partial_trace(psi, lay, 2)
        t1, t2 = tr_br_defects(r, B, C)
        identities['tr_BR_first'] = t1.is_zero()
        identities['tr_BR_second'] = t2.is_zero()
        cb = (C @ B).is_scalar()
        bc = (B @ C).is_scalar()
        identities['CB_scalar_power'] = cb is not None and cb == bc and bool(cb) and _exponent_of(cb) is not None
        if cls == 'involutive':
            identities['CB_identity'] = cb == ONE
        for k, ok in identities.items():
            if not ok:
                witnesses[k] = 'identity fails'
    return Certificate(ybe, cls, skew, identities, witnesses)


# -- extension to V + V* ------------------------------------------------------

def composition_table(n, B):
    """Map End(V)^(x)2 -> End(V) of ``l_i^j o l_k^m = B_k^j l_i^m`` (generator index i*n+j)."""
    n2 = n * n
    entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                bkj = B.data[k][j]
                if not bkj:
                    continue
                for m in range(n):
                    entries[(i * n + m, (i * n + j) * n2 + k * n + m)] = bkj
    return Matrix.from_dict(n2, n2 * n2, entries)


@dataclass(frozen=True, eq=False)
class ExtendedBraiding:
    """Braiding extended to ``(V + V*)^(x)2``.

    Blocks are column-convention maps, index ``(a, b) -> a*N + b`` on both
    sides, with the factor types fixed by the block name (``vd`` maps
    ``V (x) V*`` to ``V* (x) V``, ``dv`` maps ``V* (x) V`` to ``V (x) V*``).
    The dual basis is the right dual ``x^j`` of the ``l``-basis.
    """
    base: Braiding
    skew: SkewInverseData
    vv: Matrix
    vd: Matrix
    dv: Matrix
    dd: Matrix
    pairing_dv: Matrix  # V* (x) V -> K, <x^j, x_k> = B_k^j
    pairing_vd: Matrix  # V (x) V* -> K, <x_i, x^j> = delta

    @property
    def n(self):
        return self.base.n

    def blocks(self):
        return {'V,V': self.vv, 'V,V*': self.vd, 'V*,V': self.dv, 'V*,V*': self.dd}

    def block(self, left, right):
        return {('V', 'V'): self.vv, ('V', 'V*'): self.vd, ('V*', 'V'): self.dv, ('V*', 'V*'): self.dd}[(left, right)]

    def assembled(self):
        """The braiding of ``(V + V*)^(x)2`` as a (2N)^2 square map matrix."""
        n = self.n
        d = 2 * n
        entries = {}
        kinds = ('V', 'V*')
        for s1, k1 in enumerate(kinds):
            for s2, k2 in enumerate(kinds):
                blk = self.block(k1, k2)
                for out, inp, v in blk.entries():
                    o1, o2 = divmod(out, n)
                    i1, i2 = divmod(inp, n)
                    # input (k1, k2), output (k2, k1)
                    entries[((s2 * n + o1) * d + s1 * n + o2, (s1 * n + i1) * d + s2 * n + i2)] = v
        return Matrix.from_dict(d * d, d * d, entries)

    def braiding_with_end(self, factors):
        """Map ``End(V) (x) U -> U (x) End(V)`` for ``U`` a tensor product of V/V* factors."""
        n = self.n
        k = len(factors)
        lay = TensorLayout([n] * (k + 2))
        m = Matrix.identity(lay.dim)
        # move the End(V) = V (x) V* pair across U one factor at a time
        for pos, f in enumerate(factors):
            # current layout: U_1..U_pos, V, V*, U_pos+1, ...
            step2 = embed_operator(self.block('V*', f), [pos + 2, pos + 3], lay)
            step1 = embed_operator(self.block('V', f), [pos + 1, pos + 2], lay)
            m = step1 @ step2 @ m
        return m


def _pairing_matrices(n, B):
    dv = Matrix.from_dict(1, n * n, {(0, j * n + k): B.data[k][j] for j in range(n) for k in range(n)})
    vd = Matrix.from_dict(1, n * n, {(0, i * n + i): 1 for i in range(n)})
    return dv, vd


def _unit_map(rows, cols, a, b):
    return Matrix.from_dict(rows, cols, {(a, b): 1})


def _solve_block(n, build_terms):
    """Solve for a N^2 x N^2 map X from equations ``sum(build(X)) = rhs``.

    ``build_terms(X)`` returns a list of ``(lhs(X), rhs)`` matrix pairs where
    ``lhs`` is linear in X.  All equations are stacked; the solution must be
    unique.
    """
    n2 = n * n
    zero = Matrix.zeros(n2)
    base = build_terms(zero)
    columns = []
    for u in range(n2 * n2):
        x = _unit_map(n2, n2, u // n2, u % n2)
        cols = []
        for (lhs, _), (lhs0, _) in zip(build_terms(x), base):
            d = lhs - lhs0
            cols.extend(v for row in d.data for v in row)
        columns.append(cols)
    rhs = []
    for lhs0, r in base:
        d = r - lhs0
        rhs.extend(v for row in d.data for v in row)
    a = Matrix._raw([list(r) for r in zip(*columns)], len(rhs), n2 * n2)
    b = Matrix._raw([[v] for v in rhs], len(rhs), 1)
    res = solve_linear(a, b, method='sparse')
    if not res.consistent:
        raise BraidingError('pairing-invariance equations have no solution')
    if not res.unique:
        raise BraidingError('pairing-invariance equations do not determine the block (nullity %d)' % res.nullity)
    col = res.solution.column(0)
    return Matrix._raw([col[i * n2:(i + 1) * n2] for i in range(n2)], n2, n2)


def derived_pairing(ext):
    """``<x_i, ^jx> = C_i^j`` rewritten in the right dual basis ``x^j = B_k^j ^kx``.

    The result is ``C B = q^(-2a) I``: the derived pairing of ``V (x) V*``
    is the chosen one up to that scalar, so both have the same invariance.
    """
    cb = ext.skew.C @ ext.skew.B
    n = ext.n
    return Matrix.from_dict(1, n * n, {(0, i * n + j): cb.data[i][j] for i in range(n) for j in range(n)})


def invariance_defects(ext):
    """All pairing-invariance identities, as ``{name: defect matrix}``.

    For ``W`` in {V, V*} and the pairing ``<,>: V* (x) V -> K``:
    ``<,>_12 = <,>_23 (R_{V*,W})_12 (R_{V,W})_23`` on ``V* V W`` and
    ``<,>_23 = <,>_12 (R_{W,V})_23 (R_{W,V*})_12`` on ``W V* V``.
    The same two shapes are checked for ``<,>: V (x) V* -> K``.
    """
    n = ext.n
    lay3 = TensorLayout.power(n, 3)
    iN = Matrix.identity(n)
    out = {}
    for pname, pair, (a, b) in (('V*V', ext.pairing_dv, ('V*', 'V')), ('VV*', ext.pairing_vd, ('V', 'V*'))):
        for w in ('V', 'V*'):
            lhs = kronecker(pair, iN)
            rhs = kronecker(iN, pair) @ embed_operator(ext.block(a, w), [1, 2], lay3) @ embed_operator(ext.block(b, w), [2, 3], lay3)
            out['%s:left:W=%s' % (pname, w)] = lhs - rhs
            lhs = kronecker(iN, pair)
            rhs = kronecker(pair, iN) @ embed_operator(ext.block(w, b), [2, 3], lay3) @ embed_operator(ext.block(w, a), [1, 2], lay3)
            out['%s:right:W=%s' % (pname, w)] = lhs - rhs
    return out


def dual_dual_block(r):
    """``R(x^i (x) x^j) = R_{lk}^{ji} x^k (x) x^l`` as a map matrix."""
    n = r.n
    R = r.matrix
    entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = R.data[l * n + k][j * n + i]
                    if v:
                        entries[(k * n + l, i * n + j)] = v
    return Matrix.from_dict(n * n, n * n, entries)


def extend_to_dual(r, skew=None):
    if skew is None:
        skew = bc_data(r)
    n = r.n
    lay3 = TensorLayout.power(n, 3)
    iN = Matrix.identity(n)
    vv = r.map()
    dd = dual_dual_block(r)
    pdv, pvd = _pairing_matrices(n, skew.B)

    def eqs_dv(x):
        # unknown R_{V*,V}: left identity with W = V, right identity with W = V*
        return [
            (kronecker(iN, pdv) @ embed_operator(x, [1, 2], lay3) @ embed_operator(vv, [2, 3], lay3),
             kronecker(pdv, iN)),
            (kronecker(pdv, iN) @ embed_operator(x, [2, 3], lay3) @ embed_operator(dd, [1, 2], lay3),
             kronecker(iN, pdv)),
        ]

    def eqs_vd(x):
        # unknown R_{V,V*}: left identity with W = V*, right identity with W = V
        return [
            (kronecker(iN, pdv) @ embed_operator(dd, [1, 2], lay3) @ embed_operator(x, [2, 3], lay3),
             kronecker(pdv, iN)),
            (kronecker(pdv, iN) @ embed_operator(vv, [2, 3], lay3) @ embed_operator(x, [1, 2], lay3),
             kronecker(iN, pdv)),
        ]

    dv = _solve_block(n, eqs_dv)
    vd = _solve_block(n, eqs_vd)
    ext = ExtendedBraiding(r, skew, vv, vd, dv, dd, pdv, pvd)
    for name, d in invariance_defects(ext).items():
        if name.startswith('V*V') and not d.is_zero():
            raise BraidingError('pairing invariance %s fails after solving' % name)
    big = ext.assembled()
    if not ybe_defect(big, 2 * n).is_zero():
        raise BraidingError('assembled braiding on (V + V*)^(x)3 violates the Yang-Baxter equation')
    return ext


def extension_class_checks(ext):
    """Class polynomial on the V(x)V and V*(x)V* blocks, invertibility of the mixed ones."""
    poly = involutive_defect if ext.base.cls == 'involutive' else hecke_defect
    out = {
        'V,V': poly(ext.vv).is_zero(),
        'V*,V*': poly(ext.dd).is_zero(),
        'mixed invertible': rank(ext.vd) == ext.n ** 2 and rank(ext.dv) == ext.n ** 2,
    }
    if ext.base.cls == 'involutive':
        out['mixed involutive'] = (ext.vd @ ext.dv).is_identity() and (ext.dv @ ext.vd).is_identity()
    return out


# -- End(V) ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class EndBraiding:
    matrix: Matrix
    layout: TensorLayout
    ext: ExtendedBraiding


def end_braiding(ext):
    """``R_End(V) = R_23 R_34 R_12 R_23`` on ``V (x) V* (x) V (x) V*`` (maps, rightmost first)."""
    n = ext.n
    lay = TensorLayout.power(n, 4)
    first = embed_operator(ext.dv, [2, 3], lay)      # V* V -> V V*
    middle = embed_operator(ext.vv, [1, 2], lay) @ embed_operator(ext.dd, [3, 4], lay)
    last = embed_operator(ext.vd, [2, 3], lay)       # V V* -> V* V
    m = last @ middle @ first
    return EndBraiding(m, lay, ext)


def end_braiding_checks(eb):
    n2 = eb.ext.n ** 2
    m = eb.matrix
    out = {'ybe': ybe_defect(m, n2).is_zero()}
    if eb.ext.base.cls == 'involutive':
        out['involutive'] = (m @ m).is_identity()
    return out


def composition_invariance_defects(eb):
    """``R_End (o (x) id) = o_23 R_12 R_23`` and ``R_End (id (x) o) = o_12 R_23 R_12``."""
    n = eb.ext.n
    n2 = n * n
    lay3 = TensorLayout.power(n2, 3)
    comp = composition_table(n, eb.ext.skew.B)
    i2 = Matrix.identity(n2)
    R = eb.matrix
    r12 = place_operator(R, 1, lay3)
    r23 = place_operator(R, 2, lay3)
    d1 = R @ kronecker(comp, i2) - kronecker(i2, comp) @ r12 @ r23
    d2 = R @ kronecker(i2, comp) - kronecker(comp, i2) @ r23 @ r12
    return d1, d2

