"""Braided Lie bracket on End(V), adjoint action, R-trace and the involutive axioms.

End(V) carries the l-basis ``l_i^j = x_i (x) x^j`` (index ``i*N + j``); the
bracket is an ``N^2 x N^4`` map matrix, column ``a*N^2 + b`` holding
``[l_a, l_b]``.
"""

from dataclasses import dataclass, field

from .braidings import composition_table, ybe_defect
from .exact import Matrix, TensorLayout, kronecker, place_operator, ONE, ZERO
from .exact.linalg import rank
from .mrea import GeneratorRep, RelationSet, filtered_dimension, _with_chi

__all__ = ['BracketData', 'RTrace', 'Report', 'bracket_tensor', 'adjoint_rep', 'verify_bracket_axioms',
           'r_trace', 'make_r_trace', 'involutive_axioms_check', 'classical_gl', 'bracket_identity_in_rep',
           'structure_constants', 'enveloping_relations']


@dataclass
class Report:
    """Ordered pass/fail entries with optional witnesses."""
    entries: list = field(default_factory=list)

    def add(self, name, ok, witness=None):
        self.entries.append((name, bool(ok), witness))
        return ok

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.entries)

    def as_dict(self):
        return {name: ok for name, ok, _ in self.entries}

    def failures(self):
        return [(name, w) for name, ok, w in self.entries if not ok]


def _witness(m):
    w = m.first_nonzero()
    if w is None:
        return None
    return {'row': w[0], 'col': w[1], 'value': str(w[2])}


@dataclass(frozen=True, eq=False)
class BracketData:
    n: int
    bracket: Matrix
    base: object
    Q: Matrix


def bracket_tensor(r, qp):
    """``[L_1b, L_2b] = L_1 R_12 - R_12 L_1`` solved on the basis of entries of ``L_1b L_2b``."""
    return BracketData(r.n, qp.bracket_rows.T, r, qp.Q)


def structure_constants(bd):
    """``[(i, j, k, m, target, coeff)]`` for ``[l_i^j, l_k^m] = sum coeff * l_target``."""
    n = bd.n
    n2 = n * n
    out = []
    for t, w, v in bd.bracket.entries():
        a, b = divmod(w, n2)
        out.append((a // n, a % n, b // n, b % n, t, str(v)))
    out.sort(key=lambda x: x[:5])
    return out


def classical_gl(n):
    """Structure constants of gl(n): ``[l_i^j, l_k^m] = delta_k^j l_i^m - delta_i^m l_k^j``."""
    n2 = n * n
    entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    col = (i * n + j) * n2 + k * n + m
                    if j == k:
                        entries[(i * n + m, col)] = entries.get((i * n + m, col), 0) + 1
                    if i == m:
                        entries[(k * n + j, col)] = entries.get((k * n + j, col), 0) - 1
    return Matrix.from_dict(n2, n2 * n2, entries)


def bracket_identity_in_rep(bd, rho):
    """``rho(l_a) rho(l_b) - rho(Q(l_a l_b)) = rho([l_a, l_b])`` for all a, b; witness or None."""
    n2 = bd.n ** 2
    imgs = rho.images
    prods = [[imgs[a] @ imgs[b] for b in range(n2)] for a in range(n2)]
    Qnz = bd.Q.T.nonzero_rows()     # row w: Q(w) = sum Q[w'][w] w'
    Bnz = bd.bracket.T.nonzero_rows()
    for w in range(n2 * n2):
        a, b = divmod(w, n2)
        acc = prods[a][b]
        for w2, v in Qnz[w]:
            acc = acc - prods[w2 // n2][w2 % n2] * v
        for g, v in Bnz[w]:
            acc = acc - imgs[g] * v
        if not acc.is_zero():
            return {'word': [a, b], 'value': acc.to_strings()}
    return None


def adjoint_rep(bd, skew=None):
    """``ad(l_g) l_h = [l_g, l_h]`` on End(V)."""
    n2 = bd.n ** 2
    images = []
    for g in range(n2):
        images.append(Matrix.from_function(n2, n2, lambda t, h: bd.bracket.data[t][g * n2 + h]))
    rep = GeneratorRep(bd.n, n2, tuple(images), None, True, 'ad', None, ('V', 'V*'))
    return _with_chi(rep, skew.C) if skew is not None else rep


def verify_bracket_axioms(bd, ext, end=None, qp=None):
    """q-skew-symmetry, q-Jacobi on End(V)^(x)3, and both R_End-invariance identities."""
    from .braidings import end_braiding
    rep = Report()
    n2 = bd.n ** 2
    Bk = bd.bracket
    i2 = Matrix.identity(n2)
    if qp is not None:
        rep.add('q-skew: [,] S_q = 0', (Bk @ qp.S).is_zero(), _witness(Bk @ qp.S))
        rep.add('[,] A_q = [,]', (Bk @ qp.A - Bk).is_zero(), _witness(Bk @ qp.A - Bk))
    lay = TensorLayout.power(n2, 3)
    i3 = Matrix.identity(lay.dim)
    b12 = kronecker(Bk, i2)
    b23 = kronecker(i2, Bk)
    q12 = place_operator(bd.Q, 1, lay)
    jac = Bk @ b12 - Bk @ b23 @ (i3 - q12)
    rep.add('q-Jacobi: [,][,]_12 = [,][,]_23 (I - Q_12)', jac.is_zero(), _witness(jac))
    R = (end or end_braiding(ext)).matrix
    r12 = place_operator(R, 1, lay)
    r23 = place_operator(R, 2, lay)
    d1 = R @ b23 - b12 @ r23 @ r12
    rep.add('R_End [,]_23 = [,]_12 R_23 R_12', d1.is_zero(), _witness(d1))
    d2 = R @ b12 - b23 @ r12 @ r23
    rep.add('R_End [,]_12 = [,]_23 R_12 R_23', d2.is_zero(), _witness(d2))
    return rep


# -- R-trace ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RTrace:
    n: int
    weights_l: Matrix   # C: Tr_R(l_i^j) = C_j^i
    weights_h: Matrix   # B: Tr_R(h_i^j) = B_j^i

    def functional_l(self):
        """1 x N^2 row: the R-trace on l-coordinates."""
        n = self.n
        C = self.weights_l
        return Matrix.from_dict(1, n * n, {(0, i * n + j): C.data[j][i] for i in range(n) for j in range(n)})

    def functional_h(self):
        n = self.n
        B = self.weights_h
        return Matrix.from_dict(1, n * n, {(0, i * n + j): B.data[j][i] for i in range(n) for j in range(n)})


def make_r_trace(skew):
    return RTrace(skew.B.rows, skew.C, skew.B)


def r_trace(rt, X, basis='l'):
    """``Tr_R X`` for ``X`` given as an N x N coefficient matrix (``X = sum X[i][j] l_i^j``)."""
    w = rt.weights_l if basis == 'l' else rt.weights_h
    acc = ZERO
    for i in range(rt.n):
        for j in range(rt.n):
            if X.data[i][j] and w.data[j][i]:
                acc = acc + X.data[i][j] * w.data[j][i]
    return acc


def l_to_h(skew):
    """Change of coordinates: column g of the result is ``l_g`` in the h-basis (``l_i^j = B_k^j h_i^k``)."""
    n = skew.B.rows
    B = skew.B
    return Matrix.from_dict(n * n, n * n, {(i * n + k, i * n + j): B.data[k][j]
                                           for i in range(n) for j in range(n) for k in range(n)})


# -- involutive case ----------------------------------------------------------

def example_bracket(ext, end):
    """``[X, Y] = X o Y - o R_End(X (x) Y)`` in the l-basis."""
    n = ext.n
    comp = composition_table(n, ext.skew.B)
    return comp - comp @ end.matrix


def enveloping_relations(n, end_matrix, bracket):
    """Relations ``X (x) Y - R(X (x) Y) - [X, Y]`` over the basis words; bracket may be None."""
    n2 = n * n
    ident = Matrix.identity(n2 * n2)
    quad = (ident - end_matrix).T
    lin = -bracket.T if bracket is not None else Matrix.zeros(n2 * n2, n2)
    return RelationSet(n, ONE, quad, lin, None)


def involutive_axioms_check(r, ext, end=None, bd=None, degree=3):
    from .braidings import end_braiding
    if r.cls != 'involutive':
        raise ValueError('the generalized Lie algebra axioms need an involutive symmetry')
    end = end or end_braiding(ext)
    n = r.n
    n2 = n * n
    R = end.matrix
    Bk = example_bracket(ext, end)
    rep = Report()
    i2 = Matrix.identity(n2)
    lay = TensorLayout.power(n2, 3)
    i3 = Matrix.identity(lay.dim)
    r12 = place_operator(R, 1, lay)
    r23 = place_operator(R, 2, lay)
    b12 = kronecker(Bk, i2)
    b23 = kronecker(i2, Bk)
    cyc = i3 + r12 @ r23 + r23 @ r12

    rep.add('R_End involutive', (R @ R).is_identity())
    rep.add('R_End Yang-Baxter', ybe_defect(R, n2).is_zero())
    d = Bk @ R + Bk
    rep.add('axiom 1: [,] R = -[,]', d.is_zero(), _witness(d))
    d = Bk @ b12 @ cyc
    rep.add('axiom 2: [,][,]_12 (I + R_12 R_23 + R_23 R_12) = 0', d.is_zero(), _witness(d))
    d = R @ b23 - b12 @ r23 @ r12
    rep.add('axiom 3: R [,]_23 = [,]_12 R_23 R_12', d.is_zero(), _witness(d))
    d = R @ b12 - b23 @ r12 @ r23
    rep.add('axiom 3: R [,]_12 = [,]_23 R_12 R_23', d.is_zero(), _witness(d))
    d = Bk @ b23 @ cyc
    rep.add('Jacobi form: [,][,]_23 (I + R_12 R_23 + R_23 R_12) = 0', d.is_zero(), _witness(d))
    d = Bk @ b12 @ (i3 - r23) - Bk @ b23
    rep.add('Jacobi form: [,][,]_12 (X (Y Z - R(Y Z))) = [X,[Y,Z]]', d.is_zero(), _witness(d))
    d = Bk @ b23 @ (i3 - r12) - Bk @ b12
    rep.add('Jacobi form: [,][,]_23 ((X Y - R(X Y)) Z) = [[X,Y],Z]', d.is_zero(), _witness(d))

    # the trace is defined on the h-basis; move it to l-coordinates
    rt = make_r_trace(ext.skew)
    tr = rt.functional_h() @ l_to_h(ext.skew)
    d = tr @ Bk
    rep.add('Tr_R [,] = 0', d.is_zero(), _witness(d))
    d = kronecker(tr, i2) - kronecker(i2, tr) @ R
    rep.add('R_End((Tr_R X) Y) = (I (x) Tr_R) R_End(X Y)', d.is_zero(), _witness(d))
    d = kronecker(i2, tr) - kronecker(tr, i2) @ R
    rep.add('R_End(X (Tr_R Y)) = (Tr_R (x) I) R_End(X Y)', d.is_zero(), _witness(d))
    comp = composition_table(n, ext.skew.B)
    gram = tr @ comp        # 1 x N^4: Tr_R(l_a o l_b)
    G = Matrix.from_function(n2, n2, lambda a, b: gram.data[0][a * n2 + b])
    rep.add('Tr_R(X o Y) non-degenerate', rank(G) == n2)
    rep.add('sl(V_R) closed under [,]', _sl_closed(tr, Bk, n2))
    if bd is not None:
        rep.add('quantum bracket equals the generalized Lie bracket', bd.bracket == Bk)
    if degree:
        u = filtered_dimension(enveloping_relations(n, R, Bk), degree)
        s = filtered_dimension(enveloping_relations(n, R, None), degree)
        rep.add('PBW: U(g) and Sym(g) filtered dims agree', u.dims == s.dims, {'U': list(u.dims), 'Sym': list(s.dims)})
    return rep, Bk


def _sl_closed(tr, Bk, n2):
    """``[sl, sl] in sl``: the bracket of any two traceless elements is traceless."""
    from .exact.linalg import nullspace
    basis = nullspace(tr)
    for x in basis:
        for y in basis:
            vx = Matrix([[c] for c in x])
            vy = Matrix([[c] for c in y])
            z = Bk @ kronecker(vx, vy)
            if not (tr @ z).is_zero():
                return False
    return True

