"""Hecke algebra images on V^(x)k, Young projectors and the operator Q.

Operators here act on tensor powers as maps (column convention), so they
commute with the equivariant representations built in :mod:`qlab.mrea`.

Primitive idempotents are built from Jucys-Murphy elements.  For a Hecke
symmetry ``Y_1 = I``, ``Y_{m+1} = R_m Y_m R_m`` acts on the tableau vector
of ``T`` by ``q^(2 c)`` where ``c`` is the content of the box holding
``m+1``; for an involutive one the additive ``J_1 = 0``,
``J_{m+1} = R_m J_m R_m + R_m`` acts by ``c``.  The projector of ``T``
multiplies the projector of ``T`` minus its last box by the interpolation
factors that keep only the eigenvalue of that box.

Tableaux of one shape are numbered (``a = 1, 2, ...``) in last-letter
order: compare the rows holding ``k, k-1, ...`` and put the tableau whose
first differing letter sits lower first.  The row-reading tableau is
``a = 1``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, TensorLayout, place_operator, q, ONE, ZERO
from .exact.linalg import solve_linear
from .words import PolyMatrix, kron_identity_left

__all__ = ['Partition', 'StandardTableau', 'ProjectorBank', 'QProjectors', 'SchurWeylError',
           'partitions', 'standard_tableaux', 'hecke_rep', 'young_projectors', 'decompose',
           'q_projectors', 'product_coordinates', 'MAX_DEGREE', 'MAX_TENSOR_DIM']

MAX_DEGREE = 4
MAX_TENSOR_DIM = 81


class SchurWeylError(ArithmeticError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        p = tuple(self.parts)
        if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
            raise ValueError('not a partition: %r' % (p,))
        object.__setattr__(self, 'parts', p)

    @property
    def k(self):
        return sum(self.parts)

    def addable_contents(self):
        rows = list(self.parts)
        out = []
        for i, r in enumerate(rows + [0]):
            if i == 0 or rows[i - 1] > r:
                out.append(r - i)
        return out

    def __str__(self):
        return '(' + ','.join(str(x) for x in self.parts) + ')'


def partitions(k):
    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest
    return [Partition(p) for p in gen(k, k)]


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple     # rows[r] = tuple of letters
    a: int

    def row_of(self, letter):
        for r, row in enumerate(self.rows):
            if letter in row:
                return r
        raise KeyError(letter)

    def content(self, letter):
        r = self.row_of(letter)
        return self.rows[r].index(letter) - r

    def prefix(self):
        """The tableau with its largest letter removed (filling only)."""
        k = self.shape.k
        return tuple(tuple(x for x in row if x != k) for row in self.rows if row != (k,))


def _fillings(shape):
    k = shape.k
    out = []

    def rec(rows, m):
        if m > k:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape.parts)):
            if len(rows[i]) < shape.parts[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(m)
                rec(rows, m + 1)
                rows[i].pop()

    rec([[] for _ in shape.parts], 1)
    return out


def _row_sequence(filling, k):
    where = {}
    for r, row in enumerate(filling):
        for x in row:
            where[x] = r
    return tuple(where[x] for x in range(k, 0, -1))


def standard_tableaux(shape):
    k = shape.k
    fills = sorted(_fillings(shape), key=lambda f: tuple(-r for r in _row_sequence(f, k)))
    return [StandardTableau(shape, f, i + 1) for i, f in enumerate(fills)]


# -- Hecke images -------------------------------------------------------------

def hecke_rep(r, k):
    """``[R_1, ..., R_{k-1}]`` on V^(x)k (maps), with braid and class relations checked."""
    if k < 2:
        raise SchurWeylError('need k >= 2 for Hecke generators')
    if r.n ** k > MAX_TENSOR_DIM:
        raise SchurWeylError('N^k = %d exceeds the size cap %d' % (r.n ** k, MAX_TENSOR_DIM))
    lay = TensorLayout.power(r.n, k)
    gens = [place_operator(r.map(), i, lay) for i in range(1, k)]
    ident = Matrix.identity(lay.dim)
    for i, g in enumerate(gens):
        if r.cls == 'involutive':
            ok = (g @ g).is_identity()
        else:
            ok = ((g - ident * q) @ (g + ident * q.inverse())).is_zero()
        if not ok:
            raise SchurWeylError('class polynomial fails for R_%d' % (i + 1))
        if i + 1 < len(gens):
            h = gens[i + 1]
            if not (g @ h @ g - h @ g @ h).is_zero():
                raise SchurWeylError('braid relation fails for R_%d, R_%d' % (i + 1, i + 2))
        for j in range(i + 2, len(gens)):
            if not (g @ gens[j] - gens[j] @ g).is_zero():
                raise SchurWeylError('R_%d and R_%d do not commute' % (i + 1, j + 1))
    return gens


def _jm_elements(r, gens, dim):
    """JM elements X_1..X_k and the eigenvalue attached to a content."""
    ident = Matrix.identity(dim)
    if r.cls == 'involutive':
        xs = [Matrix.zeros(dim)]
        for g in gens:
            xs.append(g @ xs[-1] @ g + g)
        return xs, (lambda c: ONE * c)
    xs = [ident]
    for g in gens:
        xs.append(g @ xs[-1] @ g)
    return xs, (lambda c: q ** (2 * c))


@dataclass(frozen=True, eq=False)
class ProjectorBank:
    k: int
    n: int
    tableaux: tuple              # StandardTableau in bank order
    projectors: dict             # (parts, a) -> Matrix
    dims: dict                   # (parts, a) -> int
    generators: tuple = ()

    def keys(self):
        return [(t.shape.parts, t.a) for t in self.tableaux]

    def isotypic(self, parts):
        acc = None
        for t in self.tableaux:
            if t.shape.parts == parts:
                e = self.projectors[(parts, t.a)]
                acc = e if acc is None else acc + e
        return acc


def _trace_dim(e):
    t = e.trace()
    if not t.is_constant():
        raise SchurWeylError('trace of an idempotent is not constant: %s' % t)
    v = t.constant_value()
    if v.denominator != 1 or v < 0:
        raise SchurWeylError('trace of an idempotent is not a natural number: %s' % t)
    return int(v)


def verify_bank(bank):
    """Idempotency, orthogonality, completeness and rank additivity; raises on failure."""
    keys = bank.keys()
    mats = [bank.projectors[key] for key in keys]
    dim = bank.n ** bank.k
    total = Matrix.zeros(dim)
    for key, e in zip(keys, mats):
        if not (e @ e - e).is_zero():
            raise SchurWeylError('projector %r is not idempotent' % (key,))
        total = total + e
    for i, e in enumerate(mats):
        for j, f in enumerate(mats):
            if i != j and not (e @ f).is_zero():
                raise SchurWeylError('projectors %r and %r are not orthogonal' % (keys[i], keys[j]))
    if not total.is_identity():
        raise SchurWeylError('projectors do not sum to the identity')
    if sum(bank.dims.values()) != dim:
        raise SchurWeylError('projector ranks do not add up to N^k')
    return True


def young_projectors(r, k, verify=True):
    if k > MAX_DEGREE:
        raise SchurWeylError('degree %d exceeds the cap %d' % (k, MAX_DEGREE))
    dim = r.n ** k
    if k == 1:
        t = StandardTableau(Partition((1,)), ((1,),), 1)
        e = Matrix.identity(dim)
        return ProjectorBank(1, r.n, (t,), {((1,), 1): e}, {((1,), 1): dim}, ())
    gens = hecke_rep(r, k)
    xs, ev = _jm_elements(r, gens, dim)
    ident = Matrix.identity(dim)
    cache = {((1,),): ident}

    def proj(filling):
        e = cache.get(filling)
        if e is not None:
            return e
        m = max(max(row) for row in filling)
        prefix = tuple(row for row in (tuple(x for x in row if x != m) for row in filling) if row)
        base = proj(prefix)
        shape = Partition(tuple(len(row) for row in prefix))
        row = next(i for i, rw in enumerate(filling) if m in rw)
        c = filling[row].index(m) - row
        target = ev(c)
        x = xs[m - 1]
        e = base
        for other in shape.addable_contents():
            if other == c:
                continue
            o = ev(other)
            e = e @ ((x - ident * o) * (target - o).inverse())
        cache[filling] = e
        return e

    tableaux = []
    projectors = {}
    dims = {}
    for lam in partitions(k):
        for t in standard_tableaux(lam):
            e = proj(t.rows)
            tableaux.append(t)
            projectors[(lam.parts, t.a)] = e
            dims[(lam.parts, t.a)] = _trace_dim(e)
    bank = ProjectorBank(k, r.n, tuple(tableaux), projectors, dims, tuple(gens))
    if verify:
        verify_bank(bank)
    return bank


def isotypic_central(bank):
    """Whether every isotypic projector commutes with every R_i."""
    for lam in {t.shape.parts for t in bank.tableaux}:
        e = bank.isotypic(lam)
        for g in bank.generators:
            if not (e @ g - g @ e).is_zero():
                return False
    return True


def decompose(r, k, bank=None):
    bank = bank or young_projectors(r, k)
    return [(Partition(parts), a, bank.dims[(parts, a)]) for parts, a in bank.keys()]


# -- Q and the q-(anti)symmetrizers -------------------------------------------

def product_coordinates(r):
    """Coordinates of the entries of ``L_1b L_2b = L_1 R L_1 R^-1`` and of its conjugate.

    Returns ``(T, T2)``: row ``e`` of ``T`` holds the coefficients of entry
    ``e`` of ``L_1b L_2b`` on the words ``l_a l_b`` (column ``a*N^2 + b``), and
    ``T2`` does the same for ``R^-1 L_1b L_2b R``.
    """
    n = r.n
    n2 = n * n
    R = r.matrix
    Rinv = r.inverse_matrix()
    L1 = kron_identity_left(PolyMatrix.generators(n), n)
    ll = L1 @ R @ L1 @ Rinv
    conj = Rinv @ ll @ R
    return _coords(ll, n2), _coords(conj, n2)


def _coords(pm, n2):
    rows = []
    for _, p in pm.entries():
        row = [ZERO] * (n2 * n2)
        for w, v in p.items():
            row[w[0] * n2 + w[1]] = v
        rows.append(row)
    return Matrix._raw(rows, len(rows), n2 * n2)


def linear_coordinates(r):
    """Rows: entries of ``L_1 R - R L_1`` on the generators."""
    n = r.n
    n2 = n * n
    R = r.matrix
    L1 = kron_identity_left(PolyMatrix.generators(n), n)
    pm = L1 @ R - R @ L1
    rows = []
    for _, p in pm.entries():
        row = [ZERO] * n2
        for w, v in p.items():
            row[w[0]] = v
        rows.append(row)
    return Matrix._raw(rows, len(rows), n2)


@dataclass(frozen=True, eq=False)
class QProjectors:
    Q: Matrix
    S: Matrix
    A: Matrix
    ybe: bool
    polynomial_ok: bool
    T: Matrix
    bracket_rows: Matrix   # T^-1 (L_1 R - R L_1), row convention


def q_projectors(ext, check_ybe=True):
    r = ext.base
    n2 = r.n ** 2
    T, T2 = product_coordinates(r)
    lin = linear_coordinates(r)
    res = solve_linear(T, T2.hstack(lin), method='sparse')
    if not res.unique:
        raise SchurWeylError('entries of L_1b L_2b do not form a basis of End(V)^(x)2')
    sol = res.solution
    q_row = sol.submatrix(list(range(n2 * n2)), list(range(n2 * n2)))
    bk_row = sol.submatrix(list(range(n2 * n2)), list(range(n2 * n2, n2 * n2 + n2)))
    Q = q_row.T
    ident = Matrix.identity(n2 * n2)
    if r.cls == 'involutive':
        ok = (Q @ Q).is_identity()
        S = (ident + Q) * Fraction(1, 2)
    else:
        q2 = q * q
        qm2 = q2.inverse()
        ok = ((Q - ident) @ (Q + ident * q2) @ (Q + ident * qm2)).is_zero()
        S = (Q + ident * q2) @ (Q + ident * qm2) * ((1 + q2) * (1 + qm2)).inverse()
    if not ok:
        raise SchurWeylError('Q is not annihilated by its expected polynomial')
    A = ident - S
    ybe = None
    if check_ybe:
        from .braidings import ybe_defect
        ybe = ybe_defect(Q, n2).is_zero()
    return QProjectors(Q, S, A, ybe, ok, T, bk_row)
