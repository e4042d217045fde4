"""Dense matrices over Q(q) and tensor-factor bookkeeping.

Entries are :class:`RationalFunction` values.  Storage is dense (a list of
rows) but products skip zero entries, which is what keeps the N^4 x N^4
operators of this package cheap: R-matrices and everything built from them
are very sparse.

Tensor-product spaces are addressed through :class:`TensorLayout`: basis
vectors of ``V_1 (x) ... (x) V_k`` are enumerated row-major, first factor
slowest, so ``kron`` and ``place_operator`` agree with each other.
"""

from itertools import product
from math import prod

from .ratfunc import RationalFunction, ZERO, ONE, rf

__all__ = ['Matrix', 'TensorLayout', 'kronecker', 'place_operator', 'embed_operator',
           'partial_trace', 'ShapeError']


class ShapeError(ValueError):
    pass


class Matrix:

    __slots__ = ('rows', 'cols', 'data', '_nz')

    def __init__(self, entries):
        data = [[rf(x) for x in row] for row in entries]
        if not data or not data[0]:
            raise ShapeError('matrix dimensions must be positive')
        n = len(data[0])
        if any(len(r) != n for r in data):
            raise ShapeError('ragged matrix rows')
        self.rows = len(data)
        self.cols = n
        self.data = data
        self._nz = None

    @classmethod
    def _raw(cls, data, rows, cols):
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.data = data
        m._nz = None
        return m

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        if rows <= 0 or cols <= 0:
            raise ShapeError('matrix dimensions must be positive')
        return cls._raw([[ZERO] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def scalar(cls, n, c):
        c = rf(c)
        m = cls.zeros(n)
        if c:
            for i in range(n):
                m.data[i][i] = c
        return m

    @classmethod
    def from_dict(cls, rows, cols, entries):
        """Build from ``{(i, j): value}``; missing entries are zero."""
        m = cls.zeros(rows, cols)
        for (i, j), v in entries.items():
            v = rf(v)
            if v:
                m.data[i][j] = v
        return m

    @classmethod
    def from_function(cls, rows, cols, fn):
        return cls._raw([[rf(fn(i, j)) for j in range(cols)] for i in range(rows)], rows, cols)

    @classmethod
    def diag(cls, values):
        values = [rf(v) for v in values]
        m = cls.zeros(len(values))
        for i, v in enumerate(values):
            m.data[i][i] = v
        return m

    # -- access -------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError('entry (%d, %d) out of range for %dx%d matrix' % (i, j, self.rows, self.cols))
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [r[j] for r in self.data]

    def nonzero_rows(self):
        """Per row, the list of ``(column, value)`` pairs with nonzero value."""
        if self._nz is None:
            self._nz = [[(j, v) for j, v in enumerate(r) if v.num.terms] for r in self.data]
        return self._nz

    def nnz(self):
        return sum(len(r) for r in self.nonzero_rows())

    def entries(self):
        """Iterate over ``(i, j, value)`` for nonzero entries."""
        for i, r in enumerate(self.nonzero_rows()):
            for j, v in r:
                yield i, j, v

    def to_lists(self):
        return [list(r) for r in self.data]

    # -- algebra ------------------------------------------------------------

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeError('shape mismatch %s vs %s' % (self.shape, other.shape))

    def __add__(self, other):
        self._check_same(other)
        return Matrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                           self.rows, self.cols)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                           self.rows, self.cols)

    def __neg__(self):
        return Matrix._raw([[-a for a in r] for r in self.data], self.rows, self.cols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            raise TypeError('use @ for matrix products')
        c = rf(c)
        if not c:
            return Matrix.zeros(self.rows, self.cols)
        if c == ONE:
            return self
        return Matrix._raw([[a * c if a else ZERO for a in r] for r in self.data], self.rows, self.cols)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * rf(c).inverse()

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError('cannot multiply %dx%d by %dx%d' % (self.rows, self.cols, other.rows, other.cols))
        bnz = other.nonzero_rows()
        out = []
        ncols = other.cols
        for arow in self.nonzero_rows():
            acc = {}
            for k, a in arow:
                for j, b in bnz[k]:
                    v = acc.get(j)
                    acc[j] = a * b if v is None else v + a * b
            row = [ZERO] * ncols
            for j, v in acc.items():
                row[j] = v
            out.append(row)
        return Matrix._raw(out, self.rows, ncols)

    def __pow__(self, n):
        if self.rows != self.cols:
            raise ShapeError('power of a non-square matrix')
        if n < 0:
            from .linalg import inverse
            return inverse(self) ** (-n)
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    @property
    def T(self):
        return Matrix._raw([list(c) for c in zip(*self.data)], self.cols, self.rows)

    def trace(self):
        if self.rows != self.cols:
            raise ShapeError('trace of a non-square matrix')
        t = ZERO
        for i in range(self.rows):
            d = self.data[i][i]
            if d:
                t = t + d
        return t

    def map(self, fn):
        return Matrix._raw([[rf(fn(a)) for a in r] for r in self.data], self.rows, self.cols)

    def evaluate_at(self, q0):
        """Entrywise specialization; entries stay RationalFunction constants."""
        cache = {}

        def ev(a):
            if not a:
                return ZERO
            v = cache.get(a)
            if v is None:
                v = cache[a] = RationalFunction(a.evaluate_at(q0))
            return v
        return Matrix._raw([[ev(a) for a in r] for r in self.data], self.rows, self.cols)

    def submatrix(self, rows, cols):
        return Matrix._raw([[self.data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def hstack(self, other):
        if self.rows != other.rows:
            raise ShapeError('hstack needs equal row counts')
        return Matrix._raw([r + s for r, s in zip(self.data, other.data)], self.rows, self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ShapeError('vstack needs equal column counts')
        return Matrix._raw([list(r) for r in self.data] + [list(r) for r in other.data],
                           self.rows + other.rows, self.cols)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return all(not r for r in self.nonzero_rows())

    def first_nonzero(self):
        """Witness ``(i, j, value)`` of the first nonzero entry, or None."""
        for i, r in enumerate(self.nonzero_rows()):
            if r:
                j, v = r[0]
                return i, j, v
        return None

    def is_identity(self):
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def is_scalar(self):
        """Return c if self == c*I (c may be zero), else None."""
        if self.rows != self.cols:
            return None
        c = self.data[0][0]
        for i in range(self.rows):
            if self.data[i][i] != c:
                return None
        for i, r in enumerate(self.nonzero_rows()):
            for j, _ in r:
                if j != i:
                    return None
        return c

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return 'Matrix(%dx%d, nnz=%d)' % (self.rows, self.cols, self.nnz())

    def pretty(self):
        return '\n'.join('[' + ', '.join(str(a) for a in r) + ']' for r in self.data)

    def to_strings(self):
        return [[str(a) for a in r] for r in self.data]


class TensorLayout:
    """Factor dimensions of a tensor product, first factor slowest."""

    __slots__ = ('factor_dims',)

    def __init__(self, factor_dims):
        dims = tuple(int(d) for d in factor_dims)
        if not dims or any(d <= 0 for d in dims):
            raise ShapeError('layout needs positive factor dimensions')
        self.factor_dims = dims

    @classmethod
    def power(cls, n, k):
        return cls([n] * k)

    @property
    def dim(self):
        return prod(self.factor_dims)

    def __len__(self):
        return len(self.factor_dims)

    def __eq__(self, other):
        return isinstance(other, TensorLayout) and self.factor_dims == other.factor_dims

    def __hash__(self):
        return hash(self.factor_dims)

    def __repr__(self):
        return 'TensorLayout(%r)' % (list(self.factor_dims),)

    def index(self, multi):
        i = 0
        for d, m in zip(self.factor_dims, multi):
            i = i * d + m
        return i

    def multi_index(self, i):
        out = []
        for d in reversed(self.factor_dims):
            i, r = divmod(i, d)
            out.append(r)
        return tuple(reversed(out))

    def multi_indices(self):
        return product(*(range(d) for d in self.factor_dims))

    def without(self, factor):
        dims = list(self.factor_dims)
        del dims[factor - 1]
        return TensorLayout(dims)

    def check(self, m):
        if m.rows != self.dim or m.cols != self.dim:
            raise ShapeError('%dx%d operator does not live on %r' % (m.rows, m.cols, self))


def kronecker(a, b):
    """Kronecker product, first factor slowest."""
    out = [[ZERO] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    bnz = b.nonzero_rows()
    for i, arow in enumerate(a.nonzero_rows()):
        for j, x in arow:
            for k, brow in enumerate(bnz):
                orow = out[i * b.rows + k]
                base = j * b.cols
                for l, y in brow:
                    orow[base + l] = x * y
    return Matrix._raw(out, a.rows * b.rows, a.cols * b.cols)


def embed_operator(op, factors, layout):
    """Act with ``op`` on the listed factors (1-based, in the given order), identity elsewhere.

    ``op`` is a square matrix on the tensor product of the listed factors,
    enumerated with the first listed factor slowest.  This realizes
    subscripts such as ``P_13`` or ``R_21``.
    """
    if not isinstance(layout, TensorLayout):
        layout = TensorLayout(layout)
    factors = [f - 1 for f in factors]
    if len(set(factors)) != len(factors) or any(not 0 <= f < len(layout) for f in factors):
        raise ShapeError('invalid factor positions %r for %r' % ([f + 1 for f in factors], layout))
    sub = TensorLayout([layout.factor_dims[f] for f in factors])
    if op.rows != sub.dim or op.cols != sub.dim:
        raise ShapeError('operator of size %dx%d cannot act on factors %r of %r'
                         % (op.rows, op.cols, [f + 1 for f in factors], layout))
    rest = [f for f in range(len(layout)) if f not in factors]
    rest_layout = [layout.factor_dims[f] for f in rest]
    n = layout.dim
    out = [[ZERO] * n for _ in range(n)]
    opnz = op.nonzero_rows()
    multi = [0] * len(layout)
    for rest_idx in product(*(range(d) for d in rest_layout)):
        for f, v in zip(rest, rest_idx):
            multi[f] = v
        for a, arow in enumerate(opnz):
            if not arow:
                continue
            for f, v in zip(factors, sub.multi_index(a)):
                multi[f] = v
            i = layout.index(multi)
            orow = out[i]
            for b, x in arow:
                for f, v in zip(factors, sub.multi_index(b)):
                    multi[f] = v
                orow[layout.index(multi)] = x
    return Matrix._raw(out, n, n)


def place_operator(op, pos, layout):
    """The operator ``I^(pos-1) (x) op (x) I^(...)`` acting on factors ``pos, pos+1``."""
    if not isinstance(layout, TensorLayout):
        layout = TensorLayout(layout)
    if not 1 <= pos < len(layout):
        raise ShapeError('position %d invalid for %r' % (pos, layout))
    d = layout.factor_dims
    left = prod(d[:pos - 1])
    right = prod(d[pos + 1:])
    if op.rows != d[pos - 1] * d[pos] or op.cols != op.rows:
        raise ShapeError('operator of size %dx%d cannot act on factors %d,%d of %r'
                         % (op.rows, op.cols, pos, pos + 1, layout))
    m = op
    if left > 1:
        m = kronecker(Matrix.identity(left), m)
    if right > 1:
        m = kronecker(m, Matrix.identity(right))
    return m


def partial_trace(m, layout, factor):
    """Trace over factor ``factor`` (1-based); the result lives on ``layout.without(factor)``."""
    if not isinstance(layout, TensorLayout):
        layout = TensorLayout(layout)
    layout.check(m)
    if not 1 <= factor <= len(layout):
        raise ShapeError('invalid factor %d for %r' % (factor, layout))
    f = factor - 1
    dims = layout.factor_dims
    outer = prod(dims[:f])
    d = dims[f]
    inner = prod(dims[f + 1:])
    n = outer * inner
    out = [[ZERO] * n for _ in range(n)]
    data = m.data
    for a in range(outer):
        for b in range(inner):
            i = a * inner + b
            for c in range(outer):
                for e in range(inner):
                    j = c * inner + e
                    acc = ZERO
                    for t in range(d):
                        v = data[(a * d + t) * inner + b][(c * d + t) * inner + e]
                        if v:
                            acc = acc + v
                    out[i][j] = acc
    return Matrix._raw(out, n, n)

