"""Matrices whose entries are noncommutative polynomials in generators.

An entry is a dict ``{word: coefficient}`` where a word is a tuple of
generator ids and coefficients live in Q(q).  The generator matrix ``L`` of
``End(V)`` uses id ``i*N + j`` for ``l_i^j``.  Only what the relation
systems need is provided: sums, scalar matrix products on either side and
products of two polynomial matrices (word concatenation).
"""

from .exact import Matrix, ONE, ZERO


def _add_into(acc, poly, c=ONE):
    for w, v in poly.items():
        t = v * c if c is not ONE else v
        old = acc.get(w)
        if old is None:
            acc[w] = t
        else:
            s = old + t
            if s:
                acc[w] = s
            else:
                del acc[w]


def poly_add(a, b, c=ONE):
    out = dict(a)
    _add_into(out, b, c)
    return out


class PolyMatrix:

    __slots__ = ('rows', 'cols', 'data')

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        # sparse: {(r, c): {word: coeff}}, empty polys not stored
        self.data = data if data is not None else {}

    @classmethod
    def generators(cls, n):
        """``L = ||l_i^j||`` as an n x n matrix."""
        return cls(n, n, {(i, j): {(i * n + j,): ONE} for i in range(n) for j in range(n)})

    @classmethod
    def from_matrix(cls, m):
        return cls(m.rows, m.cols, {(i, j): {(): v} for i, j, v in m.entries()})

    def __getitem__(self, ij):
        return self.data.get(ij, {})

    def __add__(self, other):
        out = {k: dict(v) for k, v in self.data.items()}
        for k, p in other.data.items():
            acc = out.setdefault(k, {})
            _add_into(acc, p)
            if not acc:
                del out[k]
        return PolyMatrix(self.rows, self.cols, out)

    def __neg__(self):
        return PolyMatrix(self.rows, self.cols, {k: {w: -v for w, v in p.items()} for k, p in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return PolyMatrix(self.rows, self.cols)
        return PolyMatrix(self.rows, self.cols, {k: {w: v * c for w, v in p.items()} for k, p in self.data.items()})

    def _by_row(self):
        rows = {}
        for (i, j), p in self.data.items():
            rows.setdefault(i, []).append((j, p))
        return rows

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError('shape mismatch')
            onz = other.nonzero_rows()
            out = {}
            for i, items in self._by_row().items():
                for k, p in items:
                    for j, v in onz[k]:
                        acc = out.setdefault((i, j), {})
                        _add_into(acc, p, v)
            return PolyMatrix(self.rows, other.cols, {k: v for k, v in out.items() if v})
        if self.cols != other.rows:
            raise ValueError('shape mismatch')
        orows = other._by_row()
        out = {}
        for i, items in self._by_row().items():
            for k, p in items:
                for j, p2 in orows.get(k, ()):
                    acc = out.setdefault((i, j), {})
                    for w1, c1 in p.items():
                        for w2, c2 in p2.items():
                            w = w1 + w2
                            t = c1 * c2
                            old = acc.get(w)
                            if old is None:
                                acc[w] = t
                            else:
                                s = old + t
                                if s:
                                    acc[w] = s
                                else:
                                    del acc[w]
        return PolyMatrix(self.rows, other.cols, {k: v for k, v in out.items() if v})

    def __rmatmul__(self, m):
        if not isinstance(m, Matrix):
            return NotImplemented
        if m.cols != self.rows:
            raise ValueError('shape mismatch')
        cols = {}
        for (k, j), p in self.data.items():
            cols.setdefault(k, []).append((j, p))
        out = {}
        for i, mrow in enumerate(m.nonzero_rows()):
            for k, v in mrow:
                for j, p in cols.get(k, ()):
                    acc = out.setdefault((i, j), {})
                    _add_into(acc, p, v)
        return PolyMatrix(m.rows, self.cols, {k: v for k, v in out.items() if v})

    def is_zero(self):
        return not self.data

    def entries(self):
        """Entries in row-major order, as (flat index, poly)."""
        return [(i * self.cols + j, self.data.get((i, j), {})) for i in range(self.rows) for j in range(self.cols)]

    def substitute(self, images, dim):
        """Evaluate at generator images (list of dim x dim Matrix); block matrix result."""
        cache = {}

        def word_value(w):
            v = cache.get(w)
            if v is None:
                if not w:
                    v = Matrix.identity(dim)
                elif len(w) == 1:
                    v = images[w[0]]
                else:
                    v = word_value(w[:-1]) @ images[w[-1]]
                cache[w] = v
            return v

        blocks = {}
        for k, p in self.data.items():
            acc = Matrix.zeros(dim)
            for w, c in p.items():
                acc = acc + word_value(w) * c
            if not acc.is_zero():
                blocks[k] = acc
        return blocks


def kron_identity_left(pm, n):
    """``pm (x) I_n`` (the placement ``L_1`` when pm = L)."""
    out = {}
    for (i, j), p in pm.data.items():
        for b in range(n):
            out[(i * n + b, j * n + b)] = dict(p)
    return PolyMatrix(pm.rows * n, pm.cols * n, out)


def coefficient_matrix(polys, words_index, ncols):
    """Rows of coefficients of ``polys`` against ``words_index`` (word -> column)."""
    data = [None] * len(polys)
    for r, p in enumerate(polys):
        row = [ZERO] * ncols
        for w, v in p.items():
            row[words_index[w]] = v
        data[r] = row
    return Matrix._raw(data, len(polys), ncols)


def words_of_length(ngen, k):
    out = [()]
    for _ in range(k):
        out = [w + (g,) for w in out for g in range(ngen)]
    return out
