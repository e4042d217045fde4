"""Exact linear algebra over Q(q).

Two elimination engines live here:

* :func:`bareiss_echelon` -- fraction-free (Bareiss) elimination.  Rows are
  first cleared of denominators, after which every intermediate entry is a
  Laurent polynomial and each step divides exactly by the previous pivot.
  This is the engine behind :func:`solve_linear` for small dense systems.
* :func:`sparse_echelon` -- Gauss-Jordan on dict rows with pivots chosen by a
  Markowitz-style rule (short rows, simple entries first).  The relation
  systems of the algebra code are large, very sparse and full of unit
  entries, where dense Bareiss would spend almost all of its time scaling
  rows that do not need it.
"""

from dataclasses import dataclass
from typing import Optional

from .laurent import ONE as P_ONE, poly_gcd, poly_exact_div
from .matrix import Matrix, ShapeError
from .ratfunc import RationalFunction, ZERO, ONE

__all__ = ['solve_linear', 'solve_unique', 'rank', 'nullspace', 'inverse', 'column_basis',
           'bareiss_echelon', 'sparse_echelon', 'LinearSolveResult', 'NonUniqueSolution',
           'InconsistentSystem', 'row_space_rank']

# dense Bareiss is used up to this many unknowns
BAREISS_MAX_COLS = 24


class InconsistentSystem(ArithmeticError):
    pass


class NonUniqueSolution(ArithmeticError):

    def __init__(self, msg, nullity):
        super().__init__(msg)
        self.nullity = nullity


@dataclass(frozen=True)
class LinearSolveResult:
    solution: Optional[Matrix]
    consistent: bool
    unique: bool
    rank: int
    nullity: int


def _lcm(a, b):
    g = poly_gcd(a, b)
    return poly_exact_div(a * b, g)


def _clear_denominators(row):
    den = P_ONE
    for v in row:
        if v and not v.is_laurent():
            den = _lcm(den, v.den)
    out = []
    for v in row:
        if not v:
            out.append(None)
        elif den.is_one():
            out.append(v.num)
        else:
            out.append(v.num * poly_exact_div(den, v.den))
    return out


def bareiss_echelon(rows, pivot_limit=None):
    """Fraction-free row echelon form.

    ``rows`` is a list of lists of RationalFunction.  Returns
    ``(echelon, pivots)`` with Laurent-polynomial entries (``None`` for
    zero) and the list of pivot columns.  Pivot search is restricted to the
    first ``pivot_limit`` columns when given.
    """
    a = [_clear_denominators(r) for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    limit = n if pivot_limit is None else pivot_limit
    prev = P_ONE
    pivots = []
    r = 0
    for c in range(limit):
        if r >= m:
            break
        best = None
        for i in range(r, m):
            v = a[i][c]
            if v is not None:
                key = len(v.terms)
                if best is None or key < best[0]:
                    best = (key, i)
                    if key == 1:
                        break
        if best is None:
            continue
        i = best[1]
        if i != r:
            a[r], a[i] = a[i], a[r]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            for j in range(c + 1, n):
                x = row[j]
                y = prow[j]
                if x is None and (f is None or y is None):
                    continue
                t = piv * x if x is not None else None
                if f is not None and y is not None:
                    u = f * y
                    t = -u if t is None else t - u
                if t is None or not t.terms:
                    row[j] = None
                else:
                    row[j] = poly_exact_div(t, prev) if not prev.is_one() else t
            row[c] = None
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def sparse_echelon(rows, ncols, pivot_limit=None, reduce_all=True):
    """Gauss-Jordan elimination on sparse rows.

    ``rows``: iterable of dicts ``{col: RationalFunction}``.  Returns
    ``(pivot_rows, remaining)`` where ``pivot_rows`` is a list of
    ``(pivot_col, row_dict)`` with the pivot normalized to 1, and
    ``remaining`` holds rows with no admissible pivot left (nonzero only in
    columns ``>= pivot_limit``).  With ``reduce_all`` the pivot columns are
    cleared from every other row as well (reduced echelon form).
    """
    limit = ncols if pivot_limit is None else pivot_limit
    active = [dict(r) for r in rows if r]
    done = []
    remaining = []
    while active:
        # choose the row with fewest admissible entries, then its simplest entry
        best = None
        for idx, row in enumerate(active):
            cand = [(c, v) for c, v in row.items() if c < limit]
            if not cand:
                continue
            c, v = min(cand, key=lambda cv: (cv[1].complexity(), cv[0]))
            key = (len(row), v.complexity(), c)
            if best is None or key < best[0]:
                best = (key, idx, c)
        if best is None:
            remaining.extend(active)
            break
        _, idx, c = best
        row = active.pop(idx)
        inv = row[c].inverse()
        prow = {j: v * inv for j, v in row.items()}
        prow[c] = ONE
        targets = active + [r for _, r in done] if reduce_all else active
        for other in targets:
            f = other.get(c)
            if f is None:
                continue
            for j, v in prow.items():
                w = other.get(j)
                nv = -f * v if w is None else w - f * v
                if nv:
                    other[j] = nv
                elif w is not None:
                    del other[j]
            other.pop(c, None)
        active = [r for r in active if r]
        done.append((c, prow))
    return done, [r for r in remaining if r]


def _sparse_rows(m):
    return [{j: v for j, v in r} for r in m.nonzero_rows()]


def rank(m):
    """Exact rank over Q(q)."""
    done, _ = sparse_echelon(_sparse_rows(m), m.cols, reduce_all=False)
    return len(done)


def row_space_rank(rows, ncols):
    """Rank of a list of sparse row dicts."""
    done, _ = sparse_echelon(rows, ncols, reduce_all=False)
    return len(done)


def column_basis(m):
    """Indices of a maximal set of linearly independent columns, chosen greedily left to right."""
    return _independent_rows(m.T)


def _independent_rows(m):
    """Greedy indices of rows of ``m`` that are linearly independent."""
    chosen = []
    basis = []
    for i, r in enumerate(m.nonzero_rows()):
        row = {j: v for j, v in r}
        for c, prow in basis:
            f = row.get(c)
            if f is None:
                continue
            for j, v in prow.items():
                w = row.get(j)
                nv = -f * v if w is None else w - f * v
                if nv:
                    row[j] = nv
                elif w is not None:
                    del row[j]
        if row:
            c, v = min(row.items(), key=lambda cv: (cv[1].complexity(), cv[0]))
            inv = v.inverse()
            prow = {j: w * inv for j, w in row.items()}
            for k, (c2, p2) in enumerate(basis):
                f = p2.get(c)
                if f is None:
                    continue
                for j, w in prow.items():
                    x = p2.get(j)
                    nv = -f * w if x is None else x - f * w
                    if nv:
                        p2[j] = nv
                    elif x is not None:
                        del p2[j]
            basis.append((c, prow))
            chosen.append(i)
    return chosen


def _solve_bareiss(a, b):
    n = a.cols
    k = b.cols
    rows = [ra + rb for ra, rb in zip(a.data, b.data)]
    ech, pivots = bareiss_echelon(rows, pivot_limit=n)
    r = len(pivots)
    for i in range(r, len(ech)):
        if any(v is not None for v in ech[i][n:]):
            return LinearSolveResult(None, False, False, r, n - r)
    if r < n:
        return LinearSolveResult(None, True, False, r, n - r)
    x = [[ZERO] * k for _ in range(n)]
    for i in range(r - 1, -1, -1):
        row = ech[i]
        c = pivots[i]
        piv = RationalFunction.from_laurent(row[c])
        for col in range(k):
            acc = row[n + col]
            acc = RationalFunction.from_laurent(acc) if acc is not None else ZERO
            for j in range(c + 1, n):
                v = row[j]
                if v is not None and x[j][col]:
                    acc = acc - RationalFunction.from_laurent(v) * x[j][col]
            x[c][col] = acc / piv
    return LinearSolveResult(Matrix._raw(x, n, k), True, True, r, 0)


def _solve_sparse(a, b):
    n = a.cols
    k = b.cols
    rows = []
    for ra, rb in zip(a.data, b.data):
        d = {j: v for j, v in enumerate(ra) if v}
        for j, v in enumerate(rb):
            if v:
                d[n + j] = v
        rows.append(d)
    done, remaining = sparse_echelon(rows, n + k, pivot_limit=n)
    r = len(done)
    if remaining:
        return LinearSolveResult(None, False, False, r, n - r)
    if r < n:
        return LinearSolveResult(None, True, False, r, n - r)
    x = [[ZERO] * k for _ in range(n)]
    for c, prow in done:
        for j, v in prow.items():
            if j >= n:
                x[c][j - n] = v
    return LinearSolveResult(Matrix._raw(x, n, k), True, True, r, 0)


def solve_linear(a, b, method='auto'):
    """Solve ``a @ x = b`` exactly.

    Returns a :class:`LinearSolveResult`; ``solution`` is None when the
    system is inconsistent or underdetermined (see ``consistent`` /
    ``unique``).  ``method`` is 'bareiss', 'sparse' or 'auto' (Bareiss for
    systems with at most ``BAREISS_MAX_COLS`` unknowns).
    """
    if a.rows != b.rows:
        raise ShapeError('right-hand side has %d rows, system has %d' % (b.rows, a.rows))
    if method == 'auto':
        method = 'bareiss' if a.cols <= BAREISS_MAX_COLS else 'sparse'
    if method == 'bareiss':
        return _solve_bareiss(a, b)
    if method == 'sparse':
        return _solve_sparse(a, b)
    raise ValueError('unknown method %r' % (method,))


def solve_unique(a, b, method='auto'):
    """Like :func:`solve_linear` but returns the solution matrix or raises."""
    res = solve_linear(a, b, method)
    if not res.consistent:
        raise InconsistentSystem('linear system has no solution')
    if not res.unique:
        raise NonUniqueSolution('linear system has a %d-dimensional solution space' % res.nullity, res.nullity)
    return res.solution


def inverse(m):
    if m.rows != m.cols:
        raise ShapeError('inverse of a non-square matrix')
    res = solve_linear(m, Matrix.identity(m.rows))
    if not res.unique:
        raise ZeroDivisionError('matrix is singular')
    return res.solution


def nullspace(m):
    """Basis of the right kernel, as a list of column vectors (lists)."""
    n = m.cols
    done, _ = sparse_echelon(_sparse_rows(m), n)
    pivot_cols = {c for c, _ in done}
    free = [j for j in range(n) if j not in pivot_cols]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for c, prow in done:
            w = prow.get(f)
            if w:
                v[c] = -w
        basis.append(v)
    return basis

