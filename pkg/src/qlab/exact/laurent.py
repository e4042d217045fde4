"""Laurent polynomials in one variable q with rational coefficients.

A polynomial is stored as a dict mapping exponents to nonzero coefficients.
Coefficients are kept as ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise; this keeps the common case (integer
coefficients, which is almost everything produced by R-matrices) cheap.
The zero polynomial is the empty dict.
"""

from fractions import Fraction

__all__ = ['LaurentPolynomial', 'poly_gcd', 'poly_exact_div']


def _norm(c):
    if type(c) is int:
        return c
    if c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if type(a) is int and type(b) is int:
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


class LaurentPolynomial:
    """Element of Q[q, q^-1].

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        else:
            terms = {int(e): _norm(c if type(c) is int else Fraction(c))
                     for e, c in dict(terms).items() if c}
        self.terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees: no zero coefficients, normalized coefficient types
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({exp: c})

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and 0 in t)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_one(self):
        t = self.terms
        return len(t) == 1 and t.get(0) == 1

    def min_exp(self):
        return min(self.terms)

    def max_exp(self):
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[max(self.terms)]

    def span(self):
        """Difference between highest and lowest exponent (0 for monomials)."""
        if not self.terms:
            return 0
        return max(self.terms) - min(self.terms)

    def coefficients(self):
        """Sorted list of ``(exponent, coefficient)`` pairs."""
        return sorted(self.terms.items())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = _norm(s)
                else:
                    del t[e]
        return LaurentPolynomial._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            if not other:
                return ZERO
            other = _norm(other if type(other) is int else Fraction(other))
            return LaurentPolynomial._raw({e: _norm(c * other) for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            if cb == 1:
                return LaurentPolynomial._raw({e + eb: c for e, c in a.items()})
            return LaurentPolynomial._raw({e + eb: _norm(c * cb) for e, c in a.items()})
        if len(a) == 1:
            return other * self
        t = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                t[e] = t.get(e, 0) + ca * cb
        return LaurentPolynomial._raw({e: _norm(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError('only monomials can be inverted in the Laurent ring')
            (e, c), = self.terms.items()
            return LaurentPolynomial({e * n: Fraction(1) / Fraction(c) ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by q**k."""
        if not k:
            return self
        return LaurentPolynomial._raw({e + k: c for e, c in self.terms.items()})

    def scale(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: _norm(Fraction(other))} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, q0):
        """Value at the nonzero rational point ``q0``."""
        q0 = Fraction(q0)
        if not q0:
            if self.terms and min(self.terms) < 0:
                raise ZeroDivisionError('negative power of q evaluated at 0')
            return Fraction(self.terms.get(0, 0))
        return sum((c * q0 ** e for e, c in self.terms.items()), Fraction(0))

    def to_dense(self):
        """Return ``(shift, coeffs)`` with ``self == q**shift * sum(coeffs[i] q**i)``."""
        if not self.terms:
            return 0, []
        lo, hi = min(self.terms), max(self.terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            coeffs[e - lo] = c
        return lo, coeffs

    @classmethod
    def from_dense(cls, shift, coeffs):
        return cls._raw({i + shift: _norm(c) for i, c in enumerate(coeffs) if c})

    def __repr__(self):
        return 'LaurentPolynomial(%r)' % (dict(sorted(self.terms.items())),)

    def __str__(self):
        return format_laurent(self)


ZERO = LaurentPolynomial._raw({})
ONE = LaurentPolynomial._raw({0: 1})


def format_laurent(p):
    """Render in the scalar grammar, highest power first: ``q^2 - 3/2*q + 1 - q^-1``."""
    if not p.terms:
        return '0'
    out = []
    for e, c in sorted(p.terms.items(), reverse=True):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            mono = 'q' if e == 1 else 'q^%d' % e
            body = mono if a == 1 else '%s*%s' % (a, mono)
        if not out:
            out.append('-' + body if neg else body)
        else:
            out.append(('- ' if neg else '+ ') + body)
    return ' '.join(out)


# -- dense polynomial helpers (ordinary polynomials, coeffs low -> high) -----

def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) <= db:
        return [], a
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        f = _div(c, lb)
        quot[i - db] = f
        for j in range(db + 1):
            if b[j]:
                a[i - db + j] = _norm(a[i - db + j] - f * b[j])
    return quot, _trim(a[:db])


def _dense_gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lc = a[-1]
    return [_div(c, lc) for c in a]


def poly_gcd(f, g):
    """Monic gcd in Q[q, q^-1], normalized to lowest exponent 0.

    Units of the Laurent ring are the monomials, so the result is unique.
    """
    if not f.terms:
        if not g.terms:
            return ZERO
        f, g = g, f
    if not g.terms:
        _, a = f.to_dense()
        lc = a[-1]
        return LaurentPolynomial.from_dense(0, [_div(c, lc) for c in a])
    if len(f.terms) == 1 or len(g.terms) == 1:
        return ONE
    _, a = f.to_dense()
    _, b = g.to_dense()
    if len(a) < len(b):
        a, b = b, a
    return LaurentPolynomial.from_dense(0, _dense_gcd(a, b))


def poly_exact_div(f, g):
    """Quotient ``f / g`` in Q[q, q^-1]; raises ArithmeticError if inexact."""
    if not g.terms:
        raise ZeroDivisionError('division by the zero polynomial')
    if not f.terms:
        return ZERO
    if len(g.terms) == 1:
        (e, c), = g.terms.items()
        if c == 1:
            return f.shift(-e)
        return LaurentPolynomial._raw({k - e: _div(v, c) for k, v in f.terms.items()})
    sf, a = f.to_dense()
    sg, b = g.to_dense()
    quot, rem = _dense_divmod(a, b)
    if rem:
        raise ArithmeticError('inexact polynomial division')
    return LaurentPolynomial.from_dense(sf - sg, quot)
