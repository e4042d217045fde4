"""Exact elements of the field Q(q).

A :class:`RationalFunction` is a ratio of Laurent polynomials kept in
canonical form: numerator and denominator coprime, denominator with lowest
exponent 0 and leading coefficient 1.  Two rational functions are equal
exactly when their canonical forms coincide, so ``==`` is structural.
"""

from fractions import Fraction

from .laurent import LaurentPolynomial, ONE as P_ONE, ZERO as P_ZERO, poly_gcd, poly_exact_div, format_laurent

__all__ = ['RationalFunction', 'PoleError', 'q', 'omega', 'rf', 'ZERO', 'ONE']


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


class RationalFunction:

    __slots__ = ('num', 'den', '_hash')

    def __init__(self, num=0, den=None):
        if not isinstance(num, LaurentPolynomial):
            num = LaurentPolynomial.constant(num)
        if den is None:
            den = P_ONE
        elif not isinstance(den, LaurentPolynomial):
            den = LaurentPolynomial.constant(den)
        if not den.terms:
            raise ZeroDivisionError('rational function with zero denominator')
        num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num = num
        f.den = den
        f._hash = None
        return f

    @classmethod
    def from_laurent(cls, p):
        return cls._raw(p, P_ONE)

    @classmethod
    def monomial(cls, exp, c=1):
        return cls._raw(LaurentPolynomial.monomial(exp, c), P_ONE)

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num.terms)

    def is_zero(self):
        return not self.num.terms

    def is_laurent(self):
        return self.den is P_ONE or self.den.is_one()

    def is_constant(self):
        return self.is_laurent() and self.num.is_constant()

    def is_unit_laurent(self):
        """True for nonzero monomials ``c*q^k`` (units of the Laurent ring)."""
        return self.is_laurent() and len(self.num.terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError('%s is not a constant' % self)
        return Fraction(self.num.terms.get(0, 0))

    def monomial_exponent(self):
        """Return ``k`` if self equals ``q^k`` exactly, else ``None``."""
        if self.is_laurent() and len(self.num.terms) == 1:
            (e, c), = self.num.terms.items()
            if c == 1:
                return e
        return None

    def complexity(self):
        """Crude size measure used for pivot selection."""
        return len(self.num.terms) + 2 * (len(self.den.terms) - 1)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a.terms:
            return other
        if not c.terms:
            return self
        b1 = b is P_ONE or b.is_one()
        d1 = d is P_ONE or d.is_one()
        if b1 and d1:
            return RationalFunction._raw(a + c, P_ONE)
        if d1:
            return RationalFunction._raw(a + c * b, b)
        if b1:
            return RationalFunction._raw(a * d + c, d)
        if b == d:
            n = a + c
            if not n.terms:
                return ZERO
            g = poly_gcd(n, b)
            if g.is_one():
                return RationalFunction._raw(n, b)
            return RationalFunction(poly_exact_div(n, g), poly_exact_div(b, g))
        g = poly_gcd(b, d)
        if g.is_one():
            return RationalFunction._raw(a * d + c * b, b * d)
        b2 = poly_exact_div(b, g)
        d2 = poly_exact_div(d, g)
        n = a * d2 + c * b2
        if not n.terms:
            return ZERO
        den = b2 * d
        g2 = poly_gcd(n, g)
        if not g2.is_one():
            n = poly_exact_div(n, g2)
            den = poly_exact_div(den, g2)
        return RationalFunction(n, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a.terms or not c.terms:
            return ZERO
        b1 = b is P_ONE or b.is_one()
        d1 = d is P_ONE or d.is_one()
        if b1 and d1:
            return RationalFunction._raw(a * c, P_ONE)
        if not d1:
            g = poly_gcd(a, d)
            if not g.is_one():
                a = poly_exact_div(a, g)
                d = poly_exact_div(d, g)
        if not b1:
            g = poly_gcd(c, b)
            if not g.is_one():
                c = poly_exact_div(c, g)
                b = poly_exact_div(b, g)
        # cross-cancelled factors are coprime and b, d stay monic with nonzero constant term
        den = b * d
        return RationalFunction._raw(a * c, P_ONE if den.is_one() else den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError('inverse of zero in Q(q)')
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def evaluate_at(self, q0):
        """Exact value at ``q = q0`` (``q0`` rational, nonzero).

        The stored form is already reduced, so a vanishing denominator at
        ``q0`` is a genuine pole.
        """
        q0 = Fraction(q0)
        if not q0:
            raise PoleError('cannot evaluate a Laurent expression at q = 0')
        d = self.den.evaluate(q0)
        if not d:
            raise PoleError('pole of %s at q = %s' % (self, q0))
        return self.num.evaluate(q0) / d

    def specialize(self, q0):
        """Same as :meth:`evaluate_at` but returned as a constant RationalFunction."""
        return RationalFunction(self.evaluate_at(q0))

    def __repr__(self):
        return 'RationalFunction(%r)' % str(self)

    def __str__(self):
        n = format_laurent(self.num)
        if self.is_laurent():
            return n
        if len(self.num.terms) > 1:
            n = '(%s)' % n
        d = format_laurent(self.den)
        if len(self.den.terms) > 1:
            d = '(%s)' % d
        return '%s/%s' % (n, d)


def _canonical(num, den):
    if not num.terms:
        return P_ZERO, P_ONE
    if den.is_one():
        return num, P_ONE
    g = poly_gcd(num, den)
    if not g.is_one():
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
    lo = den.min_exp()
    if lo:
        num = num.shift(-lo)
        den = den.shift(-lo)
    lc = den.leading_coefficient()
    if lc != 1:
        inv = Fraction(1) / Fraction(lc)
        num = num * inv
        den = den * inv
    if den.is_one():
        den = P_ONE
    return num, den


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        if not x:
            return ZERO
        return RationalFunction._raw(LaurentPolynomial.constant(x), P_ONE)
    if isinstance(x, LaurentPolynomial):
        return RationalFunction._raw(x, P_ONE)
    if isinstance(x, str):
        from .grammar import parse_scalar
        return parse_scalar(x)
    return NotImplemented


def rf(x):
    """Coerce ints, Fractions, Laurent polynomials or grammar strings to Q(q)."""
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError('cannot interpret %r as an element of Q(q)' % (x,))
    return r


ZERO = RationalFunction._raw(P_ZERO, P_ONE)
ONE = RationalFunction._raw(P_ONE, P_ONE)
q = RationalFunction.monomial(1)
omega = q - q.inverse()
