"""Parser for the scalar string grammar.

Accepted: integers, ``q``, ``^`` with a (possibly negative) integer exponent,
``+ - * /`` and parentheses, e.g. ``q - q^-1`` or ``(q^2-1)/(q-1)``.
Everything is normalized to a canonical :class:`RationalFunction`.
"""

import re

from .ratfunc import RationalFunction, q as Q

__all__ = ['parse_scalar', 'ScalarSyntaxError', 'format_scalar']

_TOKEN = re.compile(r'\s*(?:(\d+)|(q)|(\^)|([-+*/()]))')


class ScalarSyntaxError(ValueError):

    def __init__(self, msg, text, pos):
        super().__init__('%s at column %d in %r' % (msg, pos + 1, text))
        self.text = text
        self.pos = pos


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarSyntaxError('unexpected character %r' % text[pos], text, pos)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    out.append(('', n))
    return out


class _Parser:

    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        raise ScalarSyntaxError(msg, self.text, self.toks[self.i][1])

    def parse(self):
        if self.peek() == '':
            self.fail('empty expression')
        v = self.expr()
        if self.peek() != '':
            self.fail('unexpected token %r' % self.peek())
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ('+', '-'):
            op, _ = self.take()
            w = self.term()
            v = v + w if op == '+' else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in ('*', '/'):
            op, _ = self.take()
            w = self.unary()
            if op == '*':
                v = v * w
            else:
                if not w:
                    self.i -= 1
                    self.fail('division by zero')
                v = v / w
        return v

    def unary(self):
        if self.peek() == '-':
            self.take()
            return -self.unary()
        if self.peek() == '+':
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == '^':
            self.take()
            sign = 1
            if self.peek() in ('-', '+'):
                sign = -1 if self.take()[0] == '-' else 1
            tok = self.peek()
            if not tok.isdigit():
                self.fail('expected integer exponent')
            self.take()
            k = sign * int(tok)
            if k < 0 and not v:
                self.fail('negative power of zero')
            v = v ** k
        return v

    def atom(self):
        tok = self.peek()
        if tok.isdigit():
            self.take()
            return RationalFunction(int(tok))
        if tok == 'q':
            self.take()
            return Q
        if tok == '(':
            self.take()
            v = self.expr()
            if self.peek() != ')':
                self.fail('expected )')
            self.take()
            return v
        if tok == '':
            self.fail('unexpected end of input')
        self.fail('unexpected token %r' % tok)


def parse_scalar(text):
    """Parse ``text`` into a canonical :class:`RationalFunction`."""
    if isinstance(text, int):
        return RationalFunction(text)
    return _Parser(str(text)).parse()


def format_scalar(f):
    """Canonical string for ``f``; ``parse_scalar(format_scalar(f)) == f``."""
    return str(f)

