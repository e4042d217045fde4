"""Exact scalar arithmetic over Q(q) and dense linear algebra on top of it."""

from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction, PoleError, q, omega, rf, ZERO, ONE
from .grammar import parse_scalar, format_scalar, ScalarSyntaxError
from .matrix import Matrix, TensorLayout, kronecker, place_operator, partial_trace
from .linalg import solve_linear, rank, nullspace, LinearSolveResult, NonUniqueSolution

__all__ = [
    'LaurentPolynomial', 'RationalFunction', 'PoleError', 'q', 'omega', 'rf', 'ZERO', 'ONE',
    'parse_scalar', 'format_scalar', 'ScalarSyntaxError',
    'Matrix', 'TensorLayout', 'kronecker', 'place_operator', 'partial_trace',
    'solve_linear', 'rank', 'nullspace', 'LinearSolveResult', 'NonUniqueSolution',
    'scalar_arith', 'evaluate_at',
]


def scalar_arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'}; division by zero raises ZeroDivisionError."""
    a, b = rf(a), rf(b)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError('unknown operation %r' % (op,))


def evaluate_at(f, q0):
    return rf(f).evaluate_at(q0)
