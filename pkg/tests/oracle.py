"""Independent sympy computations used to derive frozen values.

Nothing here touches qlab arithmetic: matrices are built from the index
formulas with sympy and solved with sympy.
"""

from functools import lru_cache
from math import prod

import sympy as sp

q = sp.Symbol('q')


def std_R(n):
    """Row (i,j), column (k,l) holds R_ij^kl for the standard U_q(sl(n)) symmetry."""
    R = sp.zeros(n * n, n * n)
    for i in range(n):
        for j in range(n):
            if i == j:
                R[i * n + i, i * n + i] = q
            else:
                R[i * n + j, j * n + i] = 1
                if i < j:
                    R[i * n + j, i * n + j] = q - 1 / q
    return R


def super_R(m, n):
    d = m + n
    par = [0] * m + [1] * n
    R = sp.zeros(d * d, d * d)
    for i in range(d):
        for j in range(d):
            R[i * d + j, j * d + i] = (-1) ** (par[i] * par[j])
    return R


def ybe_holds(R, n):
    eye = sp.eye(n)
    r12 = sp.kronecker_product(R, eye)
    r23 = sp.kronecker_product(eye, R)
    return sp.simplify(r12 * r23 * r12 - r23 * r12 * r23) == sp.zeros(n ** 3, n ** 3)


def hecke_holds(R, n):
    e = sp.eye(n * n)
    return sp.simplify((R - q * e) * (R + e / q)) == sp.zeros(n * n, n * n)


@lru_cache(maxsize=None)
def b_c(kind, n, m=0):
    """Solve sum_{j,l} R_ij^kl Psi_lm^jn = delta_m^k delta_i^n; return diagonals of B = Tr_1 Psi, C = Tr_2 Psi."""
    R = std_R(n) if kind == 'std' else super_R(m, n - m)
    psi = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    psi[(a, b, c, d)] = sp.Symbol('p_%d%d%d%d' % (a, b, c, d))
    eqs = []
    for i in range(n):
        for k in range(n):
            for mm in range(n):
                for nn in range(n):
                    lhs = sum(R[i * n + j, k * n + l] * psi[(l, mm, j, nn)] for j in range(n) for l in range(n))
                    eqs.append(lhs - (1 if (k == mm and i == nn) else 0))
    sol = sp.solve(eqs, list(psi.values()), dict=True)[0]
    val = {key: sp.simplify(s.subs(sol)) for key, s in psi.items()}
    B = [sp.simplify(sum(val[(l, i, l, i)] for l in range(n))) for i in range(n)]
    C = [sp.simplify(sum(val[(i, mm, i, mm)] for mm in range(n))) for i in range(n)]
    return B, C


def hook_content_dim(parts, n):
    """Number of semistandard tableaux of shape ``parts`` with entries <= n."""
    cells = [(i, j) for i, row in enumerate(parts) for j in range(row)]
    conj = [sum(1 for r in parts if r > j) for j in range(parts[0])] if parts else []
    num = prod(n + j - i for i, j in cells)
    hooks = prod(parts[i] - j + conj[j] - i - 1 for i, j in cells)
    return num // hooks


def sym_cumulative(even, odd, d):
    """Cumulative dims of the (super)symmetric algebra on ``even`` even and ``odd`` odd generators."""
    out, total = [], 0
    for m in range(d + 1):
        total += sum(sp.binomial(even + m - j - 1, m - j) * sp.binomial(odd, j) for j in range(m + 1)) if even else sp.binomial(odd, m)
        out.append(int(total))
    return out
