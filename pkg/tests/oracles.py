"""Independent reference computations used by the tests.

These go through sympy (series expansion, symmetric reduction) or plain
enumeration, never through fixedlocus itself.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy
from sympy.polys.polyfuncs import symmetrize

X = sympy.Symbol("x")


def univariate(expr, d: int) -> list[Fraction]:
    """Taylor coefficients of ``expr(x)`` at 0 up to degree d."""
    poly = sympy.series(expr, X, 0, d + 1).removeO()
    poly = sympy.Poly(sympy.expand(poly), X)
    out = [Fraction(0)] * (d + 1)
    for (k,), c in poly.terms():
        c = sympy.Rational(c)
        out[k] = Fraction(int(c.p), int(c.q))
    return out


def _to_chern(poly_expr, roots) -> dict[tuple[int, ...], Fraction]:
    m = len(roots)
    sym, rem, defs = symmetrize(sympy.expand(poly_expr), *roots, formal=True)
    assert rem == 0
    s = [d[0] for d in defs]
    out = {}
    if sympy.expand(sym) == 0:
        return out
    poly = sympy.Poly(sym, *s) if s else None
    for exps, c in poly.terms():
        c = sympy.Rational(c)
        if c:
            out[tuple(exps)] = Fraction(int(c.p), int(c.q))
    return out


def chern_of_product(factor, m: int, d: int, extra=None) -> dict[tuple[int, ...], Fraction]:
    """Chern-basis coefficients of prod_i factor(x_i) (times ``extra(roots)``), degree <= d."""
    coeffs = univariate(factor, d)
    roots = sympy.symbols(f"g1:{m + 1}")
    total = sympy.Integer(1)
    for r in roots:
        total *= sum(sympy.Rational(c.numerator, c.denominator) * r**k for k, c in enumerate(coeffs))
    total = sympy.expand(total)
    if extra is not None:
        total = sympy.expand(total * extra(roots, d))
    kept = sympy.Poly(total, *roots)
    trimmed = sum(
        (sympy.Rational(c) * sympy.prod([r**e for r, e in zip(roots, exps)])
         for exps, c in kept.terms() if sum(exps) <= d),
        sympy.Integer(0),
    )
    return _to_chern(trimmed, roots)


def chern_of_polynomial(poly_expr, roots) -> dict[tuple[int, ...], Fraction]:
    return _to_chern(poly_expr, roots)


def sym2_trace_bruteforce(a: int, b: int) -> int:
    """Trace of v_i v_j -> eps_i eps_j v_i v_j over the basis {v_i v_j : i <= j}."""
    eps = [1] * a + [-1] * b
    return sum(eps[i] * eps[j] for i, j in itertools.combinations_with_replacement(range(a + b), 2))
