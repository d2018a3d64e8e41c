"""Factorization over the integers.

Rational-root and quadratic-factor screens are done here; anything that
survives is handed to sympy's exact univariate factorizer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy

from .polynomial import IntPolynomial


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend({d, n // d})
        d += 1
    return out


def rational_roots(p: IntPolynomial) -> list[Fraction]:
    """All rational roots of ``p`` by the rational root theorem."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    coeffs = list(p.coeffs)
    roots = []
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    q = IntPolynomial(coeffs)
    if q.degree < 1:
        return roots
    for num in _divisors(q.coeffs[0]):
        for den in _divisors(q.leading):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if r not in roots and q(r) == 0:
                    roots.append(r)
    return sorted(roots)


def factor_list(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Irreducible factors over Z with multiplicities (content dropped, leading coefficients positive)."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    return list(_factor_cached(p.coeffs))


@lru_cache(maxsize=256)
def _factor_cached(coeffs: tuple[int, ...]):
    x = sympy.Symbol("x")
    expr = sum(c * x**k for k, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x, domain="ZZ"))
    out = []
    for f, mult in factors:
        cs = [int(c) for c in reversed(f.all_coeffs())]
        out.append((IntPolynomial(cs).sign_normalized(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return tuple(out)


def is_irreducible(p: IntPolynomial) -> bool:
    """Irreducibility over Q."""
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    if rational_roots(p):
        return False
    if p.degree <= 3:
        return True
    return len(factor_list(p)) == 1 and factor_list(p)[0][1] == 1
