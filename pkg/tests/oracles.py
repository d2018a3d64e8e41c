"""Independent reference computations used to cross-check the library.

Nothing here calls the code path it is checking: determinants by cofactor
expansion, characteristic polynomials and root counts through sympy, roots
through mpmath, twist actions through mod-2 homology of the surgery
automorphisms, and the AY exchange through its textbook description.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import mpmath
import sympy


def cofactor_det(rows) -> int:
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def sympy_char_poly(rows) -> list[int]:
    """Coefficients lowest degree first."""
    x = sympy.Symbol("x")
    p = sympy.Matrix(rows).charpoly(x).all_coeffs()
    return [int(c) for c in reversed(p)]


def sympy_real_root_count(coeffs, lo=None, hi=None) -> int:
    x = sympy.Symbol("x")
    p = sympy.Poly(list(reversed(coeffs)), x)
    roots = [r for r in sympy.real_roots(p)]
    roots = sorted(set(roots), key=lambda r: float(r))
    if lo is not None:
        roots = [r for r in roots if r > lo]
    if hi is not None:
        roots = [r for r in roots if r <= hi]
    return len(roots)


def mp_largest_real_root(coeffs, dps: int = 40):
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=200)
        real = [r.real if isinstance(r, mpmath.mpc) else r for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** (-dps // 2)]
        return max(real)


def bisection_root(coeffs, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Plain sign-change bisection; no Sturm sequences."""

    def p(x):
        return sum(c * x**i for i, c in enumerate(coeffs))

    assert p(lo) * p(hi) < 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        if p(lo) * p(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return lo, hi


def brute_force_disagreement(cs) -> list[tuple[int, ...]]:
    """Sign choices o_i with the two neighbourhood orientations opposite at
    every crossing, straight from the crossing data."""
    out = []
    for signs in product((1, -1), repeat=cs.curve_count):
        ok = True
        for c in cs.crossings:
            strand_b = 1 if c.agree else -1
            # neighbourhood of a is o_a times the crossing frame, of b is
            # o_b * strand_b times it; they must be opposite
            if signs[c.a] * signs[c.b] * strand_b != -1:
                ok = False
                break
        if ok:
            out.append(signs)
    return out


def abelianize_mod2(word, rank: int) -> tuple[int, ...]:
    v = [0] * rank
    for a in word:
        v[abs(a) - 1] ^= 1
    return tuple(v)


def homology_mod2_action(group, auto) -> list[list[int]]:
    """Matrix (mod 2, columns = images) of ``auto`` on the classes of c_0..c_{g-1}.

    The class of c_k is x + y_k, so coordinates are read off the y letters.
    """
    g = group.g
    n = g + 1
    classes = [abelianize_mod2(group.curve_word(k), n) for k in range(g)]
    cols = []
    for k in range(g):
        img = abelianize_mod2(auto(group.curve_word(k)), n)
        coeff = [img[j + 1] for j in range(g)]
        recon = [0] * n
        for j in range(g):
            if coeff[j]:
                recon = [a ^ b for a, b in zip(recon, classes[j])]
        assert tuple(recon) == img, "image leaves the span of the curves"
        cols.append(coeff)
    return [[cols[j][i] for j in range(g)] for i in range(g)]


def textbook_ay_map(g: int, lam: float):
    """Arnoux-Yoccoz exchange: swap the halves of each block of two equal
    intervals of length lam**i, then rotate by half the circumference."""
    blocks = [lam**i for i in range(g)]
    circ = 2 * sum(blocks)

    def f(x: float) -> float:
        start = 0.0
        for ell in blocks:
            if start <= x < start + 2 * ell:
                y = x + ell if x < start + ell else x - ell
                return (y + circ / 2) % circ
            start += 2 * ell
        raise ValueError(x)

    return f, circ


def traced_boundary_count(rg) -> int:
    """Boundary circles of a ribbon graph by walking dart/direction states.

    A state (d, e) stands at dart d about to leave along its edge, with e the
    local orientation (+1 ccw).  Crossing a twisted edge flips e; at the far
    vertex the walk turns to the next dart in direction e.  Every boundary
    circle is walked once in each direction, so orbits come in pairs.
    """
    partner, twist = {}, {}
    for d1, d2, t in rg.edges:
        partner[d1], partner[d2] = d2, d1
        twist[d1] = twist[d2] = t
    pos = {}
    for v, darts in rg.rotation.items():
        for i, d in enumerate(darts):
            pos[d] = (v, i)

    def step(state):
        d, e = state
        far = partner[d]
        e2 = -e if twist[d] else e
        v, i = pos[far]
        darts = rg.rotation[v]
        return (darts[(i + e2) % len(darts)], e2)

    seen = set()
    orbits = 0
    for d in partner:
        for e in (1, -1):
            s = (d, e)
            if s in seen:
                continue
            orbits += 1
            while s not in seen:
                seen.add(s)
                s = step(s)
    assert orbits % 2 == 0
    return orbits // 2
