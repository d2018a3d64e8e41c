"""Acceptance criteria 1-13, each at its stated tolerance.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from aytwist.ayfamily import core_curve_image_check, galois_report, nonorientable_instance, orientable_lift
from aytwist.checks import check_conjugation, check_lift, check_penner, check_power_identity
from aytwist.exactnum import IntMatrix, IntPolynomial, NumberField, char_poly, mat_apply_field
from aytwist.exactnum.polynomial import count_real_roots, largest_real_root
from aytwist.exactnum.field import min_poly_of
from aytwist.penner import word_action
from aytwist.strips import (
    IntervalExchange,
    ay_strip,
    first_return,
    iet_symmetries,
    renormalize_strip,
    saf_invariant,
    scaling_conjugacy,
)

RESULTS: dict[int, tuple[bool, str]] = {}

# the 7x7 matrix as displayed for g = 7
DISPLAYED_G7 = [
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [1, 1, 1, 1, 1, 1, 1],
]


def _f_matrix(g):
    inst = nonorientable_instance(g)
    return word_action(inst.system, inst.word).matrix


def criterion_1():
    t0 = time.perf_counter()
    m = _f_matrix(7)
    dt = time.perf_counter() - t0
    return m == IntMatrix(DISPLAYED_G7) and dt < 1.0, f"g=7 matrix equals display, {dt:.3f}s"


def criterion_2():
    t0 = time.perf_counter()
    bad = [g for g in range(3, 17) if char_poly(_f_matrix(g)) != IntPolynomial.ay_polynomial(g)]
    dt = time.perf_counter() - t0
    return not bad and dt < 5.0, f"g=3..16, mismatches {bad}, {dt:.2f}s"


def criterion_3():
    bad = []
    for g in range(3, 17):
        lam = NumberField.ay(g).gen()
        v = lam.field.powers(g)
        if any(not (a - lam * b).is_zero() for a, b in zip(mat_apply_field(_f_matrix(g), v), v)):
            bad.append(g)
    return not bad, f"zero residual in Q(lambda) for g=3..16, failures {bad}"


def criterion_4():
    p = IntPolynomial.ay_polynomial(3)
    root = largest_real_root(p).refine(Fraction(1, 10**12))
    target = Fraction("1.839286755214161")
    unique = count_real_roots(p) == 1 and root.certify()
    close = abs(root.lo - target) <= Fraction(1, 10**9) and abs(root.hi - target) <= Fraction(1, 10**9)
    return unique and close, f"[{float(root.lo):.15f}, {float(root.hi):.15f}] certified, unique real root"


def criterion_5():
    bad = [g for g in range(3, 13) if not check_power_identity(g).passed]
    return not bad, f"both power identities for g=3..12, failures {bad}"


def criterion_6():
    bad = [g for g in range(3, 11) if not check_penner(g).passed]
    return not bad, f"Penner conditions, chi=1-g, nonorientable for g=3..10, failures {bad}"


def criterion_7():
    bad = [g for g in range(3, 9) if not check_lift(g).passed]
    return not bad, f"2g curves, zero A/B blocks, chi=2-2g orientable, divisibility for g=3..8, failures {bad}"


def criterion_8():
    bad = [g for g in range(3, 9) if not core_curve_image_check(nonorientable_instance(g)).passed]
    return not bad, f"r(T_c(gamma)) ~ gamma' for g=3..8, failures {bad}"


def criterion_9():
    bad = []
    for g in range(3, 11):
        s = ay_strip(g)
        if scaling_conjugacy(first_return(s), first_return(renormalize_strip(s))) != s.field.gen().inverse():
            bad.append(g)
    return not bad, f"scale exactly lambda^-1 for g=3..10, failures {bad}"


def criterion_10():
    bad = []
    for g in range(3, 11):
        sym = iet_symmetries(first_return(ay_strip(g)))
        if len(sym) != 1 or not sym[0].is_identity():
            bad.append(g)
    return not bad, f"identity only for g=3..10, failures {bad}"


def criterion_11():
    bad = [g for g in range(3, 11) if not saf_invariant(first_return(ay_strip(g))).is_zero()]
    F = NumberField.ay(3)
    one, lam, zero = F.one(), F.gen(), F.zero()
    three = F.from_rational(3)
    rational = IntervalExchange(three, (three - one, one), (one, zero), (False, False))
    irrational = IntervalExchange(one + lam, (one, lam), (lam, zero), (False, False))
    controls = saf_invariant(rational).is_zero() and not saf_invariant(irrational).is_zero()
    return not bad and controls, f"SAF zero for g=3..10 (failures {bad}); controls {'ok' if controls else 'wrong'}"


def criterion_12():
    bad = []
    for g in range(3, 13):
        lam = NumberField.ay(g).gen()
        if min_poly_of(lam) == min_poly_of(lam.inverse()):
            bad.append(g)
    counts = {g: (galois_report(g)["sum_real_roots"], galois_report(g)["sum_degree"]) for g in range(3, 9)}
    g3 = counts[3][0] < counts[3][1]
    text = ", ".join(f"g={g}: {r}/{d}" for g, (r, d) in counts.items())
    return not bad and g3, f"min polys differ g=3..12 (failures {bad}); real roots of lambda+1/lambda {text}"


def criterion_13():
    bad = [g for g in range(3, 9) if not check_conjugation(g).passed]
    return not bad, f"shared char poly and explicit conjugator for g=3..8, failures {bad}"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 14)}


@pytest.mark.parametrize("number", list(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    RESULTS[number] = (ok, detail)
    assert ok, detail


def summary_lines() -> list[str]:
    return [f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}" for n, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    import sys

    for n, fn in CRITERIA.items():
        RESULTS[n] = fn()
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
