from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aytwist.exactnum import (
    IntMatrix,
    IntPolynomial,
    NumberField,
    char_poly,
    isolate_real_roots,
    largest_real_root,
    mat_apply_field,
    min_poly_of,
)
from aytwist.exactnum.factor import factor_list, is_irreducible
from aytwist.exactnum.field import ModulusMismatch
from aytwist.exactnum.polynomial import count_real_roots, squarefree_part

from oracles import bisection_root, cofactor_det, mp_largest_real_root, sympy_char_poly, sympy_real_root_count

small_int = st.integers(-6, 6)


def square_matrices(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n)
    )


polys = st.lists(st.integers(-9, 9), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


# -- polynomials ---------------------------------------------------------


def test_ay_polynomial_coefficients():
    assert IntPolynomial.ay_polynomial(3).coeffs == (-1, -1, -1, 1)
    assert str(IntPolynomial.ay_polynomial(3)) == "x^3 - x^2 - x - 1"


def test_polynomial_json_round_trip():
    p = IntPolynomial([3, 0, -12345678901234567890, 1])
    assert IntPolynomial.from_json(p.to_json()) == p
    assert all(isinstance(c, str) for c in p.to_json())


@given(polys, polys)
def test_polynomial_ring(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    for x in (Fraction(-3, 2), Fraction(0), Fraction(5, 7)):
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_sturm_count_matches_sympy(coeffs):
    p = IntPolynomial(coeffs)
    assert count_real_roots(squarefree_part(p)) == sympy_real_root_count(coeffs)


@settings(max_examples=30, deadline=None)
@given(polys)
def test_isolating_intervals_certify(coeffs):
    p = squarefree_part(IntPolynomial(coeffs))
    ivs = isolate_real_roots(p)
    assert len(ivs) == sympy_real_root_count(list(p.coeffs))
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi < b.lo
    assert all(iv.certify() for iv in ivs)


@pytest.mark.parametrize("g", range(3, 17))
def test_unique_root_above_one(g):
    p = IntPolynomial.ay_polynomial(g)
    assert count_real_roots(p, Fraction(1), None) == 1
    root = largest_real_root(p)
    assert root.certify()
    others = [iv for iv in isolate_real_roots(p) if iv != root]
    assert all(iv.hi < root.lo for iv in others)


def test_root_decimal_against_two_oracles():
    root = largest_real_root(IntPolynomial.ay_polynomial(3)).refine(Fraction(1, 10**30))
    lo, hi = bisection_root([-1, -1, -1, 1], Fraction(1), Fraction(2), Fraction(1, 10**30))
    assert max(root.lo, lo) <= min(root.hi, hi)
    mp = mp_largest_real_root([-1, -1, -1, 1])
    assert abs(float(root.midpoint()) - float(mp)) < 1e-15
    assert root.decimal(12) == "1.839286755214"


def test_decimal_of_exact_root():
    iv = isolate_real_roots(IntPolynomial([-6, 1, 1]))  # (x - 2)(x + 3)
    assert [x.decimal(3) for x in iv] == ["-3.000", "2.000"]


# -- matrices -------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(square_matrices())
def test_det_matches_cofactor(rows):
    assert IntMatrix(rows).det() == cofactor_det(rows)


@settings(max_examples=40, deadline=None)
@given(square_matrices())
def test_char_poly_matches_sympy(rows):
    assert list(char_poly(IntMatrix(rows)).coeffs) == sympy_char_poly(rows)


@settings(max_examples=40, deadline=None)
@given(square_matrices(4), st.randoms(use_true_random=False))
def test_char_poly_permutation_invariant(rows, rnd):
    m = IntMatrix(rows)
    perm = list(range(m.n))
    rnd.shuffle(perm)
    p = IntMatrix.permutation(perm)
    assert char_poly(p @ m @ p.inverse()) == char_poly(m)


def test_inverse_and_powers():
    m = IntMatrix([[2, 1], [1, 1]])
    assert m @ m.inverse() == IntMatrix.identity(2)
    assert m**3 == m @ m @ m
    assert IntMatrix.from_json(m.to_json()) == m


# -- factorization ---------------------------------------------------------


@pytest.mark.parametrize("g", range(3, 13))
def test_ay_polynomial_irreducible(g):
    assert is_irreducible(IntPolynomial.ay_polynomial(g))


def test_factor_list_reconstructs():
    p = IntPolynomial([-1, -1, -1, 1]) * IntPolynomial([1, 1]) ** 2
    prod = IntPolynomial([1])
    for f, k in factor_list(p):
        prod = prod * f**k
    assert prod == p or prod == -p


# -- number field -----------------------------------------------------------


fields = st.sampled_from([3, 4, 5]).map(NumberField.ay)


def elements(field):
    coord = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return st.lists(coord, min_size=field.degree, max_size=field.degree).map(field.element)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_field_ring_axioms(data):
    F = data.draw(fields)
    a, b, c = (data.draw(elements(F)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if not a.is_zero():
        assert a * a.inverse() == F.one()


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_min_poly_vanishes(data):
    F = data.draw(fields)
    e = data.draw(elements(F))
    p = min_poly_of(e)
    acc = F.zero()
    for c in reversed(p.coeffs):
        acc = acc * e + F.from_rational(c)
    assert acc.is_zero()


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_sign_matches_float(data):
    F = data.draw(fields)
    e = data.draw(elements(F))
    if e.is_zero():
        assert e.sign() == 0
    elif abs(float(e)) > 1e-9:
        assert e.sign() == (1 if float(e) > 0 else -1)


@pytest.mark.parametrize("g", range(3, 13))
def test_inverse_not_conjugate(g):
    lam = NumberField.ay(g).gen()
    p, q = min_poly_of(lam), min_poly_of(lam.inverse())
    assert q == p.reversed().sign_normalized()
    assert p != q


def test_field_json_and_mismatch():
    F3, F4 = NumberField.ay(3), NumberField.ay(4)
    e = F3.element([Fraction(1, 2), 0, 3])
    assert type(e).from_json(e.to_json(), F3) == e
    with pytest.raises(ModulusMismatch):
        _ = e + F4.gen()


def test_mat_apply_field_identity_and_eigenvector():
    F = NumberField.ay(4)
    v = F.powers(4)
    assert mat_apply_field(IntMatrix.identity(4), v) == v
    companion = IntMatrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]])
    lam = F.gen()
    assert mat_apply_field(companion, v) == [lam * x for x in v]
