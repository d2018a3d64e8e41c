import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aytwist.exactnum import NumberField
from aytwist.strips import (
    IntervalExchange,
    StripError,
    StripModel,
    ay_strip,
    first_return,
    induced_exchange,
    iet_symmetries,
    renormalize_strip,
    saf_invariant,
    scaling_conjugacy,
    self_similar_arcs,
)

from oracles import textbook_ay_map

F3 = NumberField.ay(3)
LAM = F3.gen()
ONE = F3.one()


def rotation(c, alpha):
    """Rotation by ``alpha`` on a circle of length ``c`` as a two-piece exchange."""
    zero = c.field.zero()
    return IntervalExchange(c, (c - alpha, alpha), (alpha, zero), (False, False))


@pytest.mark.parametrize("g", [3, 4, 6])
def test_strip_shape(g):
    s = ay_strip(g)
    lam = s.field.gen()
    lengths = sorted(s.exponents)
    assert lengths == sorted(list(range(g)) * 2)
    assert all(length == lam**e for (_, length), e in zip(s.intervals, s.exponents))
    assert s.side_flip and s.bottom_contracted
    assert StripModel.from_json(s.to_json()) == s


@pytest.mark.parametrize("g", [3, 5])
def test_first_return_matches_textbook_map(g):
    s = ay_strip(g)
    e = first_return(s)
    f, circ = textbook_ay_map(g, float(s.field.gen()))
    assert abs(float(e.circumference) - circ) < 1e-9
    rnd = random.Random(g)
    for _ in range(300):
        q = Fraction(rnd.randrange(1, 10**6), 10**6) * Fraction(int(circ))
        assert abs(float(e(s.field.from_rational(q))) - f(float(q))) < 1e-9


@settings(max_examples=15, deadline=None)
@given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(99, 100)))
def test_first_return_level_independent(level):
    s = ay_strip(3)
    assert first_return(s, level) == first_return(s)


def test_level_must_be_interior():
    with pytest.raises(StripError):
        first_return(ay_strip(3), Fraction(1))


@pytest.mark.parametrize("g", range(3, 7))
def test_exchange_shape(g):
    e = first_return(ay_strip(g))
    assert len(e.lengths) == 2 * g + 1  # one piece is cut at 0
    assert not any(e.flips)
    assert IntervalExchange.from_json(e.to_json()) == e


def test_exchange_rejects_overlap():
    with pytest.raises(StripError):
        IntervalExchange(ONE + ONE, (ONE, ONE), (F3.zero(), F3.zero()), (False, False))
    with pytest.raises(StripError):
        IntervalExchange(ONE + ONE, (ONE, ONE, ONE), (F3.zero(), ONE, ONE), (False,) * 3)


def test_renormalized_strip_scales():
    s = ay_strip(3)
    r = renormalize_strip(s)
    assert r.total_width == s.total_width * LAM.inverse()
    assert r.exponents == tuple(e - 1 for e in s.exponents)


def test_scaling_conjugacy_controls():
    e = first_return(ay_strip(3))
    assert scaling_conjugacy(e, e) == ONE
    rot = rotation(ONE + LAM, LAM)
    assert scaling_conjugacy(e, rot) is None
    # a rotation rescaled is conjugate to itself with that factor
    two = F3.from_rational(2)
    assert scaling_conjugacy(rot, rotation(two * (ONE + LAM), two * LAM)) == two


def test_symmetry_controls():
    with pytest.raises(StripError):
        iet_symmetries(rotation(ONE + LAM, LAM))
    # swapping the halves of [0, 2) and of [2, 4) commutes with the half-turn
    # and with the reflections u -> -u and u -> 2 - u
    q = F3.from_rational
    swap = IntervalExchange(q(4), (ONE,) * 4, (q(1), q(0), q(3), q(2)), (False,) * 4)
    sym = iet_symmetries(swap)
    assert len(sym) == 4
    assert {(s.shift.coords[0], s.reflect) for s in sym} == {(0, False), (2, False), (0, True), (2, True)}


@pytest.mark.parametrize("g", [3, 4])
def test_induction_on_scaled_arc(g):
    e = first_return(ay_strip(g))
    lam = e.field.gen()
    arcs = self_similar_arcs(e, lam.inverse(), first_only=True)
    assert arcs
    induced = induced_exchange(e, arcs[0], e.circumference * lam.inverse())
    assert scaling_conjugacy(e, induced) == lam.inverse()


def test_saf_controls():
    assert saf_invariant(rotation(F3.from_rational(3), ONE)).is_zero()
    w = saf_invariant(rotation(ONE + LAM, LAM))
    assert not w.is_zero()
    assert w.entries[0][1] == 2  # 2 (1 ^ lambda)


@settings(max_examples=10, deadline=None)
@given(
    st.fractions(min_value=0, max_value=Fraction(5, 2), max_denominator=6),
    st.fractions(min_value=Fraction(1, 3), max_value=Fraction(1, 1), max_denominator=6),
)
def test_saf_invariant_under_induction(start, length):
    """Inducing on a sub-arc does not change the SAF invariant."""
    rot = rotation(ONE + LAM, LAM)
    ind = induced_exchange(rot, F3.from_rational(start), F3.from_rational(length))
    assert saf_invariant(ind) == saf_invariant(rot)
    e = first_return(ay_strip(3))
    assert saf_invariant(induced_exchange(e, F3.from_rational(start), F3.from_rational(length))).is_zero()


def test_saf_rejects_flips():
    e = IntervalExchange(ONE, (ONE,), (F3.zero(),), (True,))
    with pytest.raises(StripError):
        saf_invariant(e)


@st.composite
def rational_exchanges(draw):
    n = draw(st.integers(2, 5))
    lengths = [F3.from_rational(draw(st.fractions(min_value=Fraction(1, 5), max_value=3, max_denominator=5))) for _ in range(n)]
    order = draw(st.permutations(range(n)))
    c = F3.zero()
    for ln in lengths:
        c = c + ln
    images = [None] * n
    pos = F3.zero()
    for k in order:
        images[k] = pos
        pos = pos + lengths[k]
    return IntervalExchange(c, tuple(lengths), tuple(images), (False,) * n)


@settings(max_examples=40, deadline=None)
@given(rational_exchanges())
def test_saf_zero_for_rational_exchanges(e):
    assert saf_invariant(e).is_zero()
    assert scaling_conjugacy(e, e) == ONE


def test_renormalize_twice():
    s = ay_strip(4)
    r2 = renormalize_strip(renormalize_strip(s))
    lam = s.field.gen()
    assert r2.total_width == s.total_width * lam.inverse() * lam.inverse()


@pytest.mark.parametrize("g", [3, 5])
def test_scaling_conjugacy_symmetric(g):
    s = ay_strip(g)
    e, r = first_return(s), first_return(renormalize_strip(s))
    lam = s.field.gen()
    assert scaling_conjugacy(e, r) == lam.inverse()
    assert scaling_conjugacy(r, e) == lam
