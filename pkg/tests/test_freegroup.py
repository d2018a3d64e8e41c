import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aytwist.freegroup import (
    FreeGroupAuto,
    are_conjugate,
    cyclic_canonical,
    cyclic_reduce,
    format_word,
    inverse,
    reduce_word,
)
from aytwist.surfacegroup import band_group

letters = st.sampled_from([1, -1, 2, -2, 3, -3])
raw_words = st.lists(letters, max_size=12)


@given(raw_words)
def test_reduce_idempotent(w):
    r = reduce_word(w)
    assert reduce_word(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(raw_words)
def test_inverse_cancels(w):
    assert reduce_word(tuple(w) + inverse(w)) == ()
    assert inverse(inverse(w)) == tuple(w)


@given(raw_words, raw_words)
def test_conjugates_recognised(u, w):
    conj = reduce_word(tuple(u) + tuple(w) + inverse(u))
    assert are_conjugate(conj, w)
    c = cyclic_reduce(w)
    assert not c or c[0] != -c[-1]


@given(raw_words)
def test_canonical_is_rotation_invariant(w):
    c = cyclic_reduce(w)
    for k in range(len(c)):
        assert cyclic_canonical(c[k:] + c[:k]) == cyclic_canonical(c)


def test_conjugacy_distinguishes():
    assert not are_conjugate((1, 2), (1, -2))
    assert are_conjugate((1, 2), (-2, -1), up_to_inversion=True)
    assert not are_conjugate((1, 2), (-2, -1))
    assert format_word((1, 1, -2), ("x", "y0")) == "x^2 y0^-1"


@given(raw_words)
def test_auto_composition(w):
    a = FreeGroupAuto(((1, 2), (2,), (3,)))
    b = FreeGroupAuto(((1,), (2, 3), (3,)))
    assert a.compose(b)(w) == a(b(w))


@pytest.mark.parametrize("g", [3, 4, 6, 7])
def test_surgery_automorphisms(g):
    grp = band_group(g)
    rot, back = grp.rotation_auto(1), grp.rotation_auto(-1)
    assert rot.inverts(back)
    for k in range(g):
        t = grp.twist_auto(k, 1)
        assert t.inverts(grp.twist_auto(k, -1))
        c = grp.curve_word(k)
        assert are_conjugate(t(c), c)  # a twist fixes its own curve
        assert are_conjugate(rot(c), grp.curve_word((k - 1) % g))


@pytest.mark.parametrize("g", [3, 5])
def test_rotation_conjugates_twists(g):
    """r T_k r^-1 and T_{k-1} agree on conjugacy classes of test loops."""
    grp = band_group(g)
    rot, back = grp.rotation_auto(1), grp.rotation_auto(-1)
    loops = [grp.curve_word(k) for k in range(g)] + [(1,), (2,), (1, 2, -3)]
    for k in range(g):
        lhs = rot.compose(grp.twist_auto(k)).compose(back)
        rhs = grp.twist_auto((k - 1) % g)
        for w in loops:
            assert are_conjugate(lhs(w), rhs(w))


def test_curve_words():
    grp = band_group(4)
    assert [format_word(grp.curve_word(k), grp.names) for k in range(4)] == [
        f"x^-1 y{k}^-1" for k in range(4)
    ]
