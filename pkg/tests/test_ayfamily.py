import pytest

from aytwist.ayfamily import (
    core_curve_image_check,
    double_cover,
    galois_report,
    inverse_relation_check,
    lift_intersection_records,
    lifted_sign_choice,
    nonorientable_instance,
    orientable_lift,
)
from aytwist.curveweb import (
    Crossing,
    CurveSystem,
    CurveSystemError,
    cap_surface,
    intersection_matrix,
    neighbourhood_surface,
)
from aytwist.exactnum import IntMatrix, IntPolynomial, char_poly
from aytwist.penner import word_action

from oracles import sympy_char_poly


@pytest.mark.parametrize("g", [-1, 0, 1, 2])
def test_small_genus_rejected(g):
    with pytest.raises(ValueError):
        nonorientable_instance(g)


def test_instance_document():
    doc = nonorientable_instance(3).to_document()
    assert doc["schema"] == "aytwist.family-instance"
    assert doc["word_text"] == "r o T0"
    assert doc["expected_surface"] == {"name": "N_4", "euler_characteristic": -2, "orientable": False}


@pytest.mark.parametrize("g", range(3, 7))
def test_lift_covers_downstairs(g):
    inst = nonorientable_instance(g)
    lift = orientable_lift(inst)
    down = word_action(inst.system, inst.word).matrix
    up = word_action(lift.system, lift.word).matrix
    # summing the two sheets intertwines the actions
    push = IntMatrix([[int(j % g == k) for j in range(2 * g)] for k in range(g)])
    assert push @ up == down @ push
    deck = IntMatrix.permutation([(j + g) % (2 * g) for j in range(2 * g)])
    assert deck @ up == up @ deck
    # a double cover doubles the Euler characteristic of the neighbourhood
    assert neighbourhood_surface(lift.system).euler_characteristic == 2 * neighbourhood_surface(inst.system).euler_characteristic
    assert IntPolynomial(sympy_char_poly(up.rows)) == char_poly(up)


@pytest.mark.parametrize("g", range(3, 9))
def test_lift_records(g):
    lift = orientable_lift(nonorientable_instance(g))
    rec = lift_intersection_records(lift)
    # only i(a, b) = 0 is asserted; the other counts are reported by the lift check
    assert rec[0] == 0 and set(rec) == set(range(g))
    choice = lifted_sign_choice(lift)
    assert choice["consistent_with_lifted_twist"]
    assert {v["sheet"] for v in choice["twists"].values()} == {1, -1}


def test_lift_requires_two_sided():
    cs = CurveSystem(2, (Crossing(0, 0, 1, True, True),), ((0,), (0,)), (True, False))
    with pytest.raises(CurveSystemError):
        double_cover(cs)
    with pytest.raises(ValueError):
        orientable_lift(orientable_lift(nonorientable_instance(3)))


def test_lift_surface_g3():
    lift = orientable_lift(nonorientable_instance(3))
    s = cap_surface(lift.system)
    assert s.name() == "S_3"  # chi = 2 - 2g
    m = intersection_matrix(lift.system)
    assert m[0, 3] == 0


@pytest.mark.parametrize("g", range(3, 9))
def test_core_curve(g):
    rep = core_curve_image_check(nonorientable_instance(g))
    assert rep.passed and rep.invertible and rep.disjoint_fixed
    assert not rep.opposite_twist_passes


def test_core_curve_words_g3():
    rep = core_curve_image_check(nonorientable_instance(3))
    assert rep.gamma == "x"
    assert rep.expected.count("y2") == 1


def test_galois_g3():
    rep = galois_report(3)
    assert rep["min_poly_text"] == "x^3 - x^2 - x - 1"
    assert rep["min_poly_inverse_text"] == "x^3 + x^2 + x - 1"
    assert rep["min_poly_sum_text"] == "x^3 - 4*x - 4"
    assert rep["sum_real_roots"] == 1 and not rep["sum_totally_real"]


@pytest.mark.parametrize("g", range(3, 9))
def test_galois_sum_not_totally_real(g):
    rep = galois_report(g)
    assert not rep["inverse_is_conjugate"]
    assert rep["sum_real_roots"] < rep["sum_degree"]


@pytest.mark.parametrize("g", range(3, 9))
def test_inverse_relation(g):
    rep = inverse_relation_check(g)
    assert rep["passed"] and abs(rep["determinant"]) == 1


@pytest.mark.parametrize("g", [3, 4, 5])
def test_alternative_sign_assignment(g):
    """The swapped A/B signs lift the inverse twist: the curve-image
    criterion rejects the opposite twist downstairs, and the inverse's
    polynomial is the one annihilating lambda^-1."""
    from dataclasses import replace

    from aytwist.penner import Sym, Twist, TwistWord

    inst = nonorientable_instance(g)
    lift = orientable_lift(inst)
    alt = replace(lift, word=TwistWord([Sym(lift.rotation), Twist(0, -1), Twist(g, 1)]))
    assert not lifted_sign_choice(alt)["consistent_with_lifted_twist"]
    assert not core_curve_image_check(inst).opposite_twist_passes
    assert inverse_relation_check(g)["annihilates_inverse_stretch"]


@pytest.mark.parametrize("g", [3, 4, 6])
def test_twist_moves_only_the_core_it_crosses(g):
    from aytwist.freegroup import are_conjugate
    from aytwist.surfacegroup import BandGroup

    G = BandGroup(nonorientable_instance(g).model)
    cores = [G.path_word(G.band_core_loop(j)) for j in range(g)]
    for k in range(g):
        t = G.twist_auto(k, 1)
        fixed = [are_conjugate(t(w), w) for w in cores]
        assert fixed == [j != k for j in range(g)]
