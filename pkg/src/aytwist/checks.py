"""Named verification checks, one genus at a time, used by ``aytwist verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .ayfamily import (
    core_curve_image_check,
    galois_report,
    inverse_relation_check,
    lift_intersection_records,
    nonorientable_instance,
    orientable_lift,
)
from .curveweb import cap_surface, intersection_matrix, orientation_assignment, verify_disagreement
from .exactnum.field import NumberField, mat_apply_field
from .exactnum.matrix import IntMatrix, char_poly
from .exactnum.polynomial import IntPolynomial, count_real_roots, largest_real_root
from .penner import Sym, Twist, TwistWord, conjugacy_invariants, penner_check, pf_analysis, word_action
from .strips import (
    ay_strip,
    first_return,
    iet_symmetries,
    renormalize_strip,
    saf_invariant,
    scaling_conjugacy,
    self_similar_arcs,
)


@dataclass
class CheckResult:
    name: str
    genus: int
    passed: bool
    data: dict = field(default_factory=dict)
    decimals: dict = field(default_factory=dict)  # key in data -> decimal rendering

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "genus": self.genus,
            "verdict": "pass" if self.passed else "fail",
            "data": self.data,
            "decimals": self.decimals,
        }


def companion_matrix(p: IntPolynomial) -> IntMatrix:
    """Shift rows above a last row holding ``-p_0, ..., -p_{n-1}`` (``p`` monic)."""
    n = p.degree
    rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    rows.append([-p[j] for j in range(n)])
    return IntMatrix(rows)


def _f_matrix(g: int):
    inst = nonorientable_instance(g)
    return inst, word_action(inst.system, inst.word).matrix


def check_companion(g: int, precision: int = 12) -> CheckResult:
    _, m = _f_matrix(g)
    expected = companion_matrix(IntPolynomial.ay_polynomial(g))
    return CheckResult("companion", g, m == expected, {"matrix": m.to_json()})


def check_char_poly(g: int, precision: int = 12) -> CheckResult:
    _, m = _f_matrix(g)
    cp = char_poly(m)
    return CheckResult("char_poly", g, cp == IntPolynomial.ay_polynomial(g), {"char_poly": cp.to_json(), "text": str(cp)})


def check_eigenvector(g: int, precision: int = 12) -> CheckResult:
    _, m = _f_matrix(g)
    field = NumberField.ay(g)
    lam = field.gen()
    v = field.powers(g)
    residual = [a - lam * b for a, b in zip(mat_apply_field(m, v), v)]
    pf = pf_analysis(m)
    same = pf.min_poly == field.modulus and [x.coords for x in pf.eigenvector] == [x.coords for x in v]
    return CheckResult(
        "eigenvector",
        g,
        all(r.is_zero() for r in residual) and same,
        {"eigenvector": [x.to_json() for x in pf.eigenvector], "pf": pf.to_json(precision)},
        {"pf.eigenvalue_decimal": pf.interval.decimal(precision)},
    )


def check_stretch(g: int, precision: int = 12) -> CheckResult:
    poly = IntPolynomial.ay_polynomial(g)
    root = largest_real_root(poly)
    # the isolated root lies in (1, hi] exactly when (1, hi] holds a root
    above_one = poly(1) != 0 and count_real_roots(poly, Fraction(1) if root.lo < 1 else root.lo, root.hi) == 1
    ok = root.certify() and above_one
    return CheckResult("stretch", g, ok, {"interval": root.refine(Fraction(1, 10 ** (precision + 2))).to_json()}, {"interval": root.decimal(precision)})


def check_power_identity(g: int, precision: int = 12) -> CheckResult:
    inst = nonorientable_instance(g)
    lift = orientable_lift(inst)
    out = {}
    ok = True
    for name, fi in (("nonorientable", inst), ("orientable", lift)):
        lhs = word_action(fi.system, fi.power_word()).matrix
        product = fi.power_product()
        rhs = word_action(fi.system, product).matrix
        out[name] = {"product": str(product), "equal": lhs == rhs}
        ok &= lhs == rhs
    # the nonorientable product must be T_{r^-(g-1)(c)} o ... o T_c
    expected = TwistWord([Twist(k) for k in reversed(range(g))])
    ok &= str(inst.power_product()) == str(expected)
    # and the lifted one T_{r^-(g-1)(a)} o T_{r^-(g-1)(b)}^-1 o ... o T_a o T_b^-1
    pairs = []
    for k in reversed(range(g)):
        pairs += [Twist(k, 1), Twist(g + k, -1)]
    ok &= str(lift.power_product()) == str(TwistWord(pairs))
    return CheckResult("power_identity", g, ok, out)


def check_penner(g: int, precision: int = 12) -> CheckResult:
    inst = nonorientable_instance(g)
    cs = inst.system
    m = intersection_matrix(cs)
    all_ones = all(m[i, j] == (0 if i == j else 1) for i in range(g) for j in range(g))
    signs = orientation_assignment(cs)
    surf = cap_surface(cs)
    report = penner_check(cs, word=inst.power_word(), expected=inst.expected)
    ok = (
        all_ones
        and signs is not None
        and verify_disagreement(cs, signs)
        and surf.euler_characteristic == 1 - g
        and not surf.orientable
        and report.verdict
    )
    return CheckResult("penner", g, ok, {"report": report.to_json(), "surface": surf.name()})


def check_lift(g: int, precision: int = 12) -> CheckResult:
    inst = nonorientable_instance(g)
    lift = orientable_lift(inst)
    cs = lift.system
    m = intersection_matrix(cs)
    a_set, b_set = lift.partition
    blocks_zero = all(m[i, j] == 0 for fam in (a_set, b_set) for i in fam for j in fam)
    surf = cap_surface(cs)
    cp = char_poly(word_action(cs, lift.word).matrix)
    divisible = IntPolynomial.ay_polynomial(g).divides(cp)
    report = penner_check(cs, partition=lift.partition, word=lift.power_word(), expected=lift.expected)
    ok = (
        cs.curve_count == 2 * g
        and blocks_zero
        and m[0, g] == 0
        and surf.orientable
        and surf.euler_characteristic == 2 - 2 * g
        and divisible
        and report.verdict
    )
    return CheckResult(
        "lift",
        g,
        ok,
        {
            "curves": cs.curve_count,
            "surface": surf.name(),
            "char_poly": cp.to_json(),
            "i(a, r^j(b))": {str(k): v for k, v in lift_intersection_records(lift).items()},
            "penner": report.to_json(),
        },
    )


def check_core_curve(g: int, precision: int = 12) -> CheckResult:
    rep = core_curve_image_check(nonorientable_instance(g))
    return CheckResult("core_curve", g, rep.passed and rep.disjoint_fixed and not rep.opposite_twist_passes, rep.to_json())


def _ay_exchange(g: int):
    s = ay_strip(g)
    return s, first_return(s)


def check_self_similarity(g: int, precision: int = 12) -> CheckResult:
    s, e = _ay_exchange(g)
    r = first_return(renormalize_strip(s))
    scale = scaling_conjugacy(e, r)
    lam_inv = s.field.gen().inverse()
    data = {"scale": scale.to_json() if scale is not None else None}
    dec = {"scale": scale.decimal(precision)} if scale is not None else {}
    return CheckResult("self_similarity", g, scale is not None and scale == lam_inv, data, dec)


def check_induction(g: int, precision: int = 12) -> CheckResult:
    s, e = _ay_exchange(g)
    arcs = self_similar_arcs(e, s.field.gen().inverse(), first_only=True)
    return CheckResult("induction", g, bool(arcs), {"arc_starts": [a.to_json() for a in arcs]})


def check_symmetry_free(g: int, precision: int = 12) -> CheckResult:
    _, e = _ay_exchange(g)
    sym = iet_symmetries(e)
    ok = len(sym) == 1 and sym[0].is_identity()
    return CheckResult("symmetry_free", g, ok, {"symmetries": [x.to_json() for x in sym]})


def check_saf(g: int, precision: int = 12) -> CheckResult:
    _, e = _ay_exchange(g)
    w = saf_invariant(e)
    return CheckResult("saf", g, w.is_zero(), {"saf": w.to_json(), "pieces": len(e.lengths)})


def check_galois(g: int, precision: int = 12) -> CheckResult:
    rep = galois_report(g)
    ok = not rep["inverse_is_conjugate"] and rep["min_poly_vanishes"]
    if g == 3:
        ok &= not rep["sum_totally_real"]
    return CheckResult("galois", g, ok, rep)


def check_conjugation(g: int, precision: int = 12) -> CheckResult:
    inst = nonorientable_instance(g)
    r = inst.rotation
    fwd = word_action(inst.system, TwistWord([Sym(r, 1), Twist(0)])).matrix
    back = word_action(inst.system, TwistWord([Sym(r, -1), Twist(0)])).matrix
    same_cp = char_poly(fwd) == char_poly(back)
    lift = orientable_lift(inst)
    rl = lift.rotation
    w = lift.word
    rotated = TwistWord(list(w.letters[1:]) + [w.letters[0]])
    rep = conjugacy_invariants(w, rotated, lift.system, rl)
    # r^-1 (r T_a T_b^-1) r = T_a T_b^-1 r  <=>  P^-1 M P = M'  with P = perm(r)
    p = rl.matrix()
    m = word_action(lift.system, w).matrix
    m_rot = word_action(lift.system, rotated).matrix
    explicit = p.transpose() @ m @ p == m_rot
    ok = same_cp and rep["conjugate_by_symmetry"] and rep["char_poly_equal"] and explicit
    return CheckResult("conjugation", g, ok, {"rotation_direction_char_poly_equal": same_cp, "orientable": rep, "explicit_conjugator": explicit})


def check_inverse(g: int, precision: int = 12) -> CheckResult:
    rep = inverse_relation_check(g)
    return CheckResult("inverse", g, rep["passed"], rep)


REGISTRY: dict[str, Callable[..., CheckResult]] = {
    "companion": check_companion,
    "char_poly": check_char_poly,
    "eigenvector": check_eigenvector,
    "stretch": check_stretch,
    "power_identity": check_power_identity,
    "penner": check_penner,
    "lift": check_lift,
    "core_curve": check_core_curve,
    "self_similarity": check_self_similarity,
    "induction": check_induction,
    "symmetry_free": check_symmetry_free,
    "saf": check_saf,
    "galois": check_galois,
    "conjugation": check_conjugation,
    "inverse": check_inverse,
}

#: run by ``verify`` when no ``--checks`` are given; ``induction`` is slow
DEFAULT_CHECKS = tuple(k for k in REGISTRY if k != "induction")


def run_check(name: str, g: int, precision: int = 12) -> CheckResult:
    return REGISTRY[name](g, precision)
