"""The Arnoux-Yoccoz family as twist-and-rotate words.

``nonorientable_instance(g)`` is ``f_g = r o T_c`` on the closed surface with
``g + 1`` crosscaps; ``orientable_lift`` builds ``r~ o T_a o T_b^-1`` on the
genus ``g`` orientable double cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bandmodel import BandModel
from .curveweb import (
    Crossing,
    CurveSystem,
    CurveSystemError,
    SurfaceClass,
    SymmetryAction,
    apply_symmetry,
    intersection_matrix,
)
from .exactnum.field import NumberField, min_poly_of
from .exactnum.matrix import IntMatrix, char_poly
from .exactnum.polynomial import IntPolynomial, count_real_roots
from .freegroup import are_conjugate, format_word
from .penner import Sym, Twist, TwistWord, word_action
from .surfacegroup import BandGroup


@dataclass(frozen=True)
class FamilyInstance:
    g: int
    system: CurveSystem
    rotation: SymmetryAction
    word: TwistWord
    expected: SurfaceClass
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    model: BandModel | None = None
    sheets: tuple[tuple[int, int], ...] = ()  # lifted curve -> (downstairs curve, sheet)

    @property
    def orientable(self) -> bool:
        return self.expected.orientable

    def power_word(self) -> TwistWord:
        return self.word ** self.g

    def power_product(self) -> TwistWord:
        """The product of twists the ``g``-th power should equal, leftmost first."""
        twists, _ = self.power_word().push_symmetries()
        return TwistWord(twists)

    def to_document(self) -> dict:
        doc = {
            "schema": "aytwist.family-instance",
            "version": 1,
            "genus": self.g,
            "model": "orientable" if self.orientable else "nonorientable",
            "system": self.system.to_document(),
            "rotation": list(self.rotation.curve_perm),
            "word": self.word.to_json(),
            "word_text": str(self.word),
            "expected_surface": {
                "name": self.expected.name(),
                "euler_characteristic": self.expected.euler_characteristic,
                "orientable": self.expected.orientable,
            },
        }
        if self.partition is not None:
            doc["partition"] = {"A": list(self.partition[0]), "B": list(self.partition[1])}
        return doc


def _require_genus(g: int) -> None:
    if not isinstance(g, int) or g < 3:
        raise ValueError(f"genus must be an integer >= 3, got {g!r}")


def nonorientable_instance(g: int) -> FamilyInstance:
    _require_genus(g)
    model = BandModel(g)
    cs = model.curve_system()
    r = model.rotation_action(cs)
    word = TwistWord([Sym(r), Twist(0, 1)])
    expected = SurfaceClass(1 - g, False)
    return FamilyInstance(g, cs, r, word, expected, None, model)


# --------------------------------------------------------------------------
# orientable double cover


def double_cover(cs: CurveSystem) -> tuple[CurveSystem, tuple[tuple[int, int], ...]]:
    """Orientation double cover of the neighbourhood of two-sided curves.

    The crossing ``v`` lifts to ``(v, +1)`` and ``(v, -1)``, whose frames are
    the frame of ``v`` and its reverse; together they orient the cover.  The
    lift ``(i, sigma)`` of curve ``i`` passes through ``(v, sigma * e)`` where
    ``e`` is the sign of ``i``'s carried frame at ``v``.  Lifted curves carry
    the global orientation, so every lifted crossing has agreeing frames.
    Lift ``(i, +1)`` gets index ``i`` and ``(i, -1)`` index ``n + i``.
    """
    n = cs.curve_count
    if any(cs.one_sided):
        raise CurveSystemError("one-sided curves do not lift to two curves")
    if any(not o for o in cs.orders):
        raise CurveSystemError("crossing-free curves are not supported by the lift")

    def curve_index(i: int, sigma: int) -> int:
        return i if sigma == 1 else n + i

    def crossing_index(v: int, s: int) -> int:
        return 2 * v + (0 if s == 1 else 1)

    crossings = []
    for c in cs.crossings:
        for s in (1, -1):
            ia = curve_index(c.a, s * c.frame_sign(c.a))
            ib = curve_index(c.b, s * c.frame_sign(c.b))
            positive = c.positive if s == 1 else not c.positive
            lifted = Crossing(crossing_index(c.id, s), ia, ib, True, positive)
            if ia > ib:
                lifted = lifted.swapped()
            crossings.append(lifted)
    by_id = cs.by_id
    orders = []
    sheets = []
    for sigma in (1, -1):
        for i in range(n):
            orders.append(tuple(crossing_index(v, sigma * by_id[v].frame_sign(i)) for v in cs.orders[i]))
            sheets.append((i, sigma))
    labels = []
    for sigma, letter in ((1, "a"), (-1, "b")):
        for i in range(n):
            labels.append(letter if i == 0 else f"r^-{i}({letter})")
    lifted = CurveSystem(2 * n, tuple(crossings), tuple(orders), (False,) * (2 * n), tuple(labels))
    return lifted, tuple(sheets)


def lift_symmetry(cs: CurveSystem, s: SymmetryAction) -> SymmetryAction:
    """Orientation-preserving lift of a frame-preserving symmetry."""
    n = cs.curve_count
    perm = s.curve_perm
    cmap = dict(s.crossing_map)
    by_id = cs.by_id
    lifted_perm = tuple(perm[i] if i < n else n + perm[i - n] for i in range(2 * n))
    lifted_map = []
    for c in cs.crossings:
        image = by_id[cmap[c.id]]
        kappa = image.frame_sign(perm[c.a])
        for sheet in (1, -1):
            src = 2 * c.id + (0 if sheet == 1 else 1)
            dst = 2 * image.id + (0 if sheet * kappa == 1 else 1)
            lifted_map.append((src, dst))
    return SymmetryAction(lifted_perm, tuple(lifted_map))


def orientable_lift(inst: FamilyInstance) -> FamilyInstance:
    if inst.orientable or inst.system.curve_count != inst.g:
        raise ValueError("orientable_lift expects a nonorientable family instance")
    g = inst.g
    lifted, sheets = double_cover(inst.system)
    r_lift = lift_symmetry(inst.system, inst.rotation)
    if apply_symmetry(lifted, r_lift) != lifted:
        raise CurveSystemError("the lifted rotation is not a symmetry of the lifted system")
    # T_c turns left in c's carried frame; both lifts turn left in that frame,
    # which is the global orientation on sheet +1 and its reverse on sheet -1
    a, b = 0, g
    word = TwistWord([Sym(r_lift), Twist(a, 1), Twist(b, -1)])
    expected = SurfaceClass(2 - 2 * g, True)
    partition = (tuple(range(g)), tuple(range(g, 2 * g)))
    return FamilyInstance(g, lifted, r_lift, word, expected, partition, inst.model, sheets)


def lifted_sign_choice(inst: FamilyInstance) -> dict:
    """Which lift of c gets the positive twist, decided by lifting T_c.

    The downstairs twist turns left in the frame carried by c.  Sheet
    ``sigma`` carries that frame with sign ``sigma`` relative to the cover's
    orientation, so the lift on sheet +1 is twisted positively and the other
    negatively.  The opposite assignment would lift ``T_c^-1`` instead.
    """
    if not inst.orientable:
        raise ValueError("expects a lifted instance")
    twists = [l for l in inst.word.letters if isinstance(l, Twist)]
    signs = {}
    for t in twists:
        curve, sheet = inst.sheets[t.curve]
        signs[inst.system.labels[t.curve]] = {"downstairs": curve, "sheet": sheet, "direction": t.direction}
    consistent = all(v["sheet"] * 1 == v["direction"] for v in signs.values())
    return {"twists": signs, "consistent_with_lifted_twist": consistent}


def lift_intersection_records(inst: FamilyInstance) -> dict[int, int]:
    """``i(a, r~^j(b))`` for ``j = 0 .. g-1`` on a lifted instance."""
    if not inst.orientable:
        raise ValueError("expects a lifted instance")
    g = inst.g
    m = intersection_matrix(inst.system)
    out = {}
    for j in range(g):
        b_j = inst.rotation.power(j).curve_perm[g]
        out[j] = m[0, b_j]
    return out


# --------------------------------------------------------------------------
# fundamental group check


@dataclass
class CoreCurveReport:
    passed: bool
    gamma: str
    twisted: str
    image: str
    expected: str
    invertible: bool
    opposite_twist_passes: bool
    disjoint_fixed: bool  # each T_k fixes the cores of the other bands

    def to_json(self) -> dict:
        return dict(self.__dict__)


def core_curve_image_check(inst: FamilyInstance) -> CoreCurveReport:
    """Is ``r(T_c(gamma))`` the core of the band carrying ``r(c)``?"""
    if inst.orientable or inst.model is None:
        raise ValueError("core_curve_image_check expects a nonorientable instance")
    G = BandGroup(inst.model)
    twist_letter = next(l for l in inst.word.letters if isinstance(l, Twist))
    sym_letter = next(l for l in inst.word.letters if isinstance(l, Sym))
    twist = G.twist_auto(twist_letter.curve, twist_letter.direction)
    twist_inv = G.twist_auto(twist_letter.curve, -twist_letter.direction)
    rot = G.rotation_auto(sym_letter.power)
    rot_inv = G.rotation_auto(-sym_letter.power)
    invertible = twist.inverts(twist_inv) and rot.inverts(rot_inv)
    if not invertible:
        raise ValueError("free-group automorphism failed its inverse witness")
    gamma = G.path_word(G.generator_loop(0))
    image_curve = sym_letter.action.power(sym_letter.power).curve_perm[twist_letter.curve]
    gamma_prime = G.path_word(G.band_core_loop(image_curve))
    twisted = twist(gamma)
    image = rot(twisted)
    opposite = rot(twist_inv(gamma))
    return CoreCurveReport(
        passed=are_conjugate(image, gamma_prime, up_to_inversion=True),
        gamma=format_word(gamma, G.names),
        twisted=format_word(twisted, G.names),
        image=format_word(image, G.names),
        expected=format_word(gamma_prime, G.names),
        invertible=invertible,
        opposite_twist_passes=are_conjugate(opposite, gamma_prime, up_to_inversion=True),
        disjoint_fixed=_disjoint_cores_fixed(G),
    )


def _disjoint_cores_fixed(G: BandGroup) -> bool:
    cores = [G.path_word(G.band_core_loop(j)) for j in range(G.g)]
    for k in range(G.g):
        t = G.twist_auto(k, 1)
        if not all(are_conjugate(t(w), w) for j, w in enumerate(cores) if j != k):
            return False
    return True


# --------------------------------------------------------------------------
# Galois and inverse checks


def galois_report(g: int) -> dict:
    _require_genus(g)
    field = NumberField.ay(g)
    lam = field.gen()
    mp = min_poly_of(lam)
    mp_inv = min_poly_of(lam.inverse())
    mp_sum = min_poly_of(lam + lam.inverse())
    real_sum = count_real_roots(mp_sum)
    return {
        "genus": g,
        "min_poly": mp.to_json(),
        "min_poly_inverse": mp_inv.to_json(),
        "min_poly_sum": mp_sum.to_json(),
        "min_poly_text": str(mp),
        "min_poly_inverse_text": str(mp_inv),
        "min_poly_sum_text": str(mp_sum),
        "inverse_is_conjugate": mp == mp_inv,
        "sum_degree": mp_sum.degree,
        "sum_real_roots": real_sum,
        "sum_totally_real": real_sum == mp_sum.degree,
        "min_poly_vanishes": mp(lam).is_zero(),
    }


def inverse_relation_check(g: int) -> dict:
    inst = nonorientable_instance(g)
    m = word_action(inst.system, inst.word).matrix
    det = m.det()
    if det not in (1, -1):
        raise ValueError(f"action matrix has determinant {det}")
    m_inv = m.inverse()
    if m @ m_inv != IntMatrix.identity(m.n):  # pragma: no cover
        raise ValueError("inverse check failed")
    cp = char_poly(m)
    cp_inv = char_poly(m_inv)
    reversal = cp.reversed().sign_normalized()
    field = NumberField.ay(g)
    lam_inv = field.gen().inverse()
    annihilates = cp_inv(lam_inv).is_zero()
    # lambda^-1 is the largest real root of the inverse's polynomial inside (0, 1)
    lo, hi = lam_inv.enclosure()
    while hi >= 1 or lo <= 0 or count_real_roots(cp_inv, lo, hi) != 1:
        field._refine_root()
        lo, hi = lam_inv.enclosure()
    none_above = count_real_roots(cp_inv, hi, Fraction(1)) == 0
    ok = cp_inv == reversal and annihilates and none_above
    return {
        "genus": g,
        "determinant": det,
        "char_poly_inverse": cp_inv.to_json(),
        "matches_reversal": cp_inv == reversal,
        "annihilates_inverse_stretch": annihilates,
        "inverse_stretch_is_top_root_below_one": none_above,
        "passed": ok,
    }


def ay_polynomial(g: int) -> IntPolynomial:
    return IntPolynomial.ay_polynomial(g)
