"""Twist/rotation actions on the cone of curve measures, Penner's conditions,
and exact Perron-Frobenius data.

Conventions.  Matrices act on column vectors indexed by the curves of a
:class:`~aytwist.curveweb.CurveSystem`.  The twist about curve ``k`` sends
the basis vector of curve ``j`` to ``e_j + i(c_k, c_j) e_k``.  A symmetry
sends ``e_j`` to ``e_{perm[j]}``.  Words compose right to left: the last
letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .curveweb import (
    CurveSystem,
    CurveSystemError,
    SurfaceClass,
    SymmetryAction,
    cap_surface,
    intersection_matrix,
    orientation_assignment,
    ribbon_graph,
)
from .exactnum.factor import factor_list
from .exactnum.field import FieldElement, NumberField, mat_apply_field
from .exactnum.matrix import IntMatrix, char_poly, is_primitive
from .exactnum.polynomial import (
    IntPolynomial,
    IsolatingInterval,
    count_real_roots,
    isolate_real_roots,
    squarefree_part,
)


class WordError(ValueError):
    pass


class PFError(ValueError):
    pass


@dataclass(frozen=True)
class Twist:
    curve: int
    direction: int = 1

    def __post_init__(self):
        if self.direction not in (1, -1):
            raise WordError("twist direction must be +1 or -1")

    def __str__(self):
        return f"T{self.curve}" + ("" if self.direction == 1 else "^-1")


@dataclass(frozen=True)
class Sym:
    action: SymmetryAction
    power: int = 1
    name: str = "r"

    def __post_init__(self):
        object.__setattr__(self, "power", self.power % self.action.order_label)

    def __str__(self):
        return self.name if self.power == 1 else f"{self.name}^{self.power}"


Letter = Union[Twist, Sym]


@dataclass(frozen=True)
class TwistWord:
    letters: tuple[Letter, ...] = ()

    def __init__(self, letters: Sequence[Letter] = ()):
        object.__setattr__(self, "letters", tuple(letters))

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "TwistWord":
        if k < 0:
            raise WordError("negative powers of words are not represented")
        return TwistWord(self.letters * k)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " o ".join(str(l) for l in self.letters) if self.letters else "id"

    def twists(self) -> list[Twist]:
        return [l for l in self.letters if isinstance(l, Twist)]

    def push_symmetries(self) -> tuple[list[Twist], tuple[int, ...]]:
        """Rewrite as ``T_{k1} o ... o T_{kn} o S`` using ``S T_k S^-1 = T_{S(k)}``.

        Returns the twists (about the moved curves) and the curve permutation
        of the residual symmetry ``S``.  Symmetries are assumed to carry each
        curve's frame to the frame of its image.
        """
        perm: tuple[int, ...] | None = None
        out = []
        for l in self.letters:
            if isinstance(l, Sym):
                p = l.action.power(l.power).curve_perm
                perm = p if perm is None else tuple(perm[p[i]] for i in range(len(p)))
            else:
                k = l.curve if perm is None else perm[l.curve]
                out.append(Twist(k, l.direction))
        return out, perm if perm is not None else ()

    def to_json(self) -> list:
        out = []
        for l in self.letters:
            if isinstance(l, Twist):
                out.append({"twist": l.curve, "direction": l.direction})
            else:
                out.append({"symmetry": l.name, "power": l.power})
        return out


@dataclass(frozen=True)
class ActionMatrix:
    matrix: IntMatrix
    word: TwistWord
    basis: tuple[str, ...]


def twist_matrix(cs: CurveSystem, k: int, direction: int = 1) -> IntMatrix:
    """Cone action of the twist about curve ``k`` (direction-independent)."""
    if not 0 <= k < cs.curve_count:
        raise WordError(f"curve index {k} out of range")
    if direction not in (1, -1):
        raise WordError("twist direction must be +1 or -1")
    inter = intersection_matrix(cs)
    rows = [list(r) for r in IntMatrix.identity(cs.curve_count).rows]
    for j in range(cs.curve_count):
        rows[k][j] += inter[k, j]
    return IntMatrix(rows)


def letter_matrix(cs: CurveSystem, letter: Letter) -> IntMatrix:
    if isinstance(letter, Twist):
        return twist_matrix(cs, letter.curve, letter.direction)
    if isinstance(letter, Sym):
        if len(letter.action.curve_perm) != cs.curve_count:
            raise WordError("symmetry letter acts on a different curve count")
        return letter.action.power(letter.power).matrix()
    raise WordError(f"unknown letter {letter!r}")


def word_action(cs: CurveSystem, w: TwistWord) -> ActionMatrix:
    m = IntMatrix.identity(cs.curve_count)
    for letter in w.letters:
        m = m @ letter_matrix(cs, letter)
    return ActionMatrix(m, w, cs.labels)


# --------------------------------------------------------------------------
# Penner's conditions


@dataclass
class PennerReport:
    intersections: bool
    sign_discipline: bool
    orientation: bool
    surface: bool
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.intersections and self.sign_discipline and self.orientation and self.surface

    def to_json(self) -> dict:
        return {
            "intersections": self.intersections,
            "sign_discipline": self.sign_discipline,
            "orientation": self.orientation,
            "surface": self.surface,
            "verdict": self.verdict,
            "details": self.details,
        }


def curve_frame_signs(cs: CurveSystem) -> tuple[int, ...] | None:
    """For an orientable neighbourhood: sign of each curve's carried frame
    relative to one global orientation, or None when nonorientable."""
    rg = ribbon_graph(cs)
    vertex_of = rg.vertex_of
    adj: dict = {v: [] for v in rg.rotation}
    for d1, d2, t in rg.edges:
        adj[vertex_of[d1]].append((vertex_of[d2], t))
        adj[vertex_of[d2]].append((vertex_of[d1], t))
    flip: dict = {}
    for start in adj:
        if start in flip:
            continue
        flip[start] = False
        stack = [start]
        while stack:
            u = stack.pop()
            for w, t in adj[u]:
                want = flip[u] ^ t
                if w not in flip:
                    flip[w] = want
                    stack.append(w)
                elif flip[w] != want:
                    return None
    signs = []
    by_id = cs.by_id
    for i, order in enumerate(cs.orders):
        if not order:
            signs.append(-1 if flip[("free", i)] else 1)
            continue
        v = order[0]
        s = by_id[v].frame_sign(i) * (-1 if flip[v] else 1)
        signs.append(s)
    return tuple(signs)


def penner_check(
    cs: CurveSystem,
    partition: tuple[Sequence[int], Sequence[int]] | None = None,
    word: TwistWord | None = None,
    expected: SurfaceClass | None = None,
) -> PennerReport:
    """Check the hypotheses of Penner's construction for the twists in ``word``.

    Without a partition the system is treated as a single family on a
    (possibly nonorientable) surface: every pair of curves must cross,
    neighbourhood orientations must disagree at every crossing, and each
    twist must be positive for the chosen neighbourhood orientations.  With
    a partition ``(A, B)`` the curves of A (and of B) must be pairwise
    disjoint, and twists are positive on A and negative on B.  In both cases
    the capped neighbourhood must be a closed surface of the expected type,
    i.e. the curves fill.
    """
    n = cs.curve_count
    inter = intersection_matrix(cs)
    details: dict = {}
    if word is None:
        twists = [Twist(i) for i in range(n)]
    else:
        twists, _ = word.push_symmetries()

    if partition is None:
        pairs = [inter[i, j] for i in range(n) for j in range(i + 1, n)]
        intersections = all(x >= 1 for x in pairs)
        details["pairs_cross_exactly_once"] = all(x == 1 for x in pairs)
        signs = orientation_assignment(cs)
        orientation = signs is not None
        details["orientation_assignment"] = list(signs) if signs else None
        if signs is None:
            sign_discipline = False
        else:
            effective = {t.direction * signs[t.curve] for t in twists}
            sign_discipline = len(effective) <= 1
    else:
        a_set, b_set = set(partition[0]), set(partition[1])
        if a_set & b_set or a_set | b_set != set(range(n)):
            raise CurveSystemError("partition must split the curves into two disjoint families")
        intersections = all(
            inter[i, j] == 0 for fam in (a_set, b_set) for i in fam for j in fam if i != j
        )
        frames = curve_frame_signs(cs)
        orientation = frames is not None
        details["curve_frame_signs"] = list(frames) if frames else None
        if frames is None:
            sign_discipline = False
        else:
            signs_seen = set()
            for t in twists:
                eff = t.direction * frames[t.curve]
                want = 1 if t.curve in a_set else -1
                signs_seen.add(eff * want)
            sign_discipline = len(signs_seen) <= 1
    try:
        surf = cap_surface(cs)
        details["capped_surface"] = {
            "euler_characteristic": surf.euler_characteristic,
            "orientable": surf.orientable,
            "faces": surf.faces,
        }
        if expected is None:
            surface = True
        else:
            surface = (
                surf.euler_characteristic == expected.euler_characteristic
                and surf.orientable == expected.orientable
            )
    except CurveSystemError as exc:
        details["capped_surface"] = str(exc)
        surface = False
    details["twisted_curves"] = sorted({t.curve for t in twists})
    return PennerReport(intersections, sign_discipline, orientation, surface, details)


# --------------------------------------------------------------------------
# Perron-Frobenius


@dataclass(frozen=True)
class PFData:
    char_poly: IntPolynomial
    min_poly: IntPolynomial
    interval: IsolatingInterval
    field: NumberField
    eigenvalue: FieldElement
    eigenvector: tuple[FieldElement, ...]

    def to_json(self, digits: int = 12) -> dict:
        return {
            "char_poly": self.char_poly.to_json(),
            "min_poly": self.min_poly.to_json(),
            "interval": self.interval.to_json(),
            "eigenvalue_decimal": self.interval.decimal(digits),
            "eigenvector": [v.to_json() for v in self.eigenvector],
        }


def _kernel_vector(rows: list[list[FieldElement]]) -> list[FieldElement]:
    """Nonzero kernel vector of a corank-one square matrix over a number field."""
    n = len(rows)
    a = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and not a[i][col].is_zero():
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise PFError(f"eigenspace has dimension {len(free)}")
    zero = rows[0][0].field.zero()
    one = rows[0][0].field.one()
    v = [zero] * n
    v[free[0]] = one
    for i, col in enumerate(pivots):
        v[col] = -a[i][free[0]]
    return v


def pf_analysis(m: ActionMatrix | IntMatrix) -> PFData:
    matrix = m.matrix if isinstance(m, ActionMatrix) else m
    if not matrix.is_square():
        raise PFError("non-square matrix")
    if not is_primitive(matrix):
        raise PFError("matrix is not primitive (no power is entrywise positive)")
    cp = char_poly(matrix)
    sf = squarefree_part(cp)
    top = isolate_real_roots(sf)[-1]
    factors = factor_list(cp)
    chosen = None
    for f, mult in factors:
        if f.degree == 0:
            continue
        if top.is_exact():
            hit = f(top.lo) == 0
        else:
            hit = count_real_roots(f, top.lo, top.hi) == 1
        if hit:
            chosen = (f, mult)
            break
    if chosen is None:  # pragma: no cover - the factors cover every root
        raise PFError("no factor vanishes at the leading root")
    min_poly, mult = chosen
    if mult != 1:
        raise PFError(f"Perron-Frobenius eigenvalue has multiplicity {mult}")
    roots = isolate_real_roots(min_poly)
    interval = roots[-1]
    field = NumberField(min_poly, interval, check=False)
    lam = field.gen()
    n = matrix.n
    shifted = [
        [field.from_rational(matrix[i, j]) - (lam if i == j else 0) for j in range(n)] for i in range(n)
    ]
    v = _kernel_vector(shifted)
    first = next(x for x in v if not x.is_zero())
    if v[0].is_zero():
        raise PFError("eigenvector has zero first coordinate")
    v = [x / v[0] for x in v]
    if mat_apply_field(matrix, v) != [lam * x for x in v]:
        raise PFError("eigenvector check failed")  # pragma: no cover
    del first
    return PFData(cp, min_poly, interval, field, lam, tuple(v))


def conjugacy_invariants(w1: TwistWord, w2: TwistWord, cs: CurveSystem, symmetry: SymmetryAction | None = None) -> dict:
    """Look for ``P = perm(s^k)`` with ``P M1 P^-1 = M2``; compare characteristic polynomials."""
    m1 = word_action(cs, w1).matrix
    m2 = word_action(cs, w2).matrix
    conjugator = None
    if symmetry is None:
        if m1 == m2:
            conjugator = 0
    else:
        for k in range(symmetry.order_label):
            p = symmetry.power(k).matrix()
            if p @ m1 @ p.transpose() == m2:
                conjugator = k
                break
    cp1, cp2 = char_poly(m1), char_poly(m2)
    return {
        "conjugator_power": conjugator,
        "conjugate_by_symmetry": conjugator is not None,
        "char_poly_equal": cp1 == cp2,
        "char_poly": cp1.to_json(),
    }
