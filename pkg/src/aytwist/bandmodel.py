"""Explicit model of a Möbius band with g twisted bands attached.

The Möbius band is the strip ``R x [0, 1]`` modulo the deck transformation
``tau(x, y) = (x + 1, 1 - y)``.  Its boundary is one circle, parametrized by
``s`` in ``R / 2Z``: the point ``s`` is represented by ``(s, 0)`` and also by
``tau^-1 (s, 0) = (s - 1, 1)``.  The fundamental domain ``D_m`` is
``[m, m + 1) x [0, 1]``; a path between lifts whose endpoint lies in ``D_m``
winds ``m`` times through the crosscap.

The boundary is cut into ``2g`` slots of width ``1/g``.  Band ``i`` is
attached by a boundary-orientation preserving map (a twisted band) to slots
``2i`` and ``2i + 1``; its core joins the slot centres.  The curve
``c_i = r^{-i}(c)`` runs through band ``i`` and returns along a straight arc
in the strip that crosses the core of the Möbius band once.  Translating the
strip by ``-2/g`` carries band ``i`` to band ``i - 1`` and is the rotation
``r``; it commutes with ``tau``.

Everything is exact (``Fraction``).  This module is the single source of the
figure-level combinatorics: crossing data for :mod:`curveweb`, the order of
the band feet for :mod:`strips`, and the paths used to derive the action on
the fundamental group in :mod:`ayfamily`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .curveweb import Crossing, CurveSystem, SymmetryAction


@dataclass(frozen=True)
class Arc:
    """Straight segment from ``(bottom, 0)`` to ``(top, 1)`` in the strip."""

    bottom: Fraction
    top: Fraction

    def at(self, y: Fraction) -> Fraction:
        return self.bottom + y * (self.top - self.bottom)

    def shifted(self, dx: Fraction) -> "Arc":
        return Arc(self.bottom + dx, self.top + dx)


@dataclass(frozen=True)
class Lift:
    """Image of an arc under ``tau^k``; ``k`` odd reverses its vertical direction."""

    arc: Arc
    k: int

    @property
    def endpoints(self) -> tuple[tuple[Fraction, int], tuple[Fraction, int]]:
        """(x, y) of the image of the arc's start (u = 0) and end (u = 1)."""
        if self.k % 2 == 0:
            return (self.arc.bottom + self.k, 0), (self.arc.top + self.k, 1)
        return (self.arc.bottom + self.k, 1), (self.arc.top + self.k, 0)

    def direction(self) -> tuple[Fraction, int]:
        (x0, y0), (x1, y1) = self.endpoints
        return (x1 - x0, y1 - y0)

    def param_at_height(self, y: Fraction) -> Fraction:
        return y if self.k % 2 == 0 else 1 - y

    def bottom_top(self) -> tuple[Fraction, Fraction]:
        """x-coordinates at heights 0 and 1."""
        (x0, y0), (x1, y1) = self.endpoints
        return (x0, x1) if y0 == 0 else (x1, x0)


def domain_index(x: Fraction) -> int:
    return floor(x)


def _det(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def intersect(arc: Arc, lift: Lift) -> Fraction | None:
    """Height of the transverse crossing of ``arc`` with ``lift`` in the open strip."""
    b1, t1 = arc.bottom, arc.top
    b2, t2 = lift.bottom_top()
    denom = (t1 - b1) - (t2 - b2)
    if denom == 0:
        return None
    y = (b2 - b1) / denom
    if 0 < y < 1:
        return y
    return None


class BandModel:
    """Möbius band with ``g`` twisted bands; see the module docstring."""

    #: which of the two one-pass arcs between adjacent feet the curves use
    ARC_CLASS = 0

    def __init__(self, g: int, arc_class: int | None = None):
        if g < 1:
            raise ValueError("need at least one band")
        self.g = g
        self.arc_class = self.ARC_CLASS if arc_class is None else arc_class
        self.slot = Fraction(1, g)

    # boundary bookkeeping -------------------------------------------------

    def slot_centre(self, m: int) -> Fraction:
        """Boundary parameter of the centre of slot ``m`` (mod 2)."""
        return ((m % (2 * self.g)) + Fraction(1, 2)) * self.slot

    def feet(self, i: int) -> tuple[int, int]:
        """Slots (P, Q) of band ``i``; the curve leaves through P and re-enters through Q."""
        i %= self.g
        return (2 * i, 2 * i + 1)

    def foot_slot_order(self) -> list[tuple[int, str]]:
        """(band, 'P' or 'Q') for slots 0 .. 2g-1 in boundary order."""
        out = []
        for m in range(2 * self.g):
            band, end = divmod(m, 2)
            out.append((band, "PQ"[end]))
        return out

    @staticmethod
    def boundary_point(s: Fraction) -> tuple[Fraction, int]:
        """Representative of boundary point ``s`` in the fundamental domain ``D_0``."""
        s = s % 2
        return (s, 0) if s < 1 else (s - 1, 1)

    # the curves ---------------------------------------------------------

    def arc(self, i: int) -> Arc:
        p, q = self.feet(i)
        sp, sq = self.slot_centre(p), self.slot_centre(q)
        return Arc(sp, sq - 1 + 2 * self.arc_class)

    def lifts(self, i: int, reach: int | None = None) -> list[Lift]:
        reach = 4 if reach is None else reach
        return [Lift(self.arc(i), k) for k in range(-reach, reach + 1)]

    def rotation_shift(self) -> Fraction:
        """Strip translation realising ``r`` (band i -> band i - 1)."""
        return -2 * self.slot

    def curve_system(self) -> CurveSystem:
        """Crossings, cyclic orders and frame bits of ``c_0, ..., c_{g-1}``."""
        g = self.g
        found = []  # (i, j, y_on_i, u_on_j, agree, positive)
        for i in range(g):
            arc_i = self.arc(i)
            d_i = (arc_i.top - arc_i.bottom, 1)
            for j in range(i + 1, g):
                for lift in self.lifts(j):
                    y = intersect(arc_i, lift)
                    if y is None:
                        continue
                    agree = lift.k % 2 == 0
                    positive = _det(d_i, lift.direction()) > 0
                    found.append((i, j, y, lift.param_at_height(y), agree, positive))
        found.sort(key=lambda f: (f[0], f[1], f[2]))
        crossings = []
        along: list[list[tuple[Fraction, int]]] = [[] for _ in range(g)]
        for cid, (i, j, ui, uj, agree, positive) in enumerate(found):
            crossings.append(Crossing(cid, i, j, agree, positive))
            along[i].append((ui, cid))
            along[j].append((uj, cid))
        orders = tuple(tuple(cid for _, cid in sorted(a)) for a in along)
        labels = tuple("c" if i == 0 else f"r^-{i}(c)" for i in range(g))
        return CurveSystem(g, tuple(crossings), orders, (False,) * g, labels)

    def rotation_action(self, cs: CurveSystem) -> SymmetryAction:
        """The relabeling induced by ``r`` on :meth:`curve_system`'s data."""
        g = self.g
        perm = tuple((i - 1) % g for i in range(g))
        # crossings are identified by the unordered curve pair and the rank
        # of the crossing among that pair's crossings along the lower curve
        by_pair: dict = {}
        for c in cs.crossings:
            by_pair.setdefault(frozenset((c.a, c.b)), []).append(c.id)
        cmap = []
        for c in cs.crossings:
            pair = frozenset((c.a, c.b))
            image = frozenset(perm[x] for x in pair)
            src = by_pair[pair]
            dst = by_pair[image]
            if len(src) != len(dst):
                raise ValueError("rotation does not preserve crossing counts")
            pos_src = [cid for cid in cs.orders[min(pair)] if cid in src]
            lower_image = perm[min(pair)]
            pos_dst = [cid for cid in cs.orders[lower_image] if cid in dst]
            cmap.append((c.id, pos_dst[pos_src.index(c.id)]))
        return SymmetryAction(perm, tuple(cmap))
