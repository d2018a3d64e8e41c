"""Fundamental group of the band model and the action of twists and rotation.

The Möbius band cut along the vertical line ``x = 0`` (all lines ``x = m``
in the strip) and each band cut along its cocore leaves a disc, so a loop is
determined up to homotopy by the sequence of cuts it crosses.  Letter ``x``
records crossing a line ``x = m`` in the ``+x`` direction; letter ``y_i``
records passing through band ``i`` from foot P to foot Q.  The base point
sits near height 1/2 inside the disc, nudged off any degenerate position.

Loops are drawn as explicit polygonal paths in the strip, so the images of
generators under a twist are obtained by honest surgery: at every transverse
crossing with the twisting curve a full copy of that curve is spliced in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Sequence, Union

from .bandmodel import BandModel, Lift
from .freegroup import BandWord, FreeGroupAuto, Word, inverse, reduce_word

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    def shifted(self, dx: Fraction) -> "Segment":
        return Segment((self.start[0] + dx, self.start[1]), (self.end[0] + dx, self.end[1]))


@dataclass(frozen=True)
class BandPassage:
    band: int
    forward: bool  # P -> Q


Piece = Union[Segment, BandPassage]


class DegeneratePath(ValueError):
    pass


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _segment_crossing(seg: Segment, lift: Lift) -> tuple[Fraction, Fraction] | None:
    """Parameters (t on seg, u on lift) of a transverse interior crossing."""
    (ax, ay), (bx, by) = seg.start, seg.end
    (cx, cy), (dx, dy) = lift.endpoints
    d1 = (bx - ax, by - ay)
    d2 = (dx - cx, dy - cy)
    den = _det(d1, d2)
    if den == 0:
        return None
    w = (cx - ax, cy - ay)
    t = _det(w, d2) / den
    u = _det(w, d1) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    if 0 <= t <= 1 and 0 <= u <= 1:
        raise DegeneratePath("path meets a curve at an endpoint")
    return None


def _cut_events(seg: Segment) -> list[tuple[Fraction, int]]:
    ax, bx = seg.start[0], seg.end[0]
    if ax == bx:
        return []
    if ax.denominator == 1 or bx.denominator == 1:
        raise DegeneratePath("segment ends on a cut")
    sign = 1 if bx > ax else -1
    lo, hi = min(ax, bx), max(ax, bx)
    return [((m - ax) / (bx - ax), sign) for m in range(floor(lo) + 1, floor(hi) + 1)]


class BandGroup:
    """Cut-letter presentation of the fundamental group of the band model."""

    def __init__(self, model: BandModel):
        self.model = model
        g = model.g
        self.g = g
        self.names = ("x",) + tuple(f"y{i}" for i in range(g))
        self.offset = Fraction(1, 4 * g)  # push-off of loops inside a band
        self.base = self._generic_base()

    def _generic_base(self) -> Point:
        """Base point whose generator loops meet every curve transversally
        away from the cut lines."""
        x0 = Fraction(1, 2) + Fraction(1, 3 * self.g)
        for step in range(64):
            self.base = (x0, Fraction(1, 2) + Fraction(step, 7 * self.g + 1) / 2)
            try:
                for k in range(self.g):
                    for j in range(self.g + 1):
                        self.path_word(self.generator_loop(j), (k, 1))
            except DegeneratePath:
                continue
            return self.base
        raise DegeneratePath("no generic base point found")

    # letters ------------------------------------------------------------

    @staticmethod
    def x_letter(sign: int) -> int:
        return sign

    @staticmethod
    def y_letter(band: int, sign: int) -> int:
        return sign * (band + 2)

    # paths --------------------------------------------------------------

    def foot_point(self, band: int, end: str, offset: Fraction | None = None) -> Point:
        p, q = self.model.feet(band)
        s = self.model.slot_centre(p if end == "P" else q) + (self.offset if offset is None else offset)
        return (s, Fraction(0))

    def base_near(self, pt: Point) -> Point:
        m = floor(pt[0])
        return (self.base[0] + m, self.base[1])

    def generator_loop(self, k: int) -> list[Piece]:
        if k == 0:
            b = self.base
            return [Segment(b, (b[0] + 1, b[1]))]
        band = k - 1
        fp, fq = self.foot_point(band, "P"), self.foot_point(band, "Q")
        return [
            Segment(self.base_near(fp), fp),
            BandPassage(band, True),
            Segment(fq, self.base_near(fq)),
        ]

    def band_core_loop(self, band: int) -> list[Piece]:
        """Core of a band closed up along the boundary arc between its feet."""
        fp, fq = self.foot_point(band, "P"), self.foot_point(band, "Q")
        inner = Fraction(1, 8 * self.g)
        return [
            BandPassage(band, True),
            Segment(fq, (fq[0], inner)),
            Segment((fq[0], inner), (fp[0], inner)),
            Segment((fp[0], inner), fp),
        ]

    def curve_events(self, k: int) -> tuple[list[tuple[Fraction, int]], int]:
        """Cut letters along the arc of c_k (by arc parameter) and the closing band letter."""
        arc = self.model.arc(k)
        seg = Segment((arc.bottom, Fraction(0)), (arc.top, Fraction(1)))
        return _cut_events(seg), self.y_letter(k, -1)

    def curve_word(self, k: int) -> Word:
        events, band = self.curve_events(k)
        return reduce_word([a for _, a in events] + [band])

    def detour(self, k: int, u: Fraction) -> Word:
        """c_k read once around starting from arc parameter ``u``."""
        events, band = self.curve_events(k)
        after = [a for t, a in events if t > u]
        before = [a for t, a in events if t < u]
        return tuple(after + [band] + before)

    def path_word(self, path: Sequence[Piece], twist: tuple[int, int] | None = None) -> Word:
        """Cut word of ``path``; with ``twist = (k, direction)`` the twisted path's word."""
        out: list[int] = []
        reach = 3 + max(
            (int(abs(p.start[0])) + int(abs(p.end[0])) for p in path if isinstance(p, Segment)), default=0
        )
        for piece in path:
            if isinstance(piece, BandPassage):
                out.append(self.y_letter(piece.band, 1 if piece.forward else -1))
                continue
            events: list[tuple[Fraction, Word]] = [(t, (a,)) for t, a in _cut_events(piece)]
            if twist is not None:
                k, direction = twist
                d_seg = (piece.end[0] - piece.start[0], piece.end[1] - piece.start[1])
                for lift in self.model.lifts(k, reach):
                    hit = _segment_crossing(piece, lift)
                    if hit is None:
                        continue
                    t, u = hit
                    # positive twists turn left: follow c_k forward when it
                    # points to the left of the path in c_k's own frame
                    frame = 1 if lift.k % 2 == 0 else -1
                    side = _det(d_seg, lift.direction()) * frame * direction
                    loop = self.detour(k, u)
                    events.append((t, loop if side > 0 else inverse(loop)))
            events.sort(key=lambda e: e[0])
            if len({t for t, _ in events}) != len(events):
                raise DegeneratePath("two events at one point")
            for _, w in events:
                out.extend(w)
        return reduce_word(out)

    def translated(self, path: Sequence[Piece], steps: int) -> list[Piece]:
        """Image of ``path`` under ``r^steps``."""
        dx = steps * self.model.rotation_shift()
        out: list[Piece] = []
        for piece in path:
            if isinstance(piece, Segment):
                out.append(piece.shifted(dx))
            else:
                out.append(BandPassage((piece.band - steps) % self.g, piece.forward))
        return out

    # automorphisms ---------------------------------------------------------

    def twist_auto(self, k: int, direction: int = 1) -> FreeGroupAuto:
        images = tuple(self.path_word(self.generator_loop(j), (k, direction)) for j in range(self.g + 1))
        return FreeGroupAuto(images, self.names)

    def rotation_auto(self, steps: int = 1) -> FreeGroupAuto:
        b = self.base
        connector = Segment(b, (b[0] + steps * self.model.rotation_shift(), b[1]))
        h = self.path_word([connector])
        images = []
        for j in range(self.g + 1):
            moved = self.path_word(self.translated(self.generator_loop(j), steps))
            images.append(reduce_word(h + moved + inverse(h)))
        return FreeGroupAuto(tuple(images), self.names)

    def word_class(self, w: Word) -> BandWord:
        return BandWord.of(w, self.names)


@lru_cache(maxsize=None)
def band_group(g: int) -> BandGroup:
    return BandGroup(BandModel(g))
