"""Strip model of the unstable foliation and the induced circle exchanges.

Geometry of :class:`StripModel`.  The rectangle ``[0, W] x [0, 1]`` carries
the vertical foliation, with transverse measure the horizontal length.  Its
top edge is cut into labeled intervals and paired intervals are glued (by a
translation or a flip); these gluings are the twisted bands.  With
``side_flip`` set, the rectangle is a Möbius band: a leaf that runs down
from ``x`` re-emerges at ``x + W/2``, the half turn through the crosscap.
The remaining boundary is collapsed to the singular point, so every
interval endpoint is a singular leaf.

The horizontal circle at any interior height is a transversal; following
leaves upward from it through a band and back across the Möbius band gives
its first return map, a circle exchange.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum.field import FieldElement, NumberField


class StripError(ValueError):
    pass


def _mod(x: FieldElement, c: FieldElement) -> FieldElement:
    while x.sign() < 0:
        x = x + c
    while (x - c).sign() >= 0:
        x = x - c
    return x


def _lam_label(e: int) -> str:
    return "1" if e == 0 else ("λ" if e == 1 else f"λ^{e}")


# --------------------------------------------------------------------------
# strips


@dataclass(frozen=True)
class StripModel:
    field: NumberField
    total_width: FieldElement
    intervals: tuple[tuple[str, FieldElement], ...]
    pairings: tuple[tuple[int, int, str], ...]  # (k, m, "translation" | "flip")
    side_flip: bool = True
    bottom_contracted: bool = True
    exponents: tuple[int, ...] = ()  # interval k has length lambda^exponents[k] when AY-shaped

    def __post_init__(self):
        total = self.field.zero()
        for _, length in self.intervals:
            if length.sign() <= 0:
                raise StripError("interval lengths must be positive")
            total = total + length
        if total != self.total_width:
            raise StripError("interval lengths do not sum to the width")
        seen: list[int] = []
        for k, m, kind in self.pairings:
            if kind not in ("translation", "flip"):
                raise StripError(f"unknown pairing kind {kind!r}")
            if self.intervals[k][1] != self.intervals[m][1]:
                raise StripError("paired intervals have different lengths")
            seen += [k, m]
        if sorted(seen) != list(range(len(self.intervals))):
            raise StripError("pairings must match every interval exactly once")

    def starts(self) -> list[FieldElement]:
        out, acc = [], self.field.zero()
        for _, length in self.intervals:
            out.append(acc)
            acc = acc + length
        return out

    def partner(self, k: int) -> tuple[int, str]:
        for a, b, kind in self.pairings:
            if a == k:
                return b, kind
            if b == k:
                return a, kind
        raise StripError(f"interval {k} is unpaired")  # pragma: no cover

    def to_json(self) -> dict:
        return {
            "schema": "aytwist.strip",
            "version": 1,
            "modulus": self.field.modulus.to_json(),
            "total_width": self.total_width.to_json(),
            "intervals": [{"label": lab, "length": ln.to_json()} for lab, ln in self.intervals],
            "pairings": [{"a": a, "b": b, "kind": kind} for a, b, kind in self.pairings],
            "side_flip": self.side_flip,
            "bottom_contracted": self.bottom_contracted,
            "exponents": list(self.exponents),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "StripModel":
        from .exactnum.polynomial import IntPolynomial

        if doc.get("schema") != "aytwist.strip" or doc.get("version") != 1:
            raise StripError("not a version 1 strip document")
        field = NumberField.with_largest_root(IntPolynomial.from_json(doc["modulus"]))
        el = lambda d: FieldElement.from_json(d, field)  # noqa: E731
        return cls(
            field,
            el(doc["total_width"]),
            tuple((i["label"], el(i["length"])) for i in doc["intervals"]),
            tuple((p["a"], p["b"], p["kind"]) for p in doc["pairings"]),
            doc["side_flip"],
            doc["bottom_contracted"],
            tuple(doc["exponents"]),
        )


def ay_strip(g: int) -> StripModel:
    """Band ``i`` has width ``lambda^i``; its feet are adjacent top intervals in
    band order, matching the slot order of :class:`~aytwist.bandmodel.BandModel`."""
    if g < 3:
        raise StripError("genus must be at least 3")
    from .bandmodel import BandModel

    field = NumberField.ay(g)
    powers = field.powers(g)
    order = BandModel(g).foot_slot_order()
    intervals = []
    exponents = []
    position: dict = {}
    for slot, (band, end) in enumerate(order):
        intervals.append((_lam_label(band), powers[band]))
        exponents.append(band)
        position[(band, end)] = slot
    pairings = tuple((position[(i, "P")], position[(i, "Q")], "translation") for i in range(g))
    total = field.zero()
    for p in powers:
        total = total + p + p
    return StripModel(field, total, tuple(intervals), pairings, True, True, tuple(exponents))


def renormalize_strip(s: StripModel) -> StripModel:
    """The strip rescaled by ``lambda^-1``; lengths stay powers of lambda with
    every exponent lowered by one (so ``1`` becomes ``lambda^-1``)."""
    if not s.exponents or len(s.exponents) != len(s.intervals):
        raise StripError("renormalize_strip needs an AY-shaped strip")
    lam = s.field.gen()
    for (_, length), e in zip(s.intervals, s.exponents):
        if length != lam**e:
            raise StripError("renormalize_strip needs an AY-shaped strip")
    inv = lam.inverse()
    intervals = tuple((_lam_label(e - 1), length * inv) for (_, length), e in zip(s.intervals, s.exponents))
    return StripModel(
        s.field,
        s.total_width * inv,
        intervals,
        s.pairings,
        s.side_flip,
        s.bottom_contracted,
        tuple(e - 1 for e in s.exponents),
    )


# --------------------------------------------------------------------------
# circle exchanges


@dataclass(frozen=True)
class IntervalExchange:
    """Piecewise isometry of the circle ``[0, C)`` cut into consecutive pieces
    from 0; piece ``k`` lands on ``[images[k], images[k] + lengths[k])``
    (reversed when ``flips[k]``)."""

    circumference: FieldElement
    lengths: tuple[FieldElement, ...]
    images: tuple[FieldElement, ...]
    flips: tuple[bool, ...]

    def __post_init__(self):
        if not self.lengths:
            raise StripError("empty exchange")
        if len(self.images) != len(self.lengths) or len(self.flips) != len(self.lengths):
            raise StripError("ragged exchange data")
        total = self.circumference.field.zero()
        for ln in self.lengths:
            if ln.sign() <= 0:
                raise StripError("lengths must be positive")
            total = total + ln
        if total != self.circumference:
            raise StripError("lengths do not sum to the circumference")
        if not self.is_bijection():
            raise StripError("images do not tile the circle")

    @property
    def field(self) -> NumberField:
        return self.circumference.field

    def starts(self) -> list[FieldElement]:
        out, acc = [], self.field.zero()
        for ln in self.lengths:
            out.append(acc)
            acc = acc + ln
        return out

    def is_bijection(self) -> bool:
        """Images, cut at 0, tile ``[0, C)`` with no gaps or overlaps."""
        c = self.circumference
        arcs = []
        for im, ln in zip(self.images, self.lengths):
            lo = _mod(im, c)
            hi = lo + ln
            if (hi - c).sign() > 0:
                arcs += [(lo, c), (self.field.zero(), hi - c)]
            else:
                arcs.append((lo, hi))
        arcs.sort(key=lambda a: a[0].approx())
        # approx sorting is refined by exact comparison of neighbours
        arcs = _exact_sort(arcs)
        pos = self.field.zero()
        for lo, hi in arcs:
            if lo != pos:
                return False
            pos = hi
        return pos == c

    @property
    def permutation(self) -> tuple[int, ...]:
        """Rank of each piece's image start along the circle."""
        order = _exact_sort([(_mod(im, self.circumference), k) for k, im in enumerate(self.images)])
        rank = [0] * len(order)
        for r, (_, k) in enumerate(order):
            rank[k] = r
        return tuple(rank)

    def translations(self) -> list[FieldElement]:
        return [im - st for im, st in zip(self.images, self.starts())]

    def __call__(self, u: FieldElement) -> FieldElement:
        u = _mod(u, self.circumference)
        for st, ln, im, fl in zip(self.starts(), self.lengths, self.images, self.flips):
            if (u - st).sign() >= 0 and (u - st - ln).sign() < 0:
                off = u - st
                return _mod(im + ln - off if fl else im + off, self.circumference)
        raise StripError("point outside the circle")  # pragma: no cover

    def pieces(self) -> list[tuple[FieldElement, FieldElement, FieldElement, bool]]:
        return list(zip(self.starts(), self.lengths, self.images, self.flips))

    def to_json(self) -> dict:
        return {
            "schema": "aytwist.iet",
            "version": 1,
            "modulus": self.field.modulus.to_json(),
            "circumference": self.circumference.to_json(),
            "lengths": [x.to_json() for x in self.lengths],
            "images": [x.to_json() for x in self.images],
            "flips": list(self.flips),
            "permutation": list(self.permutation),
            "translations": [x.to_json() for x in self.translations()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "IntervalExchange":
        from .exactnum.polynomial import IntPolynomial

        if doc.get("schema") != "aytwist.iet" or doc.get("version") != 1:
            raise StripError("not a version 1 exchange document")
        field = NumberField.with_largest_root(IntPolynomial.from_json(doc["modulus"]))
        el = lambda d: FieldElement.from_json(d, field)  # noqa: E731
        return cls(
            el(doc["circumference"]),
            tuple(el(x) for x in doc["lengths"]),
            tuple(el(x) for x in doc["images"]),
            tuple(bool(f) for f in doc["flips"]),
        )


def _exact_sort(items: list) -> list:
    """Sort by the first entry (a field element) with exact comparisons."""
    from functools import cmp_to_key

    return sorted(items, key=cmp_to_key(lambda a, b: (a[0] - b[0]).sign()))


def exchange_from_pieces(circumference: FieldElement, pieces: Sequence[tuple]) -> IntervalExchange:
    """Build an exchange from ``(start, length, image, flip)`` pieces covering the
    circle, cutting at 0 and splitting pieces whose image wraps past 0 (or
    whose domain does)."""
    c = circumference
    zero = c.field.zero()
    split = []
    for st, ln, im, fl in pieces:
        st = _mod(st, c)
        im = _mod(im, c)
        queue = [(st, ln, im)]
        while queue:
            s0, l0, i0 = queue.pop()
            if (s0 + l0 - c).sign() > 0:  # domain wraps
                first = c - s0
                i_first = i0 if not fl else _mod(i0 + l0 - first, c)
                i_rest = _mod(i0 + first, c) if not fl else i0
                queue += [(s0, first, i_first), (zero, l0 - first, i_rest)]
                continue
            if (i0 + l0 - c).sign() > 0:  # image wraps
                first = c - i0
                if not fl:
                    queue += [(s0, first, i0), (s0 + first, l0 - first, zero)]
                else:
                    queue += [(s0 + l0 - first, first, i0), (s0, l0 - first, zero)]
                continue
            split.append((s0, l0, i0, fl))
    split = _exact_sort(split)
    return IntervalExchange(c, tuple(p[1] for p in split), tuple(p[2] for p in split), tuple(p[3] for p in split))


def first_return(s: StripModel, level: Fraction = Fraction(1, 2)) -> IntervalExchange:
    """First return of the upward vertical flow to the horizontal circle at ``level``."""
    level = Fraction(level)
    if not 0 < level < 1:
        raise StripError("level must lie strictly between bottom and top")
    w = s.total_width
    half = w * Fraction(1, 2) if s.side_flip else w.field.zero()
    starts = s.starts()
    pieces = []
    for k, (_, length) in enumerate(s.intervals):
        m, kind = s.partner(k)
        # the leaf through (x, level) climbs to the top edge at x, leaves the
        # partner interval downward and, when the sides are flipped, comes
        # back up on the far side of the crosscap; none of this depends on level
        image = starts[m] + half
        pieces.append((starts[k], length, image, kind == "flip"))
    return exchange_from_pieces(w, pieces)


# --------------------------------------------------------------------------
# circle-canonical form, conjugacies and symmetries


@dataclass(frozen=True)
class _Arc:
    lo: FieldElement
    length: FieldElement
    image_lo: FieldElement  # image of the left end (limit from inside)
    flip: bool


def continuity_arcs(e: IntervalExchange) -> list[_Arc]:
    """Maximal arcs of continuity of ``e`` as a circle map, starting at a breakpoint."""
    c = e.circumference
    arcs = []
    for st, ln, im, fl in e.pieces():
        arcs.append(_Arc(st, ln, _mod(im + ln, c) if fl else im, fl))

    def right_image(a: _Arc) -> FieldElement:
        return _mod(a.image_lo - a.length if a.flip else a.image_lo + a.length, c)

    merged = [arcs[0]]
    for a in arcs[1:]:
        prev = merged[-1]
        if prev.flip == a.flip and right_image(prev) == a.image_lo:
            merged[-1] = _Arc(prev.lo, prev.length + a.length, prev.image_lo, prev.flip)
        else:
            merged.append(a)
    if len(merged) > 1:
        last, first = merged[-1], merged[0]
        if last.flip == first.flip and right_image(last) == first.image_lo:
            merged[0] = _Arc(last.lo, last.length + first.length, last.image_lo, last.flip)
            merged.pop()
    return merged


def _conjugated_arcs(arcs: list[_Arc], c: FieldElement, scale: FieldElement, shift: FieldElement, reflect: bool) -> list[_Arc]:
    """Arcs of ``h e h^-1`` for ``h(u) = shift + scale*u`` (or ``shift - scale*u``)."""
    cc = c * scale
    out = []
    for a in arcs:
        if not reflect:
            out.append(_Arc(_mod(shift + a.lo * scale, cc), a.length * scale, _mod(shift + a.image_lo * scale, cc), a.flip))
        else:
            right = a.image_lo - a.length if a.flip else a.image_lo + a.length
            out.append(
                _Arc(
                    _mod(shift - (a.lo + a.length) * scale, cc),
                    a.length * scale,
                    _mod(shift - right * scale, cc),
                    a.flip,
                )
            )
    return _exact_sort_arcs(out)


def _exact_sort_arcs(arcs: list[_Arc]) -> list[_Arc]:
    return [t[2] for t in _exact_sort([(a.lo, i, a) for i, a in enumerate(arcs)])]


def _same_arcs(xs: list[_Arc], ys: list[_Arc]) -> bool:
    if len(xs) != len(ys):
        return False
    return all(
        x.lo == y.lo and x.length == y.length and x.image_lo == y.image_lo and x.flip == y.flip for x, y in zip(xs, ys)
    )


@dataclass(frozen=True)
class CircleSymmetry:
    """``u -> shift + u`` or ``u -> shift - u`` on the circle."""

    shift: FieldElement
    reflect: bool

    def is_identity(self) -> bool:
        return not self.reflect and self.shift.is_zero()

    def to_json(self) -> dict:
        return {"shift": self.shift.to_json(), "reflect": self.reflect}


def _alignments(e1: IntervalExchange, e2: IntervalExchange, scale: FieldElement):
    a1 = continuity_arcs(e1)
    a2 = _exact_sort_arcs(continuity_arcs(e2))
    c1 = e1.circumference
    target = a2[0].lo
    for reflect in (False, True):
        for a in a1:
            # send a breakpoint of e1 (left end for rotations, right end for
            # reflections) onto the first breakpoint of e2
            edge = a.lo if not reflect else a.lo + a.length
            shift = _mod(target + edge * scale, c1 * scale) if reflect else _mod(target - edge * scale, c1 * scale)
            conj = _conjugated_arcs(a1, c1, scale, shift, reflect)
            if _same_arcs(conj, a2):
                yield CircleSymmetry(shift, reflect)


def scaling_conjugacy(e1: IntervalExchange, e2: IntervalExchange) -> FieldElement | None:
    """The factor ``s`` with ``e2 = h e1 h^-1`` for some ``h(u) = t +- s*u``, or None."""
    if e1.field != e2.field:
        return None
    scale = e2.circumference / e1.circumference
    for _ in _alignments(e1, e2, scale):
        return scale
    return None


def iet_symmetries(e: IntervalExchange) -> list[CircleSymmetry]:
    """Rotations and reflections of the circle commuting with ``e``.

    A commuting isometry permutes the discontinuities, so aligning
    breakpoints finds all of them once ``e`` has a discontinuity.
    """
    arcs = continuity_arcs(e)
    if len(arcs) == 1 and not arcs[0].flip and _mod(arcs[0].image_lo + arcs[0].length, e.circumference) == arcs[0].image_lo:
        raise StripError("a rotation commutes with every rotation; no finite symmetry list")
    one = e.field.one()
    found = list(_alignments(e, e, one))
    # the search aligns breakpoints; the identity is always among the results
    unique: list[CircleSymmetry] = []
    for s in found:
        if not any(s.reflect == u.reflect and s.shift == u.shift for u in unique):
            unique.append(s)
    return unique


def induced_exchange(
    e: IntervalExchange, start: FieldElement, length: FieldElement, max_steps: int = 100_000
) -> IntervalExchange:
    """First return map of a flip-free ``e`` to the arc ``[start, start + length)``,
    in coordinates where the arc is ``[0, length)``."""
    if any(e.flips):
        raise StripError("induction is implemented for flip-free exchanges")
    c = e.circumference
    zero = c.field.zero()
    pieces_e = e.pieces()

    def smaller(x, y):
        return x if (x - y).sign() <= 0 else y

    def piece_at(x):
        for st, ln, im, _ in pieces_e:
            if (x - st).sign() >= 0 and (x - st - ln).sign() < 0:
                return st, ln, im
        raise StripError("point outside the circle")  # pragma: no cover

    done = []  # (relative domain start, length, relative image start)
    active = [(zero, length, _mod(start, c))]  # (relative domain start, length, circle position)
    steps = 0
    while active:
        steps += 1
        if steps > max_steps:
            raise StripError("induction did not terminate")
        d0, ln, pos = active.pop()
        st, pl, im = piece_at(pos)
        room = st + pl - pos
        if (ln - room).sign() > 0:
            active += [(d0, room, pos), (d0 + room, ln - room, _mod(st + pl, c))]
            continue
        r = _mod(im + (pos - st) - start, c)
        # cut the image at the arc's ends; inside parts have returned
        while ln.sign() > 0:
            if (r - length).sign() < 0:
                take = smaller(ln, length - r)
                done.append((d0, take, r))
            else:
                take = smaller(ln, c - r)
                active.append((d0, take, _mod(start + r, c)))
            d0, ln, r = d0 + take, ln - take, r + take
            if r == c:
                r = zero
    return exchange_from_pieces(length, [(d, ln, r, False) for d, ln, r in done])


# --------------------------------------------------------------------------
# SAF


@dataclass(frozen=True)
class WedgeMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i in range(n):
            for j in range(n):
                if self.entries[i][j] != -self.entries[j][i]:
                    raise StripError("wedge matrix must be antisymmetric")

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def to_json(self) -> list[list[list[int]]]:
        return [[[x.numerator, x.denominator] for x in r] for r in self.entries]

    @classmethod
    def wedge(cls, p: Sequence[Fraction], q: Sequence[Fraction]) -> "WedgeMatrix":
        n = len(p)
        return cls(tuple(tuple(p[i] * q[j] - q[i] * p[j] for j in range(n)) for i in range(n)))

    def __add__(self, other: "WedgeMatrix") -> "WedgeMatrix":
        return WedgeMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))


def saf_invariant(e: IntervalExchange) -> WedgeMatrix:
    """``sum length_k ^ translation_k`` for the exchange cut open at 0."""
    if any(e.flips):
        raise StripError("the SAF invariant is defined for flip-free exchanges")
    n = e.field.modulus.degree
    total = WedgeMatrix(tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n)))
    for ln, t in zip(e.lengths, e.translations()):
        total = total + WedgeMatrix.wedge(ln.coords, t.coords)
    return total


def self_similar_arcs(e: IntervalExchange, scale: FieldElement, first_only: bool = False) -> list[FieldElement]:
    """Breakpoints ``p`` such that the map induced on ``[p, p + scale*C)`` is
    conjugate to ``e`` scaled by ``scale``."""
    length = e.circumference * scale
    out = []
    for arc in continuity_arcs(e):
        try:
            induced = induced_exchange(e, arc.lo, length)
        except StripError:
            continue
        s = scaling_conjugacy(e, induced)
        if s is not None and s == scale:
            out.append(arc.lo)
            if first_only:
                break
    return out
