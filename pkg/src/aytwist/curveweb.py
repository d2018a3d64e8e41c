"""Combinatorial systems of closed curves on surfaces.

A :class:`CurveSystem` records, for every curve, the cyclic sequence of
crossings met along it, and for every crossing two bits measured in the
local frame of its first strand ``a``:

* ``positive`` -- the strand ``b`` crosses ``a`` from right to left, i.e.
  (direction of a, direction of b) is a positive frame;
* ``agree`` -- the frame carried along ``b`` agrees with the frame carried
  along ``a`` at this point.

Each curve carries a frame along itself; a one-sided curve's frame comes
back reversed, which is recorded on the edge that closes the curve up.
Together this is a ribbon graph with twisted edges, enough to rebuild the
regular neighbourhood of the union of the curves and to cap it off.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .exactnum.matrix import IntMatrix


class CurveSystemError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    id: int
    a: int
    b: int
    agree: bool
    positive: bool

    def other(self, curve: int) -> int:
        return self.b if curve == self.a else self.a

    def frame_sign(self, curve: int) -> int:
        """Sign of ``curve``'s carried frame relative to the crossing frame (that of ``a``)."""
        if curve == self.a:
            return 1
        return 1 if self.agree else -1

    def swapped(self) -> "Crossing":
        """The same crossing described from the frame of strand ``b``."""
        # in b's frame det(b, a) = -det(a, b) * (frame sign of b)
        positive = (not self.positive) if self.agree else self.positive
        return Crossing(self.id, self.b, self.a, self.agree, positive)


@dataclass(frozen=True)
class CurveSystem:
    curve_count: int
    crossings: tuple[Crossing, ...]
    orders: tuple[tuple[int, ...], ...]
    one_sided: tuple[bool, ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.id)))
        object.__setattr__(self, "orders", tuple(tuple(o) for o in self.orders))
        if not self.one_sided:
            object.__setattr__(self, "one_sided", (False,) * self.curve_count)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"c{i}" for i in range(self.curve_count)))
        self.validate()

    def validate(self) -> None:
        n = self.curve_count
        if len(self.orders) != n or len(self.one_sided) != n or len(self.labels) != n:
            raise CurveSystemError("per-curve data has the wrong length")
        ids = [c.id for c in self.crossings]
        if len(set(ids)) != len(ids):
            raise CurveSystemError("duplicate crossing id")
        for c in self.crossings:
            if not (0 <= c.a < n and 0 <= c.b < n):
                raise CurveSystemError(f"crossing {c.id} refers to a missing curve")
            if c.a == c.b:
                raise CurveSystemError(f"crossing {c.id} is a self-crossing")
        for i, order in enumerate(self.orders):
            counts = Counter(order)
            for cid, k in counts.items():
                if k != 1:
                    raise CurveSystemError(f"crossing {cid} repeated along curve {i}")
            expected = {c.id for c in self.crossings if i in (c.a, c.b)}
            if set(order) != expected:
                raise CurveSystemError(f"cyclic order of curve {i} does not match its crossings")

    @property
    def by_id(self) -> dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    def crossings_between(self, i: int, j: int) -> list[Crossing]:
        return [c for c in self.crossings if {c.a, c.b} == {i, j}]

    # interchange ----------------------------------------------------------

    def to_document(self) -> dict:
        return {
            "schema": "aytwist.curve-system",
            "version": 1,
            "curve_count": self.curve_count,
            "curves": [
                {"label": self.labels[i], "one_sided": self.one_sided[i], "order": list(self.orders[i])}
                for i in range(self.curve_count)
            ],
            "crossings": [
                {"id": c.id, "a": c.a, "b": c.b, "agree": c.agree, "positive": c.positive}
                for c in self.crossings
            ],
        }

    @classmethod
    def from_document(cls, doc: Mapping) -> "CurveSystem":
        if doc.get("schema") != "aytwist.curve-system":
            raise CurveSystemError("not a curve-system document")
        if doc.get("version") != 1:
            raise CurveSystemError(f"unsupported curve-system version {doc.get('version')}")
        curves = doc["curves"]
        return cls(
            curve_count=int(doc["curve_count"]),
            crossings=tuple(
                Crossing(int(c["id"]), int(c["a"]), int(c["b"]), bool(c["agree"]), bool(c["positive"]))
                for c in doc["crossings"]
            ),
            orders=tuple(tuple(int(x) for x in c["order"]) for c in curves),
            one_sided=tuple(bool(c["one_sided"]) for c in curves),
            labels=tuple(str(c["label"]) for c in curves),
        )


# --------------------------------------------------------------------------
# ribbon graph of the union of the curves


@dataclass
class RibbonGraph:
    """Vertices with counterclockwise dart rotations and edges with twist bits."""

    rotation: dict = field(default_factory=dict)  # vertex -> list of darts (ccw)
    edges: list = field(default_factory=list)  # (dart, dart, twisted)

    @property
    def vertex_of(self) -> dict:
        return {d: v for v, ds in self.rotation.items() for d in ds}


def ribbon_graph(cs: CurveSystem) -> RibbonGraph:
    """Thickened union of the curves; crossing-free curves get a 2-valent vertex."""
    rg = RibbonGraph()
    by_id = cs.by_id
    for c in cs.crossings:
        bdir = 1 if c.positive else -1
        rg.rotation[c.id] = [(c.id, c.a, 1), (c.id, c.b, bdir), (c.id, c.a, -1), (c.id, c.b, -bdir)]
    for i, order in enumerate(cs.orders):
        if not order:
            v = ("free", i)
            rg.rotation[v] = [(v, i, 1), (v, i, -1)]
            rg.edges.append(((v, i, 1), (v, i, -1), cs.one_sided[i]))
            continue
        k = len(order)
        for m in range(k):
            u, w = order[m], order[(m + 1) % k]
            twisted = by_id[u].frame_sign(i) != by_id[w].frame_sign(i)
            if m == k - 1 and cs.one_sided[i]:
                twisted = not twisted
            rg.edges.append(((u, i, 1), (w, i, -1), twisted))
    return rg


def _connected(rg: RibbonGraph) -> bool:
    vertex_of = rg.vertex_of
    adj: dict = {v: set() for v in rg.rotation}
    for d1, d2, _ in rg.edges:
        adj[vertex_of[d1]].add(vertex_of[d2])
        adj[vertex_of[d2]].add(vertex_of[d1])
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(adj)


def boundary_components(rg: RibbonGraph) -> int:
    """Count boundary circles of the thickened graph.

    Corners sit between consecutive darts; each edge glues the corners on its
    two sides to corners at its other end, crosswise unless it is twisted.
    """
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    left, right = {}, {}
    for v, darts in rg.rotation.items():
        k = len(darts)
        for idx, d in enumerate(darts):
            parent[(v, idx)] = (v, idx)
            left[d] = (v, idx)
            right[d] = (v, (idx - 1) % k)
    for d1, d2, twisted in rg.edges:
        if twisted:
            union(left[d1], left[d2])
            union(right[d1], right[d2])
        else:
            union(left[d1], right[d2])
            union(right[d1], left[d2])
    return len({find(x) for x in parent})


def _orientable(rg: RibbonGraph) -> bool:
    vertex_of = rg.vertex_of
    adj: dict = {v: [] for v in rg.rotation}
    for d1, d2, twisted in rg.edges:
        u, w = vertex_of[d1], vertex_of[d2]
        adj[u].append((w, twisted))
        adj[w].append((u, twisted))
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
                    return False
    return True


@dataclass(frozen=True)
class SurfaceClass:
    euler_characteristic: int
    orientable: bool
    boundary_components: int = 0
    vertices: int = 0
    edges: int = 0
    faces: int = 0

    @property
    def genus(self) -> int:
        """Orientable genus, or number of crosscaps for nonorientable surfaces."""
        chi = self.euler_characteristic + self.boundary_components
        return (2 - chi) // 2 if self.orientable else 2 - chi

    def name(self) -> str:
        return f"S_{self.genus}" if self.orientable else f"N_{self.genus}"


def cap_surface(cs: CurveSystem) -> SurfaceClass:
    """Closed surface obtained by gluing a disc to every boundary circle of the
    neighbourhood of the curves."""
    rg = ribbon_graph(cs)
    if not _connected(rg):
        raise CurveSystemError("the union of the curves is disconnected")
    f = boundary_components(rg)
    v = len(rg.rotation)
    e = len(rg.edges)
    return SurfaceClass(v - e + f, _orientable(rg), 0, v, e, f)


def neighbourhood_surface(cs: CurveSystem) -> SurfaceClass:
    """The bounded regular neighbourhood itself (no caps)."""
    rg = ribbon_graph(cs)
    f = boundary_components(rg)
    v = len(rg.rotation)
    e = len(rg.edges)
    return SurfaceClass(v - e, _orientable(rg), f, v, e, 0)


def intersection_matrix(cs: CurveSystem) -> IntMatrix:
    n = cs.curve_count
    m = [[0] * n for _ in range(n)]
    for c in cs.crossings:
        m[c.a][c.b] += 1
        m[c.b][c.a] += 1
    return IntMatrix(m)


def orientation_constraints(cs: CurveSystem) -> list[tuple[int, int, bool]]:
    """(i, j, same) meaning the neighbourhood signs of curves i and j must be equal iff ``same``."""
    # at a crossing the two neighbourhoods disagree iff o_a == -o_b * sign_b,
    # so the signs are equal exactly when the carried frames disagree
    return [(c.a, c.b, not c.agree) for c in cs.crossings]


def orientation_assignment(cs: CurveSystem) -> tuple[int, ...] | None:
    """Signs o_i (relative to each curve's carried frame) such that the two
    neighbourhood orientations disagree at every crossing, or None."""
    n = cs.curve_count
    adj: dict[int, list[tuple[int, bool]]] = {i: [] for i in range(n)}
    for i, j, same in orientation_constraints(cs):
        adj[i].append((j, same))
        adj[j].append((i, same))
    sign: dict[int, int] = {}
    for start in range(n):
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for w, same in adj[u]:
                want = sign[u] if same else -sign[u]
                if w not in sign:
                    sign[w] = want
                    stack.append(w)
                elif sign[w] != want:
                    return None
    return tuple(sign[i] for i in range(n))


def verify_disagreement(cs: CurveSystem, signs: Sequence[int]) -> bool:
    for c in cs.crossings:
        if signs[c.a] != -signs[c.b] * c.frame_sign(c.b):
            return False
    return True


def brute_force_orientation_assignments(cs: CurveSystem) -> list[tuple[int, ...]]:
    return [s for s in product((1, -1), repeat=cs.curve_count) if verify_disagreement(cs, s)]


# --------------------------------------------------------------------------
# symmetries


@dataclass(frozen=True)
class SymmetryAction:
    """Relabeling: curve i -> curve_perm[i], crossing id -> crossing_map[id];
    the image of curve i's order is rotated left by offsets[i]."""

    curve_perm: tuple[int, ...]
    crossing_map: tuple[tuple[int, int], ...]
    offsets: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curve_perm", tuple(self.curve_perm))
        object.__setattr__(self, "crossing_map", tuple(sorted(tuple(p) for p in self.crossing_map)))
        if not self.offsets:
            object.__setattr__(self, "offsets", (0,) * len(self.curve_perm))
        if sorted(self.curve_perm) != list(range(len(self.curve_perm))):
            raise CurveSystemError("curve_perm is not a permutation")
        targets = [b for _, b in self.crossing_map]
        if len(set(targets)) != len(targets):
            raise CurveSystemError("crossing_map is not injective")

    @classmethod
    def identity(cls, cs: CurveSystem) -> "SymmetryAction":
        return cls(tuple(range(cs.curve_count)), tuple((c.id, c.id) for c in cs.crossings))

    @property
    def order_label(self) -> int:
        n = len(self.curve_perm)
        p = list(range(n))
        k = 0
        while True:
            p = [self.curve_perm[x] for x in p]
            k += 1
            if p == list(range(n)):
                return k

    def compose(self, other: "SymmetryAction") -> "SymmetryAction":
        """``self`` after ``other``; offsets are only combined when both are zero."""
        if any(self.offsets) or any(other.offsets):
            raise CurveSystemError("composition of actions with order offsets is not supported")
        cm_self = dict(self.crossing_map)
        cm = tuple((a, cm_self[b]) for a, b in other.crossing_map)
        perm = tuple(self.curve_perm[other.curve_perm[i]] for i in range(len(self.curve_perm)))
        return SymmetryAction(perm, cm)

    def power(self, k: int) -> "SymmetryAction":
        n = len(self.curve_perm)
        k %= self.order_label
        result = SymmetryAction(tuple(range(n)), tuple((a, a) for a, _ in self.crossing_map))
        for _ in range(k):
            result = self.compose(result)
        return result

    def matrix(self) -> IntMatrix:
        """Permutation matrix sending the basis vector of curve i to that of its image."""
        return IntMatrix.permutation(self.curve_perm)


def apply_symmetry(cs: CurveSystem, s: SymmetryAction) -> CurveSystem:
    n = cs.curve_count
    if len(s.curve_perm) != n:
        raise CurveSystemError("symmetry acts on a different number of curves")
    cmap = dict(s.crossing_map)
    if set(cmap) != {c.id for c in cs.crossings}:
        raise CurveSystemError("crossing_map does not cover the crossings")
    perm = s.curve_perm
    crossings = []
    for c in cs.crossings:
        moved = Crossing(cmap[c.id], perm[c.a], perm[c.b], c.agree, c.positive)
        if moved.a > moved.b:
            moved = moved.swapped()
        crossings.append(moved)
    orders: list = [None] * n
    one_sided: list = [None] * n
    labels: list = [None] * n
    for i in range(n):
        o = [cmap[x] for x in cs.orders[i]]
        k = s.offsets[i] % len(o) if o else 0
        orders[perm[i]] = tuple(o[k:] + o[:k])
        one_sided[perm[i]] = cs.one_sided[i]
        labels[perm[i]] = cs.labels[perm[i]]
    return CurveSystem(n, tuple(crossings), tuple(orders), tuple(one_sided), tuple(labels))


def normalized(cs: CurveSystem) -> CurveSystem:
    """Same system with every crossing described from its lower-indexed strand."""
    fixed = tuple(c.swapped() if c.a > c.b else c for c in cs.crossings)
    return CurveSystem(cs.curve_count, fixed, cs.orders, cs.one_sided, cs.labels)
