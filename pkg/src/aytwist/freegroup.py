"""Words in a free group, cyclic words, and automorphisms given on generators.

A word is a tuple of nonzero integers: ``k > 0`` is generator ``k - 1`` and
``-k`` its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


def reduce_word(w: Iterable[int]) -> Word:
    out: list[int] = []
    for a in w:
        if a == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(w))


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = reduce_word(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def rotations(w: Sequence[int]) -> list[Word]:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(len(w))] or [()]


def cyclic_canonical(w: Sequence[int]) -> Word:
    """Least rotation of the cyclic reduction, a conjugacy-class representative."""
    return min(rotations(cyclic_reduce(w)))


def are_conjugate(u: Sequence[int], v: Sequence[int], up_to_inversion: bool = False) -> bool:
    cu = cyclic_canonical(u)
    if cu == cyclic_canonical(v):
        return True
    return up_to_inversion and cu == cyclic_canonical(inverse(v))


def format_word(w: Sequence[int], names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = names[abs(w[i]) - 1]
        e = (j - i) * (1 if w[i] > 0 else -1)
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return " ".join(parts)


@dataclass(frozen=True)
class BandWord:
    """Conjugacy class of a loop, stored as its canonical cyclic word."""

    word: Word
    names: tuple[str, ...]

    @classmethod
    def of(cls, w: Sequence[int], names: Sequence[str]) -> "BandWord":
        return cls(cyclic_canonical(w), tuple(names))

    def conjugate_to(self, other: "BandWord", up_to_inversion: bool = True) -> bool:
        return are_conjugate(self.word, other.word, up_to_inversion)

    def __str__(self):
        return format_word(self.word, self.names)


@dataclass(frozen=True)
class FreeGroupAuto:
    """Endomorphism given by the (reduced) image of each generator."""

    images: tuple[Word, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(reduce_word(w) for w in self.images))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(len(self.images))))

    @classmethod
    def identity(cls, rank: int, names: Sequence[str] = ()) -> "FreeGroupAuto":
        return cls(tuple((i + 1,) for i in range(rank)), tuple(names))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, w: Sequence[int]) -> Word:
        out: list[int] = []
        for a in w:
            img = self.images[abs(a) - 1]
            out.extend(img if a > 0 else inverse(img))
        return reduce_word(out)

    def compose(self, inner: "FreeGroupAuto") -> "FreeGroupAuto":
        """``self`` after ``inner``."""
        return FreeGroupAuto(tuple(self(w) for w in inner.images), self.names)

    def is_identity(self) -> bool:
        return all(w == (i + 1,) for i, w in enumerate(self.images))

    def inverts(self, other: "FreeGroupAuto") -> bool:
        """Whether ``self`` and ``other`` compose to the identity in both orders."""
        return self.compose(other).is_identity() and other.compose(self).is_identity()

    def describe(self) -> dict[str, str]:
        return {self.names[i]: format_word(w, self.names) for i, w in enumerate(self.images)}
