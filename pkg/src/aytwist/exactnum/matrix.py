"""Exact integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polynomial import IntPolynomial


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "IntMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "IntMatrix":
        """Matrix sending basis vector ``e_j`` to ``e_perm[j]``."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{list(perm)} is not a permutation")
        m = [[0] * n for _ in range(n)]
        for j, i in enumerate(perm):
            m[i][j] = 1
        return cls(m)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def n(self) -> int:
        return len(self.rows)

    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __str__(self):
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else self

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    __mul__ = __matmul__

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = IntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: Sequence):
        """Matrix-vector product; entries of ``v`` can be any ring elements."""
        if len(v) != self.shape[1]:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for a, x in zip(r, v):
                if a:
                    acc = acc + a * x
            out.append(acc)
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)

    def is_positive(self) -> bool:
        return all(x > 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.n
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self) -> "IntMatrix":
        """Inverse of a unimodular matrix; raises if the inverse is not integral."""
        inv = rational_inverse(self)
        if any(x.denominator != 1 for r in inv for x in r):
            raise ValueError("matrix is not invertible over the integers")
        return IntMatrix([[x.numerator for x in r] for r in inv])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "IntMatrix":
        return cls([[int(x) for x in r] for r in data])


def rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.n
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def berkowitz(rows: Sequence[Sequence]) -> list:
    """Coefficients (lowest degree first) of ``det(x I - A)`` without division.

    Works over any commutative ring whose elements support ``+``, ``-`` and ``*``.
    """
    n = len(rows)
    if n == 0:
        return [1]
    a = rows
    # c holds coefficients of det(xI - A_k), highest degree first
    c = [1, -a[0][0]]
    for k in range(1, n):
        row = [a[k][j] for j in range(k)]
        col = [a[i][k] for i in range(k)]
        # first column of the Toeplitz factor: 1, -a_kk, -R C, -R A C, ...
        t = [1, -a[k][k]]
        vec = col
        for _ in range(k):
            t.append(-sum(r * v for r, v in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        c = [sum(t[i - j] * c[j] for j in range(len(c)) if 0 <= i - j < len(t)) for i in range(k + 2)]
    return list(reversed(c))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """``det(x I - m)``, computed exactly by the division-free Berkowitz scheme."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    return IntPolynomial(berkowitz(m.rows))


def is_primitive(m: IntMatrix) -> bool:
    """Whether some power of the nonnegative matrix ``m`` is entrywise positive.

    Powers of the zero pattern are examined up to Wielandt's bound
    ``(n-1)^2 + 1``, which is at most ``n^2``.
    """
    if not m.is_square() or not m.is_nonnegative():
        return False
    n = m.n
    if n == 0:
        return False
    pattern = [[1 if x > 0 else 0 for x in r] for r in m.rows]
    power = pattern
    for _ in range(n * n):
        if all(all(r) for r in power):
            return True
        power = [
            [1 if any(power[i][k] and pattern[k][j] for k in range(n)) else 0 for j in range(n)]
            for i in range(n)
        ]
    return all(all(r) for r in power)
