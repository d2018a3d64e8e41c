"""Arithmetic in a simple algebraic extension Q(alpha) = Q[x]/(m).

Elements carry rational coordinates in the power basis 1, alpha, ...,
alpha^(d-1).  A :class:`NumberField` may also carry an isolating interval for
a real root of its modulus; that real embedding is what gives elements a sign
and an order, and it is refined lazily when a comparison needs it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .factor import is_irreducible
from .matrix import berkowitz
from .polynomial import (
    IntPolynomial,
    IsolatingInterval,
    divmod_rational,
    largest_real_root,
    squarefree_part,
)


class ModulusMismatch(ValueError):
    pass


class NumberField:
    """Q[x]/(modulus) for a monic irreducible integer polynomial."""

    def __init__(self, modulus: IntPolynomial, root: IsolatingInterval | None = None, check: bool = True):
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError(f"modulus {modulus} must be monic of positive degree")
        if check and not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus} is reducible over Q")
        if root is not None and root.poly != squarefree_part(modulus):
            raise ValueError("embedding interval belongs to another polynomial")
        self.modulus = modulus
        self.degree = modulus.degree
        self._root = root

    @classmethod
    def ay(cls, g: int) -> "NumberField":
        """Q(lambda) for the largest real root lambda of x^g - x^(g-1) - ... - 1."""
        return _ay_field(g)

    @classmethod
    def with_largest_root(cls, modulus: IntPolynomial, check: bool = True) -> "NumberField":
        return cls(modulus, largest_real_root(modulus), check=check)

    @property
    def root(self) -> IsolatingInterval | None:
        return self._root

    def _refine_root(self) -> IsolatingInterval:
        if self._root is None:
            raise ValueError("field has no real embedding; elements cannot be compared")
        if not self._root.is_exact():
            self._root = self._root.bisect()
        return self._root

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.modulus})"

    def element(self, coords: Iterable) -> "FieldElement":
        return FieldElement(self, coords)

    def from_rational(self, q) -> "FieldElement":
        return FieldElement(self, [Fraction(q)] + [0] * (self.degree - 1))

    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(-self.modulus.coeffs[0])
        return FieldElement(self, [0, 1] + [0] * (self.degree - 2))

    def powers(self, n: int) -> list["FieldElement"]:
        """``[1, alpha, ..., alpha^(n-1)]``."""
        out = [self.one()]
        a = self.gen()
        for _ in range(n - 1):
            out.append(out[-1] * a)
        return out

    def reduce(self, coeffs: Sequence) -> list[Fraction]:
        _, r = divmod_rational(coeffs, self.modulus.coeffs)
        return list(r) + [Fraction(0)] * (self.degree - len(r))


@lru_cache(maxsize=None)
def _ay_field(g: int) -> NumberField:
    return NumberField.with_largest_root(IntPolynomial.ay_polynomial(g))


def _interval_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


class FieldElement:
    """Immutable element of a :class:`NumberField`."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Iterable):
        coords = [Fraction(c) for c in coords]
        if len(coords) > field.degree:
            coords = field.reduce(coords)
        coords += [Fraction(0)] * (field.degree - len(coords))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, key, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def modulus(self) -> IntPolynomial:
        return self.field.modulus

    # coercion -------------------------------------------------------------

    def _other(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field.modulus != self.field.modulus:
                raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Inverse by the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        r0, r1 = [Fraction(c) for c in self.modulus.coeffs], _strip(self.coords)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        # invariant: s_i * a == r_i  (mod modulus)
        while len(r1) > 1:
            q, r = divmod_rational(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub(s0, _mul(q, s1))
        c = r1[0]
        return FieldElement(self.field, self.field.reduce([x / c for x in s1]))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field.modulus == other.field.modulus and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.modulus, self.coords))

    def enclosure(self) -> tuple[Fraction, Fraction]:
        """Rational interval containing this element under the field's real embedding."""
        root = self.field.root
        if root is None:
            raise ValueError("field has no real embedding")
        lo, hi = root.lo, root.hi
        acc = (Fraction(0), Fraction(0))
        for c in reversed(self.coords):
            acc = _interval_mul(acc, (lo, hi))
            acc = (acc[0] + c, acc[1] + c)
        return acc

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return (self.coords[0] > 0) - (self.coords[0] < 0)
        while True:
            lo, hi = self.enclosure()
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            root = self.field.root
            if root.is_exact():  # pragma: no cover - irreducible moduli of degree > 1 have irrational roots
                val = lo
                return (val > 0) - (val < 0)
            self.field._refine_root()

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def approx(self, width=Fraction(1, 10**15)) -> Fraction:
        """Rational approximation within ``width`` of the embedded value."""
        while True:
            lo, hi = self.enclosure()
            if hi - lo <= width or self.field.root.is_exact():
                return (lo + hi) / 2
            self.field._refine_root()

    def decimal(self, digits: int = 12) -> str:
        m = self.approx(Fraction(1, 10 ** (digits + 2)))
        scaled = round(m * 10**digits)
        sign = "-" if scaled < 0 else ""
        whole, frac = divmod(abs(scaled), 10**digits)
        return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"

    def __float__(self):
        return float(self.approx())

    # presentation ---------------------------------------------------------

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus.to_json(),
            "coords": [[str(c.numerator), str(c.denominator)] for c in self.coords],
        }

    @classmethod
    def from_json(cls, data, field: NumberField | None = None) -> "FieldElement":
        modulus = IntPolynomial.from_json(data["modulus"])
        if field is None:
            field = NumberField.with_largest_root(modulus)
        elif field.modulus != modulus:
            raise ModulusMismatch("document modulus differs from the supplied field")
        return cls(field, [Fraction(int(n), int(d)) for n, d in data["coords"]])


def _strip(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _strip(x - y for x, y in zip(a, b))


def multiplication_matrix(e: FieldElement) -> list[list[Fraction]]:
    """Matrix of x -> e*x in the power basis (columns are images of basis vectors)."""
    basis = e.field.powers(e.field.degree)
    cols = [(e * b).coords for b in basis]
    d = e.field.degree
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def norm_polynomial(e: FieldElement) -> IntPolynomial:
    """``Res_y(m(y), x - a(y))`` for ``e = a(alpha)``.

    For monic ``m`` this resultant is ``det(x I - [e])`` with ``[e]`` the
    multiplication matrix, which is what is evaluated here.
    """
    poly = berkowitz(multiplication_matrix(e))
    return IntPolynomial.from_rational(poly)


def min_poly_of(e: FieldElement) -> IntPolynomial:
    """Monic minimal polynomial of ``e`` over Q, scaled to a primitive integer polynomial.

    The norm polynomial is a power of the minimal polynomial because the
    modulus is irreducible, so its squarefree part is the answer; the result
    is re-verified by exact evaluation at ``e``.
    """
    norm = norm_polynomial(e)
    candidate = squarefree_part(norm)
    if not candidate_evaluates_to_zero(candidate, e):
        raise ArithmeticError(f"minimal polynomial selection failed for {e}")  # pragma: no cover
    return candidate


def candidate_evaluates_to_zero(p: IntPolynomial, e: FieldElement) -> bool:
    return p(e) == 0


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch ``op`` in {"add", "sub", "mul", "div"}."""
    if not isinstance(b, FieldElement) or a.modulus != b.modulus:
        raise ModulusMismatch("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def mat_apply_field(m, v: Sequence[FieldElement]) -> list[FieldElement]:
    """Exact product of an integer matrix with a vector over a number field."""
    if len(v) != m.shape[1]:
        raise ValueError("dimension mismatch")
    if not v:
        return []
    field = v[0].field
    for x in v:
        if x.modulus != field.modulus:
            raise ModulusMismatch("vector entries live in different fields")
    out = []
    for row in m.rows:
        acc = field.zero()
        for a, x in zip(row, v):
            if a:
                acc = acc + x * a
        out.append(acc)
    return out
