"""Integer polynomials, Sturm sequences and real root isolation.

Polynomials are stored lowest degree first.  Intermediate computations that
need division (remainders, gcds) run over the rationals and are scaled back
to primitive integer polynomials, always by a *positive* factor so that sign
information used by Sturm sequences is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", tuple(_trim(cs)))

    # construction helpers -------------------------------------------------

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def from_rational(cls, coeffs: Sequence[Fraction]) -> "IntPolynomial":
        """Primitive integer polynomial proportional (by a positive factor) to ``coeffs``."""
        return cls(_primitive(coeffs))

    @classmethod
    def ay_polynomial(cls, g: int) -> "IntPolynomial":
        """``x^g - x^(g-1) - ... - x - 1``."""
        if g < 1:
            raise ValueError("degree must be positive")
        return cls([-1] * g + [1])

    # basic properties -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def reversed(self) -> "IntPolynomial":
        """Coefficient reversal ``x^deg p(1/x)``."""
        return IntPolynomial(reversed(self.coeffs))

    def sign_normalized(self) -> "IntPolynomial":
        """Multiply by -1 if needed so the leading coefficient is positive."""
        return -self if self.leading < 0 else self

    def content(self) -> int:
        c = 0
        for a in self.coeffs:
            c = gcd(c, a)
        return c

    def primitive(self) -> "IntPolynomial":
        c = self.content()
        if c == 0:
            return self
        if self.leading < 0:
            c = -c
        return IntPolynomial(a // c for a in self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions, FieldElements, intervals."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def divides(self, other: "IntPolynomial") -> bool:
        """Whether ``self`` divides ``other`` in Q[x]."""
        if self.is_zero():
            return other.is_zero()
        _, r = divmod_rational(other.coeffs, self.coeffs)
        return not r

    def exact_quotient(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = divmod_rational(self.coeffs, divisor.coeffs)
        if r:
            raise ValueError(f"{divisor} does not divide {self}")
        return IntPolynomial(q)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPolynomial":
        return cls(int(c) for c in data)


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot combine IntPolynomial with {type(p).__name__}")


# rational helpers ----------------------------------------------------------


def _primitive(coeffs: Sequence) -> list[int]:
    coeffs = _trim(Fraction(c) for c in coeffs)
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return [a // g for a in ints]


def divmod_rational(num: Sequence, den: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Polynomial long division over Q; returns trimmed (quotient, remainder)."""
    num = _trim(Fraction(c) for c in num)
    den = _trim(Fraction(c) for c in den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    r = list(num)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                r[k + j] -= c * d
    return _trim(q), _trim(r[: len(den) - 1])


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a = list(p.coeffs)
    b = list(q.coeffs)
    while b:
        _, r = divmod_rational(a, b)
        a, b = b, _primitive(r)
    result = IntPolynomial(_primitive(a))
    return result.sign_normalized()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    return p.exact_quotient(g).primitive()


# Sturm machinery -------------------------------------------------------------


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain p, p', -rem(p, p'), ... scaled by positive constants."""
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        _, r = divmod_rational(seq[-2].coeffs, seq[-1].coeffs)
        if not r:
            break
        nxt = IntPolynomial(_primitive([-c for c in r]))
        # _primitive divides by a positive gcd, so the sign of -r is kept
        seq.append(nxt)
    return [s for s in seq if not s.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(seq: Sequence[IntPolynomial], x) -> int:
    """Sign changes of the chain at ``x``; ``x`` may be +inf/-inf as 'inf'/'-inf'."""
    signs = []
    for s in seq:
        if x == "inf":
            v = _sign(s.leading)
        elif x == "-inf":
            v = _sign(s.leading) * (-1) ** s.degree
        else:
            v = _sign(s(x))
        if v:
            signs.append(v)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPolynomial, lo=None, hi=None) -> int:
    """Number of distinct real roots, optionally restricted to the half-open ``(lo, hi]``."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    q = squarefree_part(p)
    if q.degree == 0:
        return 0
    seq = sturm_sequence(q)
    a = "-inf" if lo is None else Fraction(lo)
    b = "inf" if hi is None else Fraction(hi)
    return sign_variations(seq, a) - sign_variations(seq, b)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p.leading)
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead) if p.degree > 0 else Fraction(1)


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed rational interval containing exactly one real root of ``poly``.

    ``poly`` is squarefree.  Either ``lo == hi`` (an exact rational root) or
    neither endpoint is a root and ``poly`` changes sign across the interval.
    """

    lo: Fraction
    hi: Fraction
    poly: IntPolynomial

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def certify(self) -> bool:
        """Recheck the isolation property with exact Sturm counts."""
        if self.is_exact():
            return self.poly(self.lo) == 0
        if self.poly(self.lo) == 0 or self.poly(self.hi) == 0:
            return False
        return count_real_roots(self.poly, self.lo, self.hi) == 1

    def bisect(self) -> "IsolatingInterval":
        if self.is_exact():
            return self
        mid = (self.lo + self.hi) / 2
        vm = self.poly(mid)
        if vm == 0:
            return IsolatingInterval(mid, mid, self.poly)
        if _sign(self.poly(self.lo)) != _sign(vm):
            return IsolatingInterval(self.lo, mid, self.poly)
        return IsolatingInterval(mid, self.hi, self.poly)

    def refine(self, width) -> "IsolatingInterval":
        """Bisect until the interval is no wider than ``width``."""
        width = Fraction(width)
        iv = self
        while iv.width > width:
            iv = iv.bisect()
        return iv

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, digits: int = 12) -> str:
        """Decimal rendering correct to within ``10**-digits``."""
        iv = self.refine(Fraction(1, 10 ** (digits + 1)))
        m = iv.midpoint()
        scaled = round(m * 10**digits)
        sign = "-" if scaled < 0 else ""
        scaled = abs(scaled)
        whole, frac = divmod(scaled, 10**digits)
        return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def to_json(self) -> dict:
        return {
            "lo": [str(self.lo.numerator), str(self.lo.denominator)],
            "hi": [str(self.hi.numerator), str(self.hi.denominator)],
            "poly": self.poly.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "IsolatingInterval":
        lo = Fraction(int(data["lo"][0]), int(data["lo"][1]))
        hi = Fraction(int(data["hi"][0]), int(data["hi"][1]))
        return cls(lo, hi, IntPolynomial.from_json(data["poly"]))


def isolate_real_roots(p: IntPolynomial) -> list[IsolatingInterval]:
    """Disjoint isolating intervals for the distinct real roots of ``p``, in increasing order."""
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    q = squarefree_part(p)
    if q.degree == 0:
        return []
    seq = sturm_sequence(q)
    bound = root_bound(q)
    out: list[IsolatingInterval] = []

    def count(a, b):  # roots in (a, b]
        return sign_variations(seq, a) - sign_variations(seq, b)

    stack = [(-bound, bound, count(-bound, bound))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            # the root lies in (a, b]; move endpoints off any rational roots
            while True:
                if q(b) == 0:
                    out.append(IsolatingInterval(b, b, q))
                    break
                if q(a) != 0:
                    out.append(IsolatingInterval(a, b, q))
                    break
                mid = (a + b) / 2
                if count(mid, b) == 1:
                    a = mid
                else:
                    b = mid
            continue
        mid = (a + b) / 2
        stack.append((a, mid, count(a, mid)))
        stack.append((mid, b, count(mid, b)))
    out.sort(key=lambda iv: iv.lo)
    # neighbours may share an endpoint; bisect until the closed intervals are disjoint
    for k in range(len(out) - 1):
        while out[k].hi >= out[k + 1].lo:
            if not out[k].is_exact():
                out[k] = out[k].bisect()
            if out[k].hi >= out[k + 1].lo and not out[k + 1].is_exact():
                out[k + 1] = out[k + 1].bisect()
    return out


def largest_real_root(p: IntPolynomial) -> IsolatingInterval:
    roots = isolate_real_roots(p)
    if not roots:
        raise ValueError(f"{p} has no real roots")
    return roots[-1]
