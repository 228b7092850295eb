"""Exact arithmetic in the real quartic field Q(sqrt2, sqrt5).

Elements are stored on the basis (1, sqrt2, sqrt5, sqrt10) with rational
coordinates, so equality is exact and hashing is stable.  This is the
coordinate field of the binary polyhedral unit quaternions: the tetrahedral
group needs only halves, the octahedral group adds sqrt2/2, and the
icosahedral group adds the golden ratio (1+sqrt5)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Exact rational scalars.  Fraction is always reduced with positive
# denominator, which is exactly the invariant we need.
Rational = Fraction

_SQRT2 = math.sqrt(2.0)
_SQRT5 = math.sqrt(5.0)
_SQRT10 = math.sqrt(10.0)

RationalLike = int | Fraction


def _frac(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class FieldElem:
    """a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational a, b, c, d."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    @staticmethod
    def of(a: RationalLike = 0, b: RationalLike = 0, c: RationalLike = 0,
           d: RationalLike = 0) -> "FieldElem":
        return FieldElem(_frac(a), _frac(b), _frac(c), _frac(d))

    @staticmethod
    def rational(value: RationalLike) -> "FieldElem":
        return FieldElem(_frac(value))

    @staticmethod
    def sqrt2() -> "FieldElem":
        return FieldElem(b=Fraction(1))

    @staticmethod
    def sqrt5() -> "FieldElem":
        return FieldElem(c=Fraction(1))

    @staticmethod
    def golden_ratio() -> "FieldElem":
        # (1 + sqrt5) / 2
        return FieldElem(Fraction(1, 2), Fraction(0), Fraction(1, 2))

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __add__(self, other: "FieldElem | RationalLike") -> "FieldElem":
        other = _coerce(other)
        return FieldElem(self.a + other.a, self.b + other.b,
                         self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: "FieldElem | RationalLike") -> "FieldElem":
        return self + (-_coerce(other))

    def __rsub__(self, other: "FieldElem | RationalLike") -> "FieldElem":
        return _coerce(other) + (-self)

    def __mul__(self, other: "FieldElem | RationalLike") -> "FieldElem":
        o = _coerce(other)
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        # Basis products: sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5,
        # sqrt5*sqrt10 = 5*sqrt2.
        return FieldElem(
            a * e + 2 * b * f + 5 * c * g + 10 * d * h,
            a * f + b * e + 5 * (c * h + d * g),
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def conj_sqrt2(self) -> "FieldElem":
        """Galois conjugate sending sqrt2 -> -sqrt2 (and sqrt10 -> -sqrt10)."""
        return FieldElem(self.a, -self.b, self.c, -self.d)

    def conj_sqrt5(self) -> "FieldElem":
        """Galois conjugate sending sqrt5 -> -sqrt5 (and sqrt10 -> -sqrt10)."""
        return FieldElem(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> "FieldElem":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # Multiply by the three nontrivial Galois conjugates; the full product
        # of all four conjugates is rational.
        partial = self.conj_sqrt2() * self.conj_sqrt5() * self.conj_sqrt2().conj_sqrt5()
        norm = self * partial
        if not norm.is_rational() or norm.a == 0:
            raise ArithmeticError(f"conjugate product is not a nonzero rational: {norm}")
        q = 1 / norm.a
        return FieldElem(partial.a * q, partial.b * q, partial.c * q, partial.d * q)

    def __truediv__(self, other: "FieldElem | RationalLike") -> "FieldElem":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other: "FieldElem | RationalLike") -> "FieldElem":
        return _coerce(other) * self.inverse()

    def __float__(self) -> float:
        return (float(self.a) + float(self.b) * _SQRT2
                + float(self.c) * _SQRT5 + float(self.d) * _SQRT10)

    def __str__(self) -> str:
        terms = []
        for coeff, radical in ((self.a, ""), (self.b, "√2"),
                               (self.c, "√5"), (self.d, "√10")):
            if not coeff:
                continue
            sign = "-" if coeff < 0 else ("+" if terms else "")
            mag = abs(coeff)
            if radical and mag == 1:
                body = radical
            elif radical:
                body = f"{mag}{radical}"
            else:
                body = f"{mag}"
            terms.append(f"{sign}{body}")
        return "".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"FieldElem({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


ZERO = FieldElem()
ONE = FieldElem.rational(1)
HALF = FieldElem.rational(Fraction(1, 2))


def _coerce(value: "FieldElem | RationalLike") -> FieldElem:
    if isinstance(value, FieldElem):
        return value
    return FieldElem.rational(value)
