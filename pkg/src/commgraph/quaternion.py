"""Quaternions with exact coordinates in Q(sqrt2, sqrt5).

Unit quaternions here play the role of SU(2) matrices: q = w + xi + yj + zk
corresponds to [[w + xi, y + zi], [-y + zi, w - xi]], so the trace of the
natural 2-dimensional representation is exactly 2w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldElem, RationalLike

Coord = FieldElem | int | Fraction


def _fe(value: Coord) -> FieldElem:
    if isinstance(value, FieldElem):
        return value
    return FieldElem.rational(value)


@dataclass(frozen=True, slots=True)
class ExtQuaternion:
    w: FieldElem
    x: FieldElem
    y: FieldElem
    z: FieldElem

    @staticmethod
    def of(w: Coord = 0, x: Coord = 0, y: Coord = 0, z: Coord = 0) -> "ExtQuaternion":
        return ExtQuaternion(_fe(w), _fe(x), _fe(y), _fe(z))

    def __mul__(self, other: "ExtQuaternion") -> "ExtQuaternion":
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = other.w, other.x, other.y, other.z
        return ExtQuaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __neg__(self) -> "ExtQuaternion":
        return ExtQuaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "ExtQuaternion":
        return ExtQuaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> FieldElem:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def is_unit(self) -> bool:
        n = self.norm()
        return n.is_rational() and n.a == 1

    def inverse(self) -> "ExtQuaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero quaternion")
        ninv = n.inverse()
        c = self.conjugate()
        return ExtQuaternion(c.w * ninv, c.x * ninv, c.y * ninv, c.z * ninv)

    def __pow__(self, exponent: int) -> "ExtQuaternion":
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def trace(self) -> FieldElem:
        """Trace of the corresponding SU(2) matrix: exactly 2w."""
        return self.w + self.w

    def __str__(self) -> str:
        parts = []
        for coeff, unit in ((self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")):
            if not coeff:
                continue
            text = str(coeff)
            if unit:
                if text == "1":
                    text = unit
                elif text == "-1":
                    text = f"-{unit}"
                elif ("+" in text[1:]) or ("-" in text[1:]):
                    text = f"({text}){unit}"
                else:
                    text = f"{text}{unit}"
            if parts and not text.startswith("-"):
                parts.append("+")
            parts.append(text)
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"ExtQuaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


ONE = ExtQuaternion.of(1)
MINUS_ONE = ExtQuaternion.of(-1)
I = ExtQuaternion.of(0, 1)
J = ExtQuaternion.of(0, 0, 1)
K = ExtQuaternion.of(0, 0, 0, 1)
