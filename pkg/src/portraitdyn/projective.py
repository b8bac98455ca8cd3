"""Points of the projective line over Q in normalized integer coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class PointError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """A point [x : y] of P^1(Q) with gcd(|x|,|y|) = 1 and y > 0, or (1, 0)."""

    x: int
    y: int

    def __post_init__(self):
        if self.x == 0 and self.y == 0:
            raise PointError("(0, 0) is not a projective point")
        g = gcd(abs(self.x), abs(self.y))
        if g != 1:
            raise PointError("coordinates are not primitive")
        if self.y < 0 or (self.y == 0 and self.x != 1):
            raise PointError("coordinates are not sign-normalized")

    @staticmethod
    def of(x, y) -> "ProjectivePoint":
        """Normalize arbitrary exact homogeneous coordinates."""
        fx, fy = Fraction(x), Fraction(y)
        if fx == 0 and fy == 0:
            raise PointError("(0, 0) is not a projective point")
        den = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
        ix, iy = int(fx * den), int(fy * den)
        g = gcd(abs(ix), abs(iy))
        ix, iy = ix // g, iy // g
        if iy < 0 or (iy == 0 and ix < 0):
            ix, iy = -ix, -iy
        return ProjectivePoint(ix, iy)

    @staticmethod
    def affine(z) -> "ProjectivePoint":
        q = Fraction(z)
        return ProjectivePoint(q.numerator, q.denominator)

    @staticmethod
    def infinity() -> "ProjectivePoint":
        return ProjectivePoint(1, 0)

    @property
    def is_infinity(self) -> bool:
        return self.y == 0

    def to_affine(self) -> Fraction:
        if self.y == 0:
            raise PointError("the point at infinity has no affine value")
        return Fraction(self.x, self.y)

    def apply_matrix(self, a, b, c, d) -> "ProjectivePoint":
        """Image under the projective linear map with matrix [[a, b], [c, d]]."""
        return ProjectivePoint.of(a * self.x + b * self.y, c * self.x + d * self.y)

    def __str__(self) -> str:
        if self.y == 0:
            return "inf"
        if self.y == 1:
            return str(self.x)
        return f"{self.x}/{self.y}"

    @staticmethod
    def parse(text: str) -> "ProjectivePoint":
        s = text.strip()
        if s == "inf":
            return ProjectivePoint.infinity()
        try:
            return ProjectivePoint.affine(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise PointError(f"cannot parse point {text!r}") from exc
