"""Exact scalars and 2D lattice linear algebra.

All coordinates are ``fractions.Fraction`` (arbitrary precision, always
stored reduced with positive denominator) and all lattice data is plain
Python ``int``.  No floating point enters anywhere: the geometric
dichotomies downstream (determinant exactly 1, strict rational
inequalities) are meaningless under rounding.

A 2x2 integer matrix is a pair of rows ``((a, b), (c, d))``.  The only
matrices that occur are unimodular (determinant +1 or -1), so inverses
stay integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateDirectionError, NotUnimodularError

Rational = Fraction

Mat2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY_MAT: Mat2 = ((1, 0), (0, 1))


def as_rational(value) -> Fraction:
    """Coerce int / Fraction / string "p/q" to an exact rational.

    Floats are rejected outright rather than converted: a float in the
    input is always a bug under the exactness contract.
    """
    if isinstance(value, bool):
        raise TypeError(f"cannot interpret {value!r} as a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational (floats are not allowed)")


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {text!r}")
    return Fraction(text)


@dataclass(frozen=True, order=True)
class IntVec2:
    """Integer lattice vector (edge directions, normals, circle directions)."""

    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("IntVec2 entries must be integers")

    def __add__(self, other: "IntVec2") -> "IntVec2":
        return IntVec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "IntVec2") -> "IntVec2":
        return IntVec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "IntVec2":
        return IntVec2(-self.x, -self.y)

    def dot(self, other) -> int | Fraction:
        return self.x * other.x + self.y * other.y

    def rotate_left(self) -> "IntVec2":
        """Rotation by +90 degrees: (x, y) -> (-y, x)."""
        return IntVec2(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


@dataclass(frozen=True, order=True)
class RatVec2:
    """Point of the rational plane; also used for translations."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other) -> "RatVec2":
        return RatVec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other) -> "RatVec2":
        return RatVec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "RatVec2":
        return RatVec2(-self.x, -self.y)

    def dot(self, other) -> Fraction:
        return self.x * other.x + self.y * other.y


def primitive(v: IntVec2) -> IntVec2:
    """Divide out the gcd of the entries; direction is preserved.

    Raises on the zero vector, which points nowhere.
    """
    if v.is_zero():
        raise DegenerateDirectionError("degenerate direction: zero vector has no primitive form")
    g = math.gcd(v.x, v.y)
    return IntVec2(v.x // g, v.y // g)


def det2(u: IntVec2, w: IntVec2) -> int:
    return u.x * w.y - u.y * w.x


def mat_det(m: Mat2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat_mul(m1: Mat2, m2: Mat2) -> Mat2:
    return (
        (m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0], m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1]),
        (m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0], m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1]),
    )


def mat_transpose(m: Mat2) -> Mat2:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def mat_vec(m: Mat2, v):
    """Apply to an IntVec2 or RatVec2, preserving the vector type."""
    cls = type(v)
    return cls(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)


def mat_inverse_unimodular(m: Mat2) -> Mat2:
    """Integer inverse; valid only when det(m) is +1 or -1."""
    d = mat_det(m)
    if d not in (1, -1):
        raise NotUnimodularError(f"matrix {m} has determinant {d}, expected +1 or -1")
    # adj(m)/det(m); multiplying by det is the same as dividing when det^2 = 1
    return (
        (d * m[1][1], -d * m[0][1]),
        (-d * m[1][0], d * m[0][0]),
    )


def mat_inverse_transpose(m: Mat2) -> Mat2:
    return mat_transpose(mat_inverse_unimodular(m))


def solve_mat2(src: tuple[IntVec2, IntVec2], dst: tuple[IntVec2, IntVec2]) -> Mat2 | None:
    """Unique matrix S with S*src[0] = dst[0] and S*src[1] = dst[1].

    Solved over the rationals; returns None when the source pair is
    dependent or the solution is not an integer matrix.
    """
    d = det2(src[0], src[1])
    if d == 0:
        return None
    # S = [dst0 dst1] * [src0 src1]^{-1}, with the column inverse expanded by hand
    a = dst[0].x * src[1].y - dst[1].x * src[0].y
    b = dst[1].x * src[0].x - dst[0].x * src[1].x
    c = dst[0].y * src[1].y - dst[1].y * src[0].y
    e = dst[1].y * src[0].x - dst[0].y * src[1].x
    if any(t % d for t in (a, b, c, e)):
        return None
    return ((a // d, b // d), (c // d, e // d))


@dataclass(frozen=True)
class UnimodularAffine:
    """Affine map x -> R x + v with R an integer matrix of determinant +1 or -1.

    These maps form the group of lattice-preserving affine transformations
    of the plane (with a rational translation part here); moment polygons
    related by such a map describe the same torus action up to
    reparametrization.
    """

    linear: Mat2 = IDENTITY_MAT
    translation: RatVec2 = field(default_factory=lambda: RatVec2(Fraction(0), Fraction(0)))

    def __post_init__(self):
        lin = tuple(tuple(row) for row in self.linear)
        if len(lin) != 2 or any(len(row) != 2 for row in lin):
            raise NotUnimodularError("linear part must be a 2x2 integer matrix")
        if any(not isinstance(e, int) or isinstance(e, bool) for row in lin for e in row):
            raise NotUnimodularError(f"linear part {lin} must have integer entries")
        object.__setattr__(self, "linear", lin)
        if mat_det(lin) not in (1, -1):
            raise NotUnimodularError(f"linear part {lin} has determinant {mat_det(lin)}")
        if not isinstance(self.translation, RatVec2):
            tx, ty = self.translation
            object.__setattr__(self, "translation", RatVec2(tx, ty))

    @classmethod
    def identity(cls) -> "UnimodularAffine":
        return cls()

    @classmethod
    def translate(cls, dx, dy) -> "UnimodularAffine":
        return cls(IDENTITY_MAT, RatVec2(dx, dy))

    @property
    def det(self) -> int:
        return mat_det(self.linear)

    def apply(self, p: RatVec2) -> RatVec2:
        return mat_vec(self.linear, p) + self.translation

    def compose(self, other: "UnimodularAffine") -> "UnimodularAffine":
        """The map p -> self(other(p))."""
        return UnimodularAffine(
            mat_mul(self.linear, other.linear),
            mat_vec(self.linear, other.translation) + self.translation,
        )

    def invert(self) -> "UnimodularAffine":
        inv = mat_inverse_unimodular(self.linear)
        return UnimodularAffine(inv, -mat_vec(inv, self.translation))
