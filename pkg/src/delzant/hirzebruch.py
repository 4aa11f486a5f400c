"""Hirzebruch trapezoids and maximal-torus counting.

The standard trapezoid with parameters (a, b, m) — rational a, b > 0,
integer m >= 0, a > (m/2) b — has vertices

    (0, 0), (a + (m/2) b, 0), (a - (m/2) b, b), (0, b),

i.e. height b, average width a, and a right-hand edge of lattice slope
-1/m (vertical when m = 0).  It is always Delzant.  Every Delzant
quadrilateral is congruent
to exactly one standard trapezoid (after the m = 0 swap that identifies
the a x b and b x a rectangles), so (a, b, m) classifies Delzant 4-gons
up to unimodular affine congruence.

The toric 4-manifold over the trapezoid depends only on (a, b, m mod 2):
even m gives the product of two spheres with areas a and b; odd m gives
the one-point blow-up of the projective plane with line area l = a + b/2
and exceptional area e = a - b/2.  Counting the trapezoids that land on
a fixed manifold counts the conjugacy classes of maximal tori in its
Hamiltonian symplectomorphism group:

    spheres:  ceil(a / b)      (m = 2k, k < a/b)
    blow-up:  ceil(e / (l-e))  (m = 2k + 1, k < e/(l-e))

Distinctness of the underlying symplectic structures reduces to a finite
check on the intersection form: the integer matrices preserving the form
cannot move one admissible area vector to another.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EdgeCountError, InvalidParamsError, NotDelzantError
from .lattice import (
    IntVec2,
    Mat2,
    RatVec2,
    UnimodularAffine,
    as_rational,
    mat_transpose,
    mat_vec,
    solve_mat2,
)
from .polygon import Polygon, apply_map, is_delzant, make_polygon


@dataclass(frozen=True)
class HirzebruchParams:
    """Parameters (a, b, m) of a standard trapezoid.

    Canonical form additionally requires a >= b when m = 0; use
    ``canonical()`` to normalize.
    """

    a: Fraction
    b: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 0:
            raise InvalidParamsError(f"m must be a nonnegative integer, got {self.m!r}")
        if self.a <= 0 or self.b <= 0:
            raise InvalidParamsError(f"need a, b > 0, got a={self.a}, b={self.b}")
        if not self.a > Fraction(self.m, 2) * self.b:
            raise InvalidParamsError(
                f"need average width a > (m/2) b, got a={self.a}, b={self.b}, m={self.m}"
            )

    @property
    def is_canonical(self) -> bool:
        return self.m != 0 or self.a >= self.b

    def canonical(self) -> "HirzebruchParams":
        if self.m == 0 and self.a < self.b:
            return HirzebruchParams(self.b, self.a, 0)
        return self


@dataclass(frozen=True)
class SphereProduct:
    """Product of two spheres with areas a >= b > 0 (swapped on construction)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = as_rational(self.a), as_rational(self.b)
        if a < b:
            a, b = b, a
        if b <= 0:
            raise InvalidParamsError(f"need a >= b > 0, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class BlowUp:
    """One-point blow-up of the projective plane, line area l > exceptional area e > 0."""

    l: Fraction
    e: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l", as_rational(self.l))
        object.__setattr__(self, "e", as_rational(self.e))
        if not self.l > self.e > 0:
            raise InvalidParamsError(f"need l > e > 0, got l={self.l}, e={self.e}")


ManifoldClass = SphereProduct | BlowUp


@dataclass(frozen=True)
class IntersectionForm:
    """Symmetric nondegenerate 2x2 integer matrix."""

    matrix: Mat2

    def __post_init__(self):
        m = tuple(tuple(row) for row in self.matrix)
        if len(m) != 2 or any(len(r) != 2 for r in m):
            raise InvalidParamsError("intersection form must be 2x2")
        if any(not isinstance(e, int) or isinstance(e, bool) for r in m for e in r):
            raise InvalidParamsError("intersection form must have integer entries")
        if m[0][1] != m[1][0]:
            raise InvalidParamsError(f"intersection form must be symmetric, got {m}")
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
            raise InvalidParamsError("intersection form must be nondegenerate")
        object.__setattr__(self, "matrix", m)


HYPERBOLIC_FORM = IntersectionForm(((0, 1), (1, 0)))
BLOWUP_FORM = IntersectionForm(((1, 0), (0, -1)))


def standard_trapezoid(params: HirzebruchParams) -> Polygon:
    half = Fraction(params.m, 2) * params.b
    return make_polygon(
        [
            (Fraction(0), Fraction(0)),
            (params.a + half, Fraction(0)),
            (params.a - half, params.b),
            (Fraction(0), params.b),
        ]
    )


_SWAP_XY = UnimodularAffine(((0, 1), (1, 0)))


def classify_quadrilateral(poly: Polygon) -> tuple[HirzebruchParams, UnimodularAffine]:
    """Identify a Delzant quadrilateral as a standard trapezoid.

    Because adjacent normals form a lattice basis, relabeling the normal
    cycle to start at some edge and sending its first two normals to
    (1, 0) and (0, 1) forces the other two into the shape (-1, k) and
    (l, -1) with kl = 0.  The relabeling with l = 0 and k <= 0 puts the
    polygon in standard position (left edge vertical, bottom horizontal,
    slant leaning left with slope -1/m for m = -k); a translation to the
    origin then reads off the parameters directly.

    Returns the canonical parameters and a witness map T with
    apply_map(poly, T) == standard_trapezoid(params).
    """
    if len(poly) != 4:
        raise EdgeCountError(f"expected a quadrilateral, got {len(poly)} edges")
    report = is_delzant(poly)
    if not report.is_delzant:
        raise NotDelzantError(f"polygon is not Delzant: failures {report.failures}")
    normals = report.normals

    e1, e2 = IntVec2(1, 0), IntVec2(0, 1)
    chosen = None
    for r in range(4):
        w = normals[r:] + normals[:r]
        s = solve_mat2((w[0], w[1]), (e1, e2))
        assert s is not None  # adjacent Delzant normals are a lattice basis
        t2 = mat_vec(s, w[2])
        t3 = mat_vec(s, w[3])
        # Delzant determinants force t2 = (-1, k), t3 = (l, -1), kl = 0
        k, l = t2.y, t3.x
        if l == 0 and k <= 0:
            # a rectangle admits all four relabelings; prefer the one that
            # keeps an already-standard polygon fixed
            if s == ((1, 0), (0, 1)):
                chosen = (w, -k)
                break
            if chosen is None:
                chosen = (w, -k)
    if chosen is None:
        raise AssertionError("no standard relabeling found for a Delzant quadrilateral")
    w, m = chosen

    # the point map with normal action s is x -> transpose([w0 w1]) x
    upright = UnimodularAffine(mat_transpose(((w[0].x, w[1].x), (w[0].y, w[1].y))))
    image = apply_map(poly, upright)
    xmin = min(p.x for p in image.vertices)
    ymin = min(p.y for p in image.vertices)
    witness = UnimodularAffine.translate(-xmin, -ymin).compose(upright)
    placed = apply_map(poly, witness)

    b = max(p.y for p in placed.vertices)
    bottom = max(p.x for p in placed.vertices if p.y == 0)
    top = max(p.x for p in placed.vertices if p.y == b)
    assert bottom - top == m * b, "slant slope inconsistent with width difference"
    params = HirzebruchParams((bottom + top) / 2, b, m)

    if not params.is_canonical:
        params = params.canonical()
        witness = _SWAP_XY.compose(witness)
    assert apply_map(poly, witness) == standard_trapezoid(params)
    return params, witness


def parity_reduce(params: HirzebruchParams) -> HirzebruchParams:
    """Reduce m by steps of two; the manifold class only sees m mod 2."""
    return HirzebruchParams(params.a, params.b, params.m % 2)


def manifold_of(params: HirzebruchParams) -> ManifoldClass:
    if params.m % 2 == 0:
        return SphereProduct(params.a, params.b)
    return BlowUp(params.a + params.b / 2, params.a - params.b / 2)


def _sphere_trapezoid_data(manifold: SphereProduct) -> tuple[Fraction, Fraction, Fraction]:
    return manifold.a, manifold.b, manifold.a / manifold.b


def _blowup_trapezoid_data(manifold: BlowUp) -> tuple[Fraction, Fraction, Fraction]:
    a = (manifold.l + manifold.e) / 2
    b = manifold.l - manifold.e
    return a, b, manifold.e / (manifold.l - manifold.e)


def enumerate_tori(manifold: ManifoldClass) -> tuple[HirzebruchParams, ...]:
    """All trapezoid parameters whose manifold is the given one.

    One entry per conjugacy class of maximal tori: (a, b, 2k) with
    0 <= k < a/b for the sphere product, (a, b, 2k+1) with
    0 <= k < e/(l-e) for the blow-up.
    """
    if isinstance(manifold, SphereProduct):
        a, b, ratio = _sphere_trapezoid_data(manifold)
        parity = 0
    else:
        a, b, ratio = _blowup_trapezoid_data(manifold)
        parity = 1
    out = []
    k = 0
    while k < ratio:
        out.append(HirzebruchParams(a, b, 2 * k + parity))
        k += 1
    return tuple(out)


def count_tori(manifold: ManifoldClass) -> int:
    """Number of conjugacy classes of maximal tori, by the ceiling formula."""
    if isinstance(manifold, SphereProduct):
        ratio = _sphere_trapezoid_data(manifold)[2]
    else:
        ratio = _blowup_trapezoid_data(manifold)[2]
    return math.ceil(ratio)


def form_automorphisms(form: IntersectionForm | Mat2, bound: int = 3) -> tuple[Mat2, ...]:
    """All integer matrices M with entries in [-bound, bound], det +1 or -1,
    and transpose(M) Q M = Q, sorted by entries.

    For the two forms of interest the result is independent of the bound:
    every solution already has entries in {-1, 0, 1}.
    """
    if isinstance(form, IntersectionForm):
        q = form.matrix
    else:
        q = IntersectionForm(form).matrix
    if not isinstance(bound, int) or bound < 1:
        raise InvalidParamsError(f"bound must be a positive integer, got {bound!r}")
    return _form_automorphisms(q, bound)


@functools.lru_cache(maxsize=None)
def _form_automorphisms(q: Mat2, bound: int) -> tuple[Mat2, ...]:
    rng = range(-bound, bound + 1)
    out = []
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if a * d - b * c not in (1, -1):
                        continue
                    m = ((a, b), (c, d))
                    if _congruence_transform(m, q) == q:
                        out.append(m)
    return tuple(sorted(out))


def _congruence_transform(m: Mat2, q: Mat2) -> Mat2:
    (a, b), (c, d) = m
    (q00, q01), (q10, q11) = q
    # transpose(M) Q M, expanded
    r00 = a * (q00 * a + q01 * c) + c * (q10 * a + q11 * c)
    r01 = a * (q00 * b + q01 * d) + c * (q10 * b + q11 * d)
    r10 = b * (q00 * a + q01 * c) + d * (q10 * a + q11 * c)
    r11 = b * (q00 * b + q01 * d) + d * (q10 * b + q11 * d)
    return ((r00, r01), (r10, r11))


def same_symplectic_class(m1: ManifoldClass, m2: ManifoldClass) -> bool:
    """Whether two labeled manifolds are symplectomorphic.

    Different union tags are never symplectomorphic (the intersection
    forms differ).  Within a tag, the area vector of one must be carried
    to the other's by an automorphism of the intersection form; given
    the canonical parameter ranges this happens only at equality.
    """
    if type(m1) is not type(m2):
        return False
    if isinstance(m1, SphereProduct):
        form = HYPERBOLIC_FORM
        v1 = RatVec2(m1.a, m1.b)
        v2 = RatVec2(m2.a, m2.b)
    else:
        form = BLOWUP_FORM
        v1 = RatVec2(m1.l, m1.e)
        v2 = RatVec2(m2.l, m2.e)
    return any(mat_vec(m, v1) == v2 for m in form_automorphisms(form, 1))
