"""Convex rational polygons, the Delzant condition, and lattice congruence.

A polygon is stored counterclockwise, strictly convex, starting at its
lexicographically smallest vertex, so equal polygons compare equal
structurally.  Each edge carries a primitive integer direction, the
matching inward normal (the direction rotated left by 90 degrees, which
points inward for a counterclockwise boundary), and a rational lattice
length:

    edge vector = lattice_length * direction.

The polygon is Delzant when consecutive primitive inward normals satisfy
det(u_i, u_{i+1}) = 1 cyclically, i.e. every pair of adjacent normals is
a positively oriented basis of the integer lattice.  These are exactly
the moment polygons of toric 4-manifolds.

Congruence here means equality up to an affine map x -> Rx + v with R an
integer matrix of determinant +1 or -1 (``UnimodularAffine``).
``congruent`` returns an explicit witness map or None, by matching normal
cycles over all cyclic offsets and both orientations and verifying the
candidate map vertex-for-vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    CollinearVerticesError,
    NonConvexError,
    RepeatedVertexError,
    TooFewVerticesError,
)
from .lattice import (
    IntVec2,
    RatVec2,
    UnimodularAffine,
    det2,
    mat_det,
    mat_inverse_transpose,
    mat_vec,
    primitive,
    solve_mat2,
)


def _cross(u: RatVec2, w: RatVec2) -> Fraction:
    return u.x * w.y - u.y * w.x


@dataclass(frozen=True)
class Polygon:
    """Strictly convex polygon with rational vertices, counterclockwise.

    Clockwise input is accepted and silently reversed; ``input_reversed``
    records that this happened (it does not participate in equality).
    """

    vertices: tuple[RatVec2, ...]
    input_reversed: bool = field(default=False, compare=False)

    def __post_init__(self):
        pts = tuple(
            p if isinstance(p, RatVec2) else RatVec2(p[0], p[1]) for p in self.vertices
        )
        n = len(pts)
        if n < 3:
            raise TooFewVerticesError(f"need at least 3 vertices, got {n}")
        seen: dict[RatVec2, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise RepeatedVertexError(i)
            seen[p] = i

        crosses = []
        for i in range(n):
            a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
            crosses.append(_cross(b - a, c - b))
        for i, cr in enumerate(crosses):
            if cr == 0:
                raise CollinearVerticesError((i + 1) % n)
        if all(cr < 0 for cr in crosses):
            pts = pts[::-1]
            object.__setattr__(self, "input_reversed", True)
        elif not all(cr > 0 for cr in crosses):
            majority_ccw = sum(1 for cr in crosses if cr > 0) * 2 >= n
            bad = next(i for i, cr in enumerate(crosses) if (cr > 0) != majority_ccw)
            raise NonConvexError((bad + 1) % n)

        start = min(range(n), key=lambda i: (pts[i].x, pts[i].y))
        object.__setattr__(self, "vertices", pts[start:] + pts[:start])

    def __len__(self) -> int:
        return len(self.vertices)


def make_polygon(points) -> Polygon:
    """Build a polygon from (x, y) pairs or RatVec2 values.

    Coordinates may be ints, Fractions, or rational strings like "5/2".
    """
    return Polygon(tuple(points))


@dataclass(frozen=True)
class EdgeData:
    """One polygon edge: primitive direction, inward normal, lattice length."""

    tail_index: int
    direction: IntVec2
    inward_normal: IntVec2
    lattice_length: Fraction


def _primitive_direction(delta: RatVec2) -> IntVec2:
    scale = math.lcm(delta.x.denominator, delta.y.denominator)
    return primitive(IntVec2(int(delta.x * scale), int(delta.y * scale)))


def edge_data(poly: Polygon) -> tuple[EdgeData, ...]:
    """Per-edge lattice data, one record per edge in counterclockwise order."""
    pts = poly.vertices
    n = len(pts)
    out = []
    for i in range(n):
        delta = pts[(i + 1) % n] - pts[i]
        direction = _primitive_direction(delta)
        length = delta.x / direction.x if direction.x else delta.y / direction.y
        out.append(EdgeData(i, direction, direction.rotate_left(), length))
    return tuple(out)


@dataclass(frozen=True)
class DelzantReport:
    """Outcome of the Delzant test.

    ``failures`` lists pairs (i, d) where the normals of edges i and i+1
    (cyclically) have determinant d != 1.
    """

    is_delzant: bool
    normals: tuple[IntVec2, ...]
    failures: tuple[tuple[int, int], ...]
    input_reversed: bool = False


def is_delzant(poly: Polygon) -> DelzantReport:
    """Check det(u_i, u_{i+1}) = 1 for all consecutive inward normals."""
    normals = tuple(e.inward_normal for e in edge_data(poly))
    n = len(normals)
    failures = tuple(
        (i, d)
        for i in range(n)
        if (d := det2(normals[i], normals[(i + 1) % n])) != 1
    )
    return DelzantReport(not failures, normals, failures, poly.input_reversed)


def apply_map(poly: Polygon, transform: UnimodularAffine) -> Polygon:
    """Image polygon, renormalized to counterclockwise canonical form."""
    return Polygon(tuple(transform.apply(p) for p in poly.vertices))


def second_betti_from_edges(poly: Polygon) -> int:
    """Second Betti number of the toric 4-manifold: edge count minus 2."""
    return len(poly) - 2


def _candidate_transform(
    p1: Polygon,
    p2: Polygon,
    normals1: tuple[IntVec2, ...],
    normals2: tuple[IntVec2, ...],
    offset: int,
    orientation: int,
) -> UnimodularAffine | None:
    """Solve and fully verify one normal-cycle matching.

    ``orientation`` +1 matches normal cycles in order (edge i of p1 to
    edge i+offset of p2), -1 matches against the reversed cycle (edge i
    to edge offset-i), which is how reflections permute edges.  The
    solved matrix acts on normals; the point map is its inverse
    transpose.  The translation comes from one matched vertex and the
    whole map is verified by comparing image and target polygons.
    """
    n = len(normals1)

    def target(i: int) -> int:
        return (offset + orientation * i) % n

    s = solve_mat2(
        (normals1[0], normals1[1]),
        (normals2[target(0)], normals2[target(1)]),
    )
    if s is None or mat_det(s) != orientation:
        return None
    if any(mat_vec(s, normals1[i]) != normals2[target(i)] for i in range(2, n)):
        return None
    linear = mat_inverse_transpose(s)
    # tail of edge i maps to the tail (direct) or head (reversed) of its target
    image_of_v0 = p2.vertices[(offset + (1 if orientation < 0 else 0)) % n]
    translation = image_of_v0 - mat_vec(linear, p1.vertices[0])
    transform = UnimodularAffine(linear, translation)
    if apply_map(p1, transform) == p2:
        return transform
    return None


def congruent(p1: Polygon, p2: Polygon) -> UnimodularAffine | None:
    """Witness map T with apply_map(p1, T) == p2, or None.

    Tries every cyclic offset with both orientations; each candidate is
    solved from one adjacent normal pair and verified in full, so a
    returned witness is always exact.
    """
    if len(p1) != len(p2):
        return None
    normals1 = tuple(e.inward_normal for e in edge_data(p1))
    normals2 = tuple(e.inward_normal for e in edge_data(p2))
    for orientation in (1, -1):
        for offset in range(len(p1)):
            found = _candidate_transform(p1, p2, normals1, normals2, offset, orientation)
            if found is not None:
                return found
    return None
