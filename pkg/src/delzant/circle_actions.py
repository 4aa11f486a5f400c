"""Labeled graphs of circle subactions of a toric action.

Restricting the torus action over a Delzant polygon to the circle with
primitive direction xi gives a Hamiltonian circle action whose moment
map is the projection x -> <x, xi> of the polygon.  Its fixed-point
structure is encoded in a labeled graph read off the polygon edge by
edge:

  * an edge whose primitive direction v has <xi, v> = 0 lies in a level
    line of the projection and becomes a fixed surface ("fat vertex"),
    labeled with its moment level, its lattice length as area, and
    genus 0;
  * every other polygon vertex becomes an isolated fixed point, labeled
    with its moment value and the pair of isotropy weights <xi, v1>,
    <xi, v2> along the two edge directions leaving the vertex;
  * an edge with |<xi, v>| = k >= 2 is a sphere on which the circle
    rotates with speed k; it becomes an edge of the graph joining the
    nodes containing its endpoints.  Speed-1 spheres carry no isotropy
    and are not recorded.

Two graphs are isomorphic when they match node-for-node and
edge-for-edge after translating both moment scales to start at 0.

The graph determines the Betti numbers of the 4-manifold through the
indices of the fixed components (twice the number of negative weights
at an isolated point; 0 or 2 for a minimal or maximal surface), and it
decides whether the circle action extends to a toric one: extension is
possible exactly when every fixed surface has genus zero and no level
strictly between the extrema meets more than two non-free orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import (
    GraphError,
    InteriorFixedSurfaceError,
    NonPrimitiveDirectionError,
    NotDelzantError,
)
from .lattice import IntVec2, as_rational, primitive
from .polygon import Polygon, edge_data, is_delzant


@dataclass(frozen=True)
class CircleDirection:
    """Primitive generator of a circle subgroup of the 2-torus.

    Non-primitive input is rejected rather than reduced: a non-primitive
    vector does not generate an embedded circle, so silently dividing by
    the gcd would paper over a caller bug.
    """

    xi: IntVec2

    def __post_init__(self):
        xi = self.xi if isinstance(self.xi, IntVec2) else IntVec2(*self.xi)
        object.__setattr__(self, "xi", xi)
        if xi.is_zero() or primitive(xi) != xi:
            raise NonPrimitiveDirectionError(f"direction {(xi.x, xi.y)} is not primitive")


@dataclass(frozen=True)
class IsolatedPoint:
    """Isolated fixed point with its two nonzero isotropy weights, sorted."""

    moment: Fraction
    weights: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "moment", as_rational(self.moment))
        w = tuple(sorted(self.weights))
        if len(w) != 2 or any(not isinstance(x, int) or x == 0 for x in w):
            raise GraphError(f"weights must be a pair of nonzero integers, got {self.weights!r}")
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class FatVertex:
    """Fixed surface: moment level, positive symplectic area, genus."""

    moment: Fraction
    area: Fraction
    genus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "moment", as_rational(self.moment))
        object.__setattr__(self, "area", as_rational(self.area))
        if self.area <= 0:
            raise GraphError(f"fixed surface area must be positive, got {self.area}")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise GraphError(f"genus must be a nonnegative integer, got {self.genus!r}")


GraphNode = IsolatedPoint | FatVertex


@dataclass(frozen=True)
class ZkEdge:
    """Sphere rotated with speed k >= 2, joining two nodes of the graph.

    ``endpoints`` are node indices ordered so the first has the lower
    moment; ``moment_interval`` repeats the endpoint moment values.
    """

    k: int
    endpoints: tuple[int, int]
    moment_interval: tuple[Fraction, Fraction]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise GraphError(f"isotropy order k must be an integer >= 2, got {self.k!r}")
        lo, hi = (as_rational(t) for t in self.moment_interval)
        if not lo < hi:
            raise GraphError(f"moment interval must be increasing, got ({lo}, {hi})")
        object.__setattr__(self, "moment_interval", (lo, hi))
        object.__setattr__(self, "endpoints", (int(self.endpoints[0]), int(self.endpoints[1])))


@dataclass(frozen=True)
class LabeledGraph:
    nodes: tuple[GraphNode, ...]
    edges: tuple[ZkEdge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.nodes:
            raise GraphError("graph needs at least one node")
        moments = [n.moment for n in self.nodes]
        lo, hi = min(moments), max(moments)
        if moments.count(lo) != 1 or (lo != hi and moments.count(hi) != 1):
            raise GraphError("moment extrema must each be attained by exactly one node")
        for e in self.edges:
            i, j = e.endpoints
            if not (0 <= i < len(self.nodes) and 0 <= j < len(self.nodes)):
                raise GraphError(f"edge endpoints {e.endpoints} out of range")
            if (self.nodes[i].moment, self.nodes[j].moment) != e.moment_interval:
                raise GraphError(
                    f"edge interval {e.moment_interval} does not match endpoint moments"
                )

    @property
    def min_moment(self) -> Fraction:
        return min(n.moment for n in self.nodes)

    @property
    def max_moment(self) -> Fraction:
        return max(n.moment for n in self.nodes)


def circle_graph(poly: Polygon, direction: CircleDirection | IntVec2) -> LabeledGraph:
    """Labeled graph of the circle subaction with primitive direction xi."""
    if not isinstance(direction, CircleDirection):
        direction = CircleDirection(direction)
    xi = direction.xi
    report = is_delzant(poly)
    if not report.is_delzant:
        raise NotDelzantError(f"polygon is not Delzant: failures {report.failures}")

    edges = edge_data(poly)
    n = len(edges)
    pts = poly.vertices
    speeds = [xi.dot(e.direction) for e in edges]
    moments = [p.dot(xi) for p in pts]

    # vertex i sits between edge i-1 (incoming) and edge i (outgoing)
    level_edge_of_vertex = {}
    for i in range(n):
        if speeds[i] == 0:
            level_edge_of_vertex[i] = i
            level_edge_of_vertex[(i + 1) % n] = i

    node_specs: list[tuple] = []
    for i in range(n):
        if speeds[i] == 0:
            node_specs.append((moments[i], "edge", i))
    for i in range(n):
        if i not in level_edge_of_vertex:
            node_specs.append((moments[i], "vertex", i))
    node_specs.sort(key=lambda spec: (spec[0], spec[1], spec[2]))

    nodes: list[GraphNode] = []
    node_of_vertex: dict[int, int] = {}
    for moment, kind, i in node_specs:
        if kind == "edge":
            nodes.append(FatVertex(moment, edges[i].lattice_length, 0))
            node_of_vertex[i] = len(nodes) - 1
            node_of_vertex[(i + 1) % n] = len(nodes) - 1
        else:
            away = (edges[i].direction, -edges[(i - 1) % n].direction)
            nodes.append(IsolatedPoint(moments[i], (xi.dot(away[0]), xi.dot(away[1]))))
            node_of_vertex[i] = len(nodes) - 1

    zk_edges = []
    for i in range(n):
        if abs(speeds[i]) >= 2:
            ends = (i, (i + 1) % n)
            if moments[ends[0]] > moments[ends[1]]:
                ends = (ends[1], ends[0])
            zk_edges.append(
                ZkEdge(
                    abs(speeds[i]),
                    (node_of_vertex[ends[0]], node_of_vertex[ends[1]]),
                    (moments[ends[0]], moments[ends[1]]),
                )
            )
    zk_edges.sort(key=lambda e: (e.moment_interval, e.k, e.endpoints))
    return LabeledGraph(tuple(nodes), tuple(zk_edges))


def _node_label(node: GraphNode, base: Fraction):
    if isinstance(node, IsolatedPoint):
        return ("isolated", node.moment - base, node.weights)
    return ("surface", node.moment - base, node.area, node.genus)


def graphs_isomorphic(g1: LabeledGraph, g2: LabeledGraph, up_to_flip: bool = False) -> bool:
    """Node- and edge-preserving equality after translating moments to 0.

    With ``up_to_flip`` the comparison also tries g2 with the circle
    direction reversed (moments and weights negated).
    """
    if _isomorphic_translated(g1, g2):
        return True
    return up_to_flip and _isomorphic_translated(g1, flip_graph(g2))


def flip_graph(g: LabeledGraph) -> LabeledGraph:
    """The graph of the reversed circle direction: negate moments and weights."""
    nodes = tuple(
        IsolatedPoint(-n.moment, (-n.weights[0], -n.weights[1]))
        if isinstance(n, IsolatedPoint)
        else FatVertex(-n.moment, n.area, n.genus)
        for n in g.nodes
    )
    edges = tuple(
        ZkEdge(e.k, (e.endpoints[1], e.endpoints[0]),
               (-e.moment_interval[1], -e.moment_interval[0]))
        for e in g.edges
    )
    return LabeledGraph(nodes, edges)


def _isomorphic_translated(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if len(g1.nodes) != len(g2.nodes) or len(g1.edges) != len(g2.edges):
        return False
    labels1 = [_node_label(n, g1.min_moment) for n in g1.nodes]
    labels2 = [_node_label(n, g2.min_moment) for n in g2.nodes]
    if sorted(labels1) != sorted(labels2):
        return False

    by_label: dict[tuple, tuple[list[int], list[int]]] = {}
    for i, lab in enumerate(labels1):
        by_label.setdefault(lab, ([], []))[0].append(i)
    for j, lab in enumerate(labels2):
        by_label.setdefault(lab, ([], []))[1].append(j)

    def edge_multiset(g: LabeledGraph, relabel) -> list:
        return sorted(
            (e.k, tuple(sorted((relabel(e.endpoints[0]), relabel(e.endpoints[1])))))
            for e in g.edges
        )

    target = edge_multiset(g2, lambda j: j)
    groups = list(by_label.values())

    def assign(idx: int, mapping: dict[int, int]) -> bool:
        if idx == len(groups):
            return edge_multiset(g1, lambda i: mapping[i]) == target
        ones, twos = groups[idx]
        for perm in permutations(twos):
            for i, j in zip(ones, perm):
                mapping[i] = j
            if assign(idx + 1, mapping):
                return True
        return False

    return assign(0, {})


@dataclass(frozen=True)
class IsolatedFixed:
    """Isolated fixed point of even index 0, 2, or 4."""

    index: int

    def __post_init__(self):
        if self.index not in (0, 2, 4):
            raise GraphError(f"isolated fixed point index must be 0, 2, or 4, got {self.index!r}")


@dataclass(frozen=True)
class SurfaceFixed:
    """Fixed surface of index 0 (minimum) or 2 (maximum)."""

    index: int
    genus: int = 0

    def __post_init__(self):
        if self.index not in (0, 2):
            raise GraphError(f"fixed surface index must be 0 or 2, got {self.index!r}")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise GraphError(f"genus must be a nonnegative integer, got {self.genus!r}")


FixedComponent = IsolatedFixed | SurfaceFixed


@dataclass(frozen=True)
class FixedPointData:
    components: tuple[FixedComponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if sum(1 for c in self.components if c.index == 0) != 1:
            raise GraphError("exactly one fixed component must have index 0")


def fixed_point_data(g: LabeledGraph) -> FixedPointData:
    """Index data of the fixed components of a labeled graph.

    Isolated points get index 2 * (number of negative weights); surfaces
    get 0 at the minimum and 2 at the maximum.  A surface at any other
    level cannot occur for a moment-map projection and is an error.
    """
    lo, hi = g.min_moment, g.max_moment
    components: list[FixedComponent] = []
    for node in g.nodes:
        if isinstance(node, FatVertex):
            if node.moment == lo:
                components.append(SurfaceFixed(0, node.genus))
            elif node.moment == hi:
                components.append(SurfaceFixed(2, node.genus))
            else:
                raise InteriorFixedSurfaceError(
                    f"interior fixed surface impossible (moment {node.moment})"
                )
        else:
            components.append(IsolatedFixed(2 * sum(1 for w in node.weights if w < 0)))
    return FixedPointData(tuple(components))


def betti_numbers(data: FixedPointData) -> tuple[int, int, int, int, int]:
    """Betti numbers b0..b4 from perfect Morse theory on the moment map.

    An isolated point contributes 1 in degree equal to its index; a
    genus-g surface contributes 1, 2g, 1 in degrees index, index+1,
    index+2.
    """
    b = [0, 0, 0, 0, 0]
    for c in data.components:
        if isinstance(c, IsolatedFixed):
            b[c.index] += 1
        else:
            b[c.index] += 1
            b[c.index + 1] += 2 * c.genus
            b[c.index + 2] += 1
    return tuple(b)


@dataclass(frozen=True)
class Violation:
    """One reason a graph fails the toric-extension criterion."""

    kind: str  # "genus" or "level"
    moment: Fraction | None
    detail: str


@dataclass(frozen=True)
class ExtendabilityReport:
    extendable: bool
    violations: tuple[Violation, ...]


def check_extendable(g: LabeledGraph) -> ExtendabilityReport:
    """Decide whether the circle action of the graph extends to a toric one.

    Requires genus zero on every fixed surface and at most two non-free
    orbits on every level strictly between the moment extrema.  At such
    a level the non-free orbits are the isolated fixed points sitting on
    it plus one orbit for every isotropy sphere whose open moment
    interval crosses it (a sphere endpoint on the level is one of the
    fixed points and is not counted twice).  The count is constant
    between consecutive critical values, so checking the critical values
    and the midpoints between them decides every level.
    """
    violations: list[Violation] = []
    for node in g.nodes:
        if isinstance(node, FatVertex) and node.genus > 0:
            violations.append(
                Violation(
                    "genus",
                    node.moment,
                    f"fixed surface of genus {node.genus} at moment {node.moment}",
                )
            )

    lo, hi = g.min_moment, g.max_moment
    critical = sorted(
        {n.moment for n in g.nodes}
        | {m for e in g.edges for m in e.moment_interval}
    )
    candidates = list(critical)
    for left, right in zip(critical, critical[1:]):
        candidates.append((left + right) / 2)
    isolated_moments = [n.moment for n in g.nodes if isinstance(n, IsolatedPoint)]
    for level in sorted(candidates):
        if not lo < level < hi:
            continue
        count = sum(1 for e in g.edges if e.moment_interval[0] < level < e.moment_interval[1])
        count += sum(1 for m in isolated_moments if m == level)
        if count > 2:
            violations.append(
                Violation("level", level, f"{count} non-free orbits at level {level}")
            )
    return ExtendabilityReport(not violations, tuple(violations))
