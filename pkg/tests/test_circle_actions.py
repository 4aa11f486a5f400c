"""Labeled graphs, Betti numbers, and the toric-extension criterion."""

from fractions import Fraction
from random import Random

import pytest

from delzant import (
    CircleDirection,
    FatVertex,
    FixedPointData,
    HirzebruchParams,
    IntVec2,
    IsolatedFixed,
    IsolatedPoint,
    LabeledGraph,
    SurfaceFixed,
    UnimodularAffine,
    ZkEdge,
    apply_map,
    betti_numbers,
    check_extendable,
    circle_graph,
    fixed_point_data,
    flip_graph,
    graphs_isomorphic,
    make_polygon,
    second_betti_from_edges,
    standard_trapezoid,
)
from delzant.errors import (
    GraphError,
    InteriorFixedSurfaceError,
    NonPrimitiveDirectionError,
    NotDelzantError,
)
from delzant.lattice import mat_transpose, mat_vec

from support import primitive_directions, rand_params, rand_unimodular_linear

UNIT_SQUARE = make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def test_direction_must_be_primitive():
    with pytest.raises(NonPrimitiveDirectionError):
        CircleDirection(IntVec2(2, 4))
    with pytest.raises(NonPrimitiveDirectionError):
        CircleDirection(IntVec2(0, 0))
    CircleDirection(IntVec2(-2, 3))


def test_circle_graph_requires_delzant():
    with pytest.raises(NotDelzantError):
        circle_graph(make_polygon([(0, 0), (2, 0), (0, 1)]), IntVec2(0, 1))


def test_square_vertical_direction_two_surfaces():
    g = circle_graph(UNIT_SQUARE, IntVec2(0, 1))
    assert g.nodes == (FatVertex(0, 1, 0), FatVertex(1, 1, 0))
    assert g.edges == ()


def test_trapezoid_horizontal_direction():
    g = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(1, 0))
    assert g.nodes == (
        FatVertex(0, 1, 0),
        IsolatedPoint(1, (-1, 2)),
        IsolatedPoint(3, (-2, -1)),
    )
    assert g.edges == (ZkEdge(2, (1, 2), (Fraction(1), Fraction(3))),)


def test_trapezoid_vertical_direction():
    g = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(0, 1))
    assert g.nodes == (FatVertex(0, 3, 0), FatVertex(1, 1, 0))
    assert g.edges == ()


def test_square_diagonal_direction_four_isolated_points():
    g = circle_graph(UNIT_SQUARE, IntVec2(1, 1))
    assert [n.moment for n in g.nodes] == [0, 1, 1, 2]
    assert g.nodes[0].weights == (1, 1)
    assert g.nodes[3].weights == (-1, -1)
    assert g.nodes[1].weights == (-1, 1) and g.nodes[2].weights == (-1, 1)


def test_extremal_nodes_unique_and_weight_signs():
    rng = Random(30)
    for _ in range(25):
        poly = standard_trapezoid(rand_params(rng))
        for xi in primitive_directions(2):
            g = circle_graph(poly, xi)
            moments = [n.moment for n in g.nodes]
            assert moments.count(min(moments)) == 1
            assert moments.count(max(moments)) == 1
            for n in g.nodes:
                if not isinstance(n, IsolatedPoint):
                    continue
                if n.moment == min(moments):
                    assert n.weights[0] > 0
                elif n.moment == max(moments):
                    assert n.weights[1] < 0
                else:
                    assert n.weights[0] < 0 < n.weights[1]


def test_graph_isomorphism_translation_only():
    g = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(1, 0))
    assert graphs_isomorphic(g, g)
    shift = Fraction(7, 3)
    shifted = LabeledGraph(
        tuple(
            IsolatedPoint(n.moment + shift, n.weights)
            if isinstance(n, IsolatedPoint)
            else FatVertex(n.moment + shift, n.area, n.genus)
            for n in g.nodes
        ),
        tuple(
            ZkEdge(e.k, e.endpoints, (e.moment_interval[0] + shift, e.moment_interval[1] + shift))
            for e in g.edges
        ),
    )
    assert graphs_isomorphic(g, shifted)


def test_graph_isomorphism_distinguishes_labels():
    g1 = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(1, 0))
    g2 = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(0, 1))
    assert not graphs_isomorphic(g1, g2)
    g3 = circle_graph(standard_trapezoid(HirzebruchParams(3, 1, 2)), IntVec2(1, 0))
    assert not graphs_isomorphic(g1, g3)


def test_graph_isomorphism_needs_matching_edge_structure():
    # same node multiset, different wiring of the isotropy sphere
    nodes = (
        IsolatedPoint(0, (1, 1)),
        IsolatedPoint(1, (-1, 2)),
        IsolatedPoint(1, (-1, 2)),
        IsolatedPoint(2, (-1, -1)),
    )
    g_a = LabeledGraph(nodes, (ZkEdge(2, (0, 3), (Fraction(0), Fraction(2))),))
    g_b = LabeledGraph(nodes, (ZkEdge(2, (1, 3), (Fraction(1), Fraction(2))),))
    assert not graphs_isomorphic(g_a, g_b)
    assert graphs_isomorphic(g_b, g_b)


def _graph_signature(g: LabeledGraph):
    """Exact content up to node reindexing (moments not translated)."""
    nodes = sorted(repr(n) for n in g.nodes)
    edges = sorted(
        (e.k, e.moment_interval, repr(g.nodes[e.endpoints[0]]), repr(g.nodes[e.endpoints[1]]))
        for e in g.edges
    )
    return nodes, edges


def test_direction_flip_negates_moments_and_weights():
    rng = Random(31)
    for _ in range(20):
        poly = standard_trapezoid(rand_params(rng))
        for xi in (IntVec2(1, 0), IntVec2(1, 2), IntVec2(-1, 3)):
            g = circle_graph(poly, xi)
            h = circle_graph(poly, -xi)
            assert _graph_signature(h) == _graph_signature(flip_graph(g))
            assert graphs_isomorphic(g, h, up_to_flip=True)


def test_flip_not_identified_by_default():
    g = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(1, 0))
    h = circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(-1, 0))
    assert not graphs_isomorphic(g, h)
    assert graphs_isomorphic(g, h, up_to_flip=True)


def test_equivariance_under_orientation_preserving_maps():
    rng = Random(32)
    for _ in range(30):
        poly = standard_trapezoid(rand_params(rng))
        while True:
            linear = rand_unimodular_linear(rng, 6)
            if linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0] == 1:
                break
        t = UnimodularAffine(linear)
        xi_prime = IntVec2(1, 2)
        xi = mat_vec(mat_transpose(linear), xi_prime)
        g = circle_graph(poly, xi)
        h = circle_graph(apply_map(poly, t), xi_prime)
        assert graphs_isomorphic(g, h)


def test_fixed_point_data_square_and_trapezoid():
    square_data = fixed_point_data(circle_graph(UNIT_SQUARE, IntVec2(0, 1)))
    assert square_data.components == (SurfaceFixed(0, 0), SurfaceFixed(2, 0))
    trap_data = fixed_point_data(
        circle_graph(standard_trapezoid(HirzebruchParams(2, 1, 2)), IntVec2(1, 0))
    )
    assert trap_data.components == (SurfaceFixed(0, 0), IsolatedFixed(2), IsolatedFixed(4))


def test_any_trapezoid_vertical_direction_gives_two_surfaces():
    rng = Random(35)
    for _ in range(25):
        g = circle_graph(standard_trapezoid(rand_params(rng)), IntVec2(0, 1))
        data = fixed_point_data(g)
        assert data.components == (SurfaceFixed(0, 0), SurfaceFixed(2, 0))


def test_fixed_point_data_rejects_interior_surface():
    g = LabeledGraph(
        (
            IsolatedPoint(0, (1, 1)),
            FatVertex(1, 1, 0),
            IsolatedPoint(2, (-1, -1)),
        )
    )
    with pytest.raises(InteriorFixedSurfaceError):
        fixed_point_data(g)


@pytest.mark.parametrize(
    "components,expected",
    [
        ((SurfaceFixed(0, 0), SurfaceFixed(2, 0)), (1, 0, 2, 0, 1)),
        ((SurfaceFixed(0, 0), IsolatedFixed(2), IsolatedFixed(4)), (1, 0, 2, 0, 1)),
        ((SurfaceFixed(0, 1), SurfaceFixed(2, 1)), (1, 2, 2, 2, 1)),
    ],
)
def test_betti_numbers_table(components, expected):
    assert betti_numbers(FixedPointData(components)) == expected


def test_betti_numbers_match_edge_count():
    rng = Random(33)
    for _ in range(15):
        poly = standard_trapezoid(rand_params(rng))
        for xi in primitive_directions(2):
            g = circle_graph(poly, xi)
            b = betti_numbers(fixed_point_data(g))
            assert b == (1, 0, 2, 0, 1)
            interior = sum(
                1
                for n in g.nodes
                if isinstance(n, IsolatedPoint) and n.weights[0] < 0 < n.weights[1]
            )
            surfaces = sum(1 for n in g.nodes if isinstance(n, FatVertex))
            assert b[2] == interior + surfaces == second_betti_from_edges(poly)


def test_extendable_for_trapezoid_graphs():
    rng = Random(34)
    for _ in range(10):
        poly = standard_trapezoid(rand_params(rng))
        for xi in primitive_directions(3):
            report = check_extendable(circle_graph(poly, xi))
            assert report.extendable, report.violations


def test_extendable_fails_on_three_shared_spheres():
    g = LabeledGraph(
        (IsolatedPoint(0, (1, 1)), IsolatedPoint(1, (-1, -1))),
        tuple(ZkEdge(2, (0, 1), (Fraction(0), Fraction(1))) for _ in range(3)),
    )
    report = check_extendable(g)
    assert not report.extendable
    assert [(v.kind, v.moment) for v in report.violations] == [("level", Fraction(1, 2))]
    assert "3 non-free orbits" in report.violations[0].detail


def test_extendable_fails_on_positive_genus():
    g = LabeledGraph((FatVertex(0, 1, 1), FatVertex(1, 1, 0)))
    report = check_extendable(g)
    assert not report.extendable
    assert report.violations[0].kind == "genus"


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        LabeledGraph((IsolatedPoint(0, (1, 1)), IsolatedPoint(0, (1, 1))))
    with pytest.raises(GraphError):
        LabeledGraph(
            (IsolatedPoint(0, (1, 1)), IsolatedPoint(1, (-1, -1))),
            (ZkEdge(2, (0, 1), (Fraction(0), Fraction(2))),),
        )
    with pytest.raises(GraphError):
        ZkEdge(1, (0, 1), (Fraction(0), Fraction(1)))
    with pytest.raises(GraphError):
        IsolatedPoint(0, (0, 1))
    with pytest.raises(GraphError):
        FatVertex(0, 0, 0)


def test_weights_sorted_on_construction():
    assert IsolatedPoint(0, (2, -1)).weights == (-1, 2)
