"""Labeled graphs of circle subactions, Betti numbers, extendability.

Fixing a primitive direction xi turns the torus action over a Delzant
polygon into a circle action with moment map <x, xi>.  The fixed-point
data becomes a small labeled graph; two polygons inducing the same
graph carry equivariantly symplectomorphic circle actions.

The classical instance: the trapezoids with parameters m - 1 and m + 1
(same a and b) admit slanted models whose vertical projections give the
*same* graph, which is why the manifold only sees m mod 2.

Run:  python3 demos/04_circle_action_graphs.py
"""

from fractions import Fraction

from delzant import (
    HirzebruchParams,
    IntVec2,
    betti_numbers,
    check_extendable,
    circle_graph,
    congruent,
    fixed_point_data,
    graphs_isomorphic,
    make_polygon,
    standard_trapezoid,
)
from delzant.jsonio import graph_to_dot

trap = standard_trapezoid(HirzebruchParams(2, 1, 2))
print("trapezoid (a=2, b=1, m=2), direction xi = (1, 0):")
g = circle_graph(trap, IntVec2(1, 0))
for node in g.nodes:
    print(" ", node)
for edge in g.edges:
    print(" ", edge)
print("fixed-point indices:", [c.index for c in fixed_point_data(g).components])
print("Betti numbers:", betti_numbers(fixed_point_data(g)))
print("extends to a toric action:", check_extendable(g).extendable)

# Same polygon, perpendicular direction: both horizontal edges are now
# fixed surfaces and there is no isotropy sphere.
g_vert = circle_graph(trap, IntVec2(0, 1))
print("\nsame trapezoid, xi = (0, 1):")
for node in g_vert.nodes:
    print(" ", node)
print("Betti numbers:", betti_numbers(fixed_point_data(g_vert)))

# The two slanted quadrilaterals below are congruent to the standard
# trapezoids with m + 1 and m - 1 respectively, yet project to the same
# graph under xi = (0, 1).
m, a, b = 3, Fraction(7, 2), Fraction(1)
left = make_polygon([(0, 0), (b, b), (b, a - (m - 1) * b / 2), (0, a + (m + 1) * b / 2)])
right = make_polygon([(0, b), (b, 0), (b, a - (m - 1) * b / 2), (0, a + (m + 1) * b / 2)])
print(f"\nslanted pair for m={m}, a={a}, b={b}:")
print("  left  ~ standard m+1:",
      congruent(left, standard_trapezoid(HirzebruchParams(a, b, m + 1))) is not None)
print("  right ~ standard m-1:",
      congruent(right, standard_trapezoid(HirzebruchParams(a, b, m - 1))) is not None)
gl = circle_graph(left, IntVec2(0, 1))
gr = circle_graph(right, IntVec2(0, 1))
print("  graphs isomorphic:", graphs_isomorphic(gl, gr))
print("  isotropy spheres:", [(f"Z_{e.k}", str(e.moment_interval[0]), str(e.moment_interval[1]))
                              for e in gl.edges])

print("\nDOT rendering of the shared graph:\n")
print(graph_to_dot(gl))
