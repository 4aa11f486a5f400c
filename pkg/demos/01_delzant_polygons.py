"""Delzant polygons: construction, edge data, and the determinant test.

A convex rational polygon is Delzant when the primitive inward normals
of consecutive edges always form a positively oriented basis of the
integer lattice, i.e. det(u_i, u_{i+1}) = 1 cyclically.  These polygons
are exactly the moment images of toric symplectic 4-manifolds.

Run:  python3 demos/01_delzant_polygons.py
"""

from delzant import edge_data, is_delzant, make_polygon


def show(name, poly):
    print(f"{name}:")
    print("  vertices:", ", ".join(f"({v.x}, {v.y})" for v in poly.vertices))
    for e in edge_data(poly):
        print(
            f"  edge {e.tail_index}: direction ({e.direction.x}, {e.direction.y}),"
            f" inward normal ({e.inward_normal.x}, {e.inward_normal.y}),"
            f" lattice length {e.lattice_length}"
        )
    report = is_delzant(poly)
    print("  Delzant:", report.is_delzant)
    for i, det in report.failures:
        print(f"    normals of edges {i} and {(i + 1) % len(poly)} have determinant {det}")
    print()


# The unit square: the moment image of the product of two equal spheres.
show("unit square", make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)]))

# The standard simplex is Delzant (the projective plane) ...
show("unit triangle", make_polygon([(0, 0), (1, 0), (0, 1)]))

# ... but stretching one leg breaks the corner at the hypotenuse:
# det((-1,-2), (1,0)) = 2 means that vertex is a Z_2 orbifold point.
show("stretched triangle", make_polygon([(0, 0), (2, 0), (0, 1)]))

# Vertices may be arbitrary rationals; input order (clockwise here) is
# normalized on construction.
show(
    "clockwise trapezoid with rational vertices",
    make_polygon([("0", "1"), ("3/2", "1"), ("5/2", "0"), ("0", "0")]),
)
