"""Every Delzant quadrilateral is a Hirzebruch trapezoid.

The standard trapezoid with parameters (a, b, m) has vertices (0, 0),
(a + (m/2)b, 0), (a - (m/2)b, b), (0, b).  Any Delzant 4-gon can be
moved onto exactly one of these by an affine map x -> Rx + v with R an
integer matrix of determinant +-1, and `classify_quadrilateral` finds
both the parameters and the witness map.

Run:  python3 demos/02_trapezoid_classification.py
"""

from fractions import Fraction
from random import Random

from delzant import (
    HirzebruchParams,
    RatVec2,
    UnimodularAffine,
    apply_map,
    classify_quadrilateral,
    congruent,
    make_polygon,
    standard_trapezoid,
)

params = HirzebruchParams(Fraction(5, 2), 1, 2)
trap = standard_trapezoid(params)
print("standard trapezoid (a=5/2, b=1, m=2):")
print(" ", ", ".join(f"({v.x}, {v.y})" for v in trap.vertices))

# Scramble it with a deterministic "random" lattice-affine map, then
# recover the parameters and a map back to standard position.
rng = Random(7)
while True:
    entries = [rng.randint(-9, 9) for _ in range(4)]
    if entries[0] * entries[3] - entries[1] * entries[2] in (1, -1):
        break
scramble = UnimodularAffine(
    ((entries[0], entries[1]), (entries[2], entries[3])),
    RatVec2(Fraction(-7, 3), Fraction(11, 2)),
)
hidden = apply_map(trap, scramble)
print("\nafter the map x -> Rx + v with R =", scramble.linear, "v =",
      (str(scramble.translation.x), str(scramble.translation.y)))
print(" ", ", ".join(f"({v.x}, {v.y})" for v in hidden.vertices))

recovered, witness = classify_quadrilateral(hidden)
print("\nrecovered parameters:", (str(recovered.a), str(recovered.b), recovered.m))
print("witness maps the scrambled polygon back onto the standard one:",
      apply_map(hidden, witness) == standard_trapezoid(recovered))

# Congruence testing works on any pair of polygons and produces a
# witness when one exists.
square = make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
rect = make_polygon([(0, 0), (2, 0), (2, 1), (0, 1)])
print("\nunit square congruent to a 2 x 1 rectangle:", congruent(square, rect) is not None)
tall = make_polygon([(0, 0), (1, 0), (1, 2), (0, 2)])
w = congruent(rect, tall)
print("2 x 1 rectangle congruent to the 1 x 2 rectangle:", w is not None,
      "(witness linear part", w.linear, ")")

# The trapezoids with the same (a, b) but different m are never
# congruent: m is read off the lattice lengths of the parallel sides.
t1 = standard_trapezoid(HirzebruchParams(2, 1, 1))
t3 = standard_trapezoid(HirzebruchParams(2, 1, 3))
print("trapezoid m=1 congruent to trapezoid m=3:", congruent(t1, t3) is not None)
