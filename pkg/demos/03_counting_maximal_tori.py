"""Counting conjugacy classes of maximal tori.

A Hirzebruch trapezoid with parameters (a, b, m) is the moment image of
a toric structure on the product of two spheres when m is even, and on
the one-point blow-up of the projective plane when m is odd.  Distinct
values of m give non-congruent polygons, hence non-conjugate maximal
tori in the Hamiltonian symplectomorphism group; the count is

    spheres with areas a >= b:            ceil(a / b)
    blow-up with areas l > e:             ceil(e / (l - e))

Run:  python3 demos/03_counting_maximal_tori.py
"""

from fractions import Fraction

from delzant import (
    BlowUp,
    SphereProduct,
    count_tori,
    enumerate_tori,
    manifold_of,
    parity_reduce,
    same_symplectic_class,
)

print("sphere products (a, b) and their torus counts:")
for a, b in [(1, 1), (Fraction(3, 2), 1), (2, 1), (Fraction(5, 2), 1), (3, 1), (7, 2)]:
    manifold = SphereProduct(a, b)
    classes = enumerate_tori(manifold)
    print(f"  a={a}, b={b}:  ceil(a/b) = {count_tori(manifold)}  "
          f"m in {{{', '.join(str(p.m) for p in classes)}}}")

print("\nblow-ups (l, e) and their torus counts:")
for l, e in [(2, 1), (3, 2), (Fraction(5, 2), Fraction(3, 2)), (10, 9)]:
    manifold = BlowUp(l, e)
    classes = enumerate_tori(manifold)
    print(f"  l={l}, e={e}:  ceil(e/(l-e)) = {count_tori(manifold)}  "
          f"m in {{{', '.join(str(p.m) for p in classes)}}}")

# The count jumps exactly when the ratio crosses an integer: with the
# strict inequality k < a/b, the ratio 3 yields three classes and
# 3 + 1/100 yields four.
print("\nnear the integer boundary:")
for a in (Fraction(299, 100), Fraction(3), Fraction(301, 100)):
    print(f"  a/b = {a}: {count_tori(SphereProduct(a, 1))} classes")

# Each enumerated class maps back to the manifold it came from, and the
# even/odd reduction of m is what the manifold actually sees.
manifold = SphereProduct(Fraction(5, 2), 1)
for p in enumerate_tori(manifold):
    assert manifold_of(p) == manifold
    assert manifold_of(parity_reduce(p)) == manifold
print("\nall classes of (5/2, 1) map back to it; parity reduction agrees.")

# No two differently-labeled manifolds are symplectomorphic: the area
# vector is pinned by the finitely many automorphisms of the
# intersection form.
print("spheres (2,1) vs (3,1) symplectomorphic:",
      same_symplectic_class(SphereProduct(2, 1), SphereProduct(3, 1)))
print("spheres (2,1) vs blow-up (5/2, 3/2) symplectomorphic:",
      same_symplectic_class(SphereProduct(2, 1), BlowUp(Fraction(5, 2), Fraction(3, 2))))
