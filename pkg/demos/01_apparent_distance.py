"""Apparent distance of polynomials and of their coefficient hypermatrices.

Walks through the literal shift-based definition for a polynomial in two
variables, then the hypercolumn recursion on vectors, matrices and a
three-dimensional orbit hypermatrix.
"""

from __future__ import annotations

import numpy as np

from abelcodes import Shape, afford_orbits, apparent_distance
from abelcodes.oracle import AmbientPolynomial, apparent_distance_poly, prime_field


def show_table(res, k):
    print(f"  direction {k}:  b  omega  d*(H)  product")
    for (kk, b), (om, dh) in sorted(res.table.items()):
        if kk == k:
            print(f"               {b:2d}  {om:5d}  {dh:5d}  {(om + 1) * dh:7d}")


def main():
    # f = x2^3 - (x1 + 1) x2 over F_3, r = (2, 4)
    sh = Shape(3, (2, 4))
    f = AmbientPolynomial(sh, prime_field(3), {(0, 3): 1, (1, 1): 2, (0, 1): 2})
    print("f =", f.coeffs)
    print("Camion's d*(f) over all shifts:", apparent_distance_poly(f))
    print("d* of its coefficient hypermatrix:", apparent_distance(f.support).value)
    print()

    v = np.array([2, 0, 0, 1]) != 0
    res = apparent_distance(v)
    print("vector (2,0,0,1): d* =", res.value, "Ip =", sorted(res.involved_pairs))

    m = np.array([[1, 0, 0, 0, 0], [1, 1, 0, 0, 1], [1, 1, 0, 0, 1]], bool)
    res = apparent_distance(m)
    print("3x5 matrix: d* =", res.value, "per direction", res.per_direction, "Ip =", sorted(res.involved_pairs))
    show_table(res, 2)
    print()

    d = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 0), (1, 2, 1), (1, 2, 2), (1, 1, 0),
         (0, 1, 1), (1, 0, 2), (0, 1, 2)]
    m3 = afford_orbits(d, Shape(2, (3, 3, 5)))
    res = apparent_distance(m3)
    print("3x3x5 orbit hypermatrix: d* =", res.value, "per direction", res.per_direction)
    for k in (1, 2, 3):
        show_table(res, k)
    print("Ip =", sorted(res.involved_pairs))


if __name__ == "__main__":
    main()
