"""Multivariate BCH bounds, codes and the dimension bound."""

from __future__ import annotations

from abelcodes import BchSpec, Shape, apparent_distance_alpha, bch_bound, bch_code, bch_dimension_bound, code_from_orbits
from abelcodes.codes import bch_runs, rs_exact


def main():
    sh = Shape(2, (5, 7))
    for name, reps in [("D1", [(0, 1), (1, 1)]), ("D2", [(0, 1), (1, 1), (0, 0), (0, 3)])]:
        c = code_from_orbits(sh, reps)
        print(f"{name}: runs {bch_runs(c)}  BCH bound {bch_bound(c)}  d*_alpha {apparent_distance_alpha(c)}")

    c1 = bch_code(sh, BchSpec((2,), {2: 3}, {2: 1}))
    print("B(alpha, {2}, {3}, {1}) has D =", c1.defining_reps())

    sh = Shape(2, (3, 5, 5))
    spec = BchSpec((2, 3), {2: 2, 3: 2}, {2: 0, 3: 0})
    c3 = bch_code(sh, spec)
    print("C3: D =", c3.defining_reps())
    print(f"    dimension {c3.dimension}, bound {bch_dimension_bound(sh, spec)} (vacuous),"
          f" d*_alpha {apparent_distance_alpha(c3)} >= {spec.designed_distance()}")

    print()
    print("r_k = q - 1: closed form (delta_k, dimension)")
    for q, r in [(3, (2, 4)), (4, (3, 5)), (5, (4, 3))]:
        for dk in range(2, q):
            spec = BchSpec((1,), {1: dk}, {1: 0})
            print(f"  q={q} r={r} delta={dk}: {rs_exact(Shape(q, r), spec)}")


if __name__ == "__main__":
    main()
