"""Designing codes of length 35 and multiplying the dimension of a cyclic code.

For each target apparent distance the search returns the largest codes; the
true minimum distance is then read off by enumerating the code.
"""

from __future__ import annotations

from abelcodes import Shape, apparent_distance_code, code_from_orbits, hd_search, multiply_dimension
from abelcodes import BudgetExceeded
from abelcodes.oracle import min_distance_bruteforce


def describe(code):
    res = apparent_distance_code(code)
    try:
        d = min_distance_bruteforce(code)
    except BudgetExceeded:
        d = "(too many codewords)"
    return f"dim {code.dimension:2d}  d* {res.value}  d {d}  D = {code.defining_reps()}"


def main():
    for r in [(35,), (5, 7)]:
        sh = Shape(2, r)
        print(f"A_2{r}")
        for target in range(2, 9):
            res = hd_search(sh, target)
            print(f"  target {target}: best dimension {res.dimension} ({res.evaluated} evaluations)")
            print("    " + describe(res.codes[0]))
    print()

    c = code_from_orbits(Shape(2, (55,)), [(1,), (5,)])
    res = multiply_dimension(c, 3)
    print(f"cyclic code of length 55: dim {c.dimension}, d* {res.d_star}")
    print(f"Z_3 x D in A_2(3, 55): length {res.code.length}, dim {res.code.dimension}, "
          f"d* {apparent_distance_code(res.code).value}")


if __name__ == "__main__":
    main()
