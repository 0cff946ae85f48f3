from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from abelcodes.algebra import Shape, orbit_partition, root_class_representatives
from abelcodes.codes import (
    BchSpec,
    apparent_distance_alpha,
    apparent_distance_code,
    apply_multiplier,
    bch_bound,
    bch_code,
    bch_dimension_bound,
    code_from_json,
    code_from_orbits,
    hd_search,
    is_column_constant,
    multiply_dimension,
    rs_exact,
)
from abelcodes.errors import BudgetExceeded, ValidationError, ZeroCodeError
from abelcodes.hypermatrix import full
from abelcodes.oracle import min_distance_bruteforce

S57 = Shape(2, (5, 7))
D4 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 0), (1, 2, 1), (1, 2, 2), (1, 0, 1),
      (0, 1, 1), (1, 0, 2), (0, 1, 2)]


def test_code_from_orbits():
    assert code_from_orbits(S57, []).dimension == 35
    assert code_from_orbits(S57, [(0, 0), (1, 0), (0, 3)]).dimension == 27
    assert code_from_orbits(S57, [(1, 0), (0, 3)]).dimension == 28
    c = code_from_json({"q": 2, "r": [5, 7], "orbit_reps": [[0, 0], [1, 0], [0, 3]]})
    assert c.defining_reps() == [(0, 0), (0, 3), (1, 0)]
    with pytest.raises(ValidationError):
        code_from_json({"q": 2})


def test_apparent_distance_alpha():
    assert apparent_distance_alpha(code_from_orbits(S57, [])) == 1
    assert apparent_distance_alpha(code_from_orbits(Shape(2, (3, 3, 5)), D4)) == 6
    assert apparent_distance_alpha(code_from_orbits(Shape(2, (3, 9)), [(1, 0), (0, 1), (1, 3), (1, 6)])) == 3
    with pytest.raises(ZeroCodeError):
        apparent_distance_alpha(code_from_orbits(Shape(2, (3,)), [(0,), (1,)]))


def test_apparent_distance_code_35():
    c = code_from_orbits(Shape(2, (35,)), [(1,), (5,)])
    res = apparent_distance_code(c)
    assert res.value == 5
    assert {k.multiplier: v for k, v in res.per_class.items()} == {(1,): 5, (3,): 5}
    assert apply_multiplier(c, (3,)).defining_reps() == [(3,), (15,)]


def test_apparent_distance_code_symmetric():
    # D = Q(0) is fixed by every multiplier
    c = code_from_orbits(S57, [(0, 0), (0, 1), (0, 3)])
    assert len(set(apparent_distance_code(c).per_class.values())) == 1


def test_apparent_distance_code_d5():
    res = apparent_distance_code(code_from_orbits(S57, [(0, 0), (1, 0), (0, 3)]))
    assert res.value == 4
    assert res.optimized_roots


def test_bch_bound():
    d1 = code_from_orbits(S57, [(0, 1), (1, 1)])
    d2 = code_from_orbits(S57, [(0, 1), (1, 1), (0, 0), (0, 3)])
    assert bch_bound(d1) == 3
    assert bch_bound(d2) == 6
    assert bch_bound(code_from_orbits(S57, [])) == 1


def test_bch_code_examples():
    c3 = bch_code(Shape(2, (3, 5, 5)), BchSpec((2, 3), {2: 2, 3: 2}, {2: 0, 3: 0}))
    assert c3.defining_reps() == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1), (1, 0, 2),
                                  (1, 1, 0), (1, 2, 0)]
    c1 = bch_code(S57, BchSpec((2,), {2: 3}, {2: 1}))
    assert c1 == code_from_orbits(S57, [(0, 1), (1, 1)])


def test_bch_code_full_run():
    sh = Shape(2, (3, 7))
    c = bch_code(sh, BchSpec((2,), {2: 7}, {2: 1}))
    assert bch_bound(c) == 7
    assert apparent_distance_alpha(c) >= 7


def test_bch_spec_validation():
    with pytest.raises(ValidationError):
        BchSpec((), {}, {})
    with pytest.raises(ValidationError):
        bch_code(S57, BchSpec((2,), {2: 8}, {}))
    with pytest.raises(ValidationError):
        bch_code(S57, BchSpec((3,), {3: 2}, {}))
    with pytest.raises(ValidationError):
        BchSpec.from_json({"gamma": [1]})
    assert BchSpec.from_json({"gamma": [2], "delta": {"2": 3}, "b": {"2": 1}}) == BchSpec((2,), {2: 3}, {2: 1})


def test_bch_dimension_bound():
    # reduces to r - m (delta - 1) when every other length is 1
    sh = Shape(2, (1, 15, 1))
    assert bch_dimension_bound(sh, BchSpec((2,), {2: 2}, {})) == 15 - 4
    sh = Shape(2, (3, 5, 5))
    assert bch_dimension_bound(sh, BchSpec((2, 3), {2: 2, 3: 2}, {})) == -45


def test_rs_exact():
    assert rs_exact(Shape(4, (3, 5)), BchSpec((1,), {1: 2}, {1: 0})) == (2, 10)
    assert rs_exact(Shape(3, (2, 4)), BchSpec((1,), {1: 2}, {})) == (2, 4)
    assert rs_exact(Shape(5, (4, 3)), BchSpec((1,), {1: 4}, {1: 2})) == (4, 3)
    with pytest.raises(ValidationError):
        rs_exact(Shape(2, (5, 7)), BchSpec((1,), {1: 2}, {}))


def test_is_column_constant():
    sh = Shape(2, (3, 7))
    assert is_column_constant(code_from_orbits(sh, [(0, 1), (1, 1)]).hypermatrix(), 2)
    assert not is_column_constant(code_from_orbits(S57, [(0, 0), (1, 0), (0, 3)]), 2)
    assert is_column_constant(full(S57), 2)


def test_multiply_dimension_55():
    c = code_from_orbits(Shape(2, (55,)), [(1,), (5,)])
    assert c.dimension == 25
    res = multiply_dimension(c, 3)
    assert res.code.length == 165
    assert res.code.dimension == 75 == 3 * c.dimension
    assert res.d_star == 7
    assert apparent_distance_code(res.code).value == 7
    assert is_column_constant(res.code, 2)


def test_multiply_dimension_identity_and_errors():
    c = code_from_orbits(Shape(2, (7,)), [(1,)])
    res = multiply_dimension(c, 1)
    assert res.code.dimension == c.dimension
    assert np.array_equal(res.code.defining_mask[0], c.defining_mask)
    with pytest.raises(ValidationError):
        multiply_dimension(c, 2)  # gcd(2, 14) != 1 for q = 2
    with pytest.raises(ZeroCodeError):
        multiply_dimension(code_from_orbits(Shape(2, (3,)), [(0,), (1,)]), 5)


def test_multiply_dimension_remaps_to_optimized_root():
    # the source is remapped when needed, so its standard-root value is d*(C)
    rng = random.Random(7)
    for r in [7, 9, 15, 21]:
        sh = Shape(2, (r,))
        part = orbit_partition(sh)
        reps = [o.rep for o in part.orbits if rng.random() < 0.5][: len(part.orbits) - 1]
        c = code_from_orbits(sh, reps)
        if c.is_zero:
            continue
        res = multiply_dimension(c, 3 if r % 3 else 5)
        assert res.code.dimension == (3 if r % 3 else 5) * c.dimension
        assert apparent_distance_code(res.code).value == apparent_distance_code(c).value
        assert apparent_distance_alpha(res.source) == res.d_star


def test_hd_search_57():
    h4 = hd_search(S57, 4)
    assert h4.dimension == 28
    assert code_from_orbits(S57, [(1, 0), (0, 3)]) in h4.codes
    h6 = hd_search(S57, 6)
    assert h6.dimension == 17
    assert code_from_orbits(S57, [(0, 1), (0, 3), (1, 3)]) in h6.codes


def _exhaustive_best(shape, target):
    part = orbit_partition(shape)
    best, winners = None, []
    for k in range(len(part.orbits)):
        for sub in itertools.combinations([o.rep for o in part.orbits], k):
            c = code_from_orbits(shape, sub)
            if apparent_distance_code(c).value >= target:
                if best is None or c.dimension > best:
                    best, winners = c.dimension, [c]
                elif c.dimension == best:
                    winners.append(c)
    return best, winners


@pytest.mark.parametrize("q,r,target", [(2, (5, 7), 2), (2, (3, 5), 2), (2, (3, 5), 3), (3, (2, 4), 2),
                                        (3, (2, 4), 4), (2, (21,), 3)])
def test_hd_search_matches_exhaustive(q, r, target):
    shape = Shape(q, r)
    best, winners = _exhaustive_best(shape, target)
    res = hd_search(shape, target)
    assert res.dimension == best
    assert set(res.codes) == set(winners)


def test_hd_search_budget_and_empty():
    with pytest.raises(BudgetExceeded):
        hd_search(S57, 8, budget=3)
    res = hd_search(Shape(2, (3,)), 4)
    assert res.codes == [] and res.dimension is None
    with pytest.raises(ValidationError):
        hd_search(S57, 1)


def test_root_class_count_used():
    assert len(apparent_distance_code(code_from_orbits(S57, [(0, 1)])).per_class) == \
        len(root_class_representatives(S57))


def test_multiply_dimension_remap_needed():
    # D = Q(3) in A_2(31): the standard root gives 2 but multiplier 3 gives 3
    c = code_from_orbits(Shape(2, (31,)), [(3,)])
    assert apparent_distance_alpha(c) == 2
    res = multiply_dimension(c, 3)
    assert res.multiplier == 3 and res.d_star == 3
    assert apparent_distance_alpha(res.code) == 3
    assert res.code.dimension == 3 * c.dimension


def test_hd_search_beats_five_orbit_code():
    # four orbits already give d* = 8 at dimension 15, above the five-orbit code of dimension 12
    res = hd_search(S57, 8)
    assert res.dimension == 15
    best = code_from_orbits(S57, [(0, 0), (0, 1), (1, 0), (1, 3)])
    assert best in res.codes
    assert apparent_distance_code(best).value == 8
    assert min_distance_bruteforce(best) == 8
    assert code_from_orbits(S57, [(0, 0), (1, 0), (0, 1), (0, 3), (1, 3)]).dimension == 12
