from __future__ import annotations

import math

import numpy as np
import pytest

from abelcodes.algebra import (
    Shape,
    cyclotomic_coset,
    mult_order,
    orbit_partition,
    q_orbit,
    root_class_bound,
    root_class_representatives,
    unit_grid,
)
from abelcodes.errors import ValidationError


def test_shape_validation():
    assert Shape(4, (3, 5)).p == 2
    with pytest.raises(ValidationError):
        Shape(6, (5,))
    with pytest.raises(ValidationError):
        Shape(2, (4, 3))
    with pytest.raises(ValidationError):
        Shape(3, (0,))


def test_flat_order_is_lexicographic():
    sh = Shape(2, (3, 5, 7))
    idx = list(sh.indices())
    assert idx == sorted(idx)
    assert [sh.flat(a) for a in idx] == list(range(sh.size))
    assert all(sh.unflat(sh.flat(a)) == a for a in idx)


def test_mult_order():
    assert mult_order(2, 35) == 12
    assert mult_order(2, 55) == 20
    assert mult_order(3, 8) == 2
    assert mult_order(5, 1) == 1
    with pytest.raises(ValidationError):
        mult_order(2, 6)


def test_cyclotomic_cosets_35():
    assert cyclotomic_coset(5, 35, 2).members == ((5,), (10,), (20,))
    assert len(cyclotomic_coset(1, 35, 2)) == 12
    assert len(cyclotomic_coset(7, 35, 2)) == 4
    part = orbit_partition(Shape(2, (35,)))
    assert sorted(len(o) for o in part.orbits) == [1, 3, 3, 4, 12, 12]
    assert [o.rep for o in part.orbits] == [(0,), (1,), (3,), (5,), (7,), (15,)]


def test_orbits_5x7_distribution():
    part = orbit_partition(Shape(2, (5, 7)))
    assert [o.rep for o in part.orbits] == [(0, 0), (0, 1), (0, 3), (1, 0), (1, 1), (1, 3)]
    assert [len(o) for o in part.orbits] == [1, 3, 3, 4, 12, 12]
    assert q_orbit((0, 5), Shape(2, (5, 7))).rep == (0, 3)


def test_orbits_3x9():
    sh = Shape(2, (3, 9))
    assert q_orbit((1, 0), sh).members == ((1, 0), (2, 0))
    assert len(q_orbit((0, 1), sh)) == 6
    assert q_orbit((1, 3), sh).members == ((1, 3), (2, 6))
    assert q_orbit((1, 6), sh).members == ((1, 6), (2, 3))


def test_orbit_step_t():
    # q^2 = 4 on Z_5 splits the 2-orbit {1,2,4,3} into {1,4} and {2,3}
    part = orbit_partition(Shape(2, (5,)), t=2)
    assert [o.members for o in part.orbits] == [((0,),), ((1,), (4,)), ((2,), (3,))]


def test_partition_covers_once():
    for q, r in [(2, (3, 5, 7)), (3, (4, 5)), (4, (3, 5)), (5, (2, 3, 4))]:
        sh = Shape(q, r)
        part = orbit_partition(sh)
        seen = [a for o in part.orbits for a in o.members]
        assert len(seen) == sh.size == len(set(seen))
        for o in part.orbits:
            for a in o.members:
                assert tuple(x * q % rj for x, rj in zip(a, r)) in o


def test_root_classes():
    sh = Shape(2, (5, 7))
    reps = root_class_representatives(sh)
    assert [c.multiplier for c in reps] == [(1, 1), (1, 3)]
    assert len(root_class_representatives(Shape(2, (35,)))) == 2
    assert reps[0].multiplier == (1, 1)
    for q, r in [(2, (3, 5)), (3, (8,)), (2, (7, 9)), (5, (4, 6))]:
        sh = Shape(q, r)
        units = unit_grid(sh)
        n = len(root_class_representatives(sh))
        # every class has size lcm of the orders of q modulo each r_j
        size = math.lcm(*(mult_order(q, rj) for rj in r))
        assert n * size == len(units)
        assert n >= 1 and root_class_bound(sh) >= 1


def test_labels_readonly():
    part = orbit_partition(Shape(2, (5, 7)))
    with pytest.raises(ValueError):
        part.labels[0, 0] = 3
    assert isinstance(part.labels, np.ndarray)
