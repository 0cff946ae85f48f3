from __future__ import annotations

import numpy as np
import pytest

from abelcodes.algebra import Shape
from abelcodes.errors import ValidationError
from abelcodes.field import galois_field, is_irreducible, order_of, smallest_irreducible, splitting_field


def test_irreducibility():
    assert is_irreducible([1, 1, 1], 2)            # x^2 + x + 1
    assert not is_irreducible([1, 0, 1], 2)        # (x + 1)^2
    assert is_irreducible([1, 0, 1], 3)            # x^2 + 1 over F_3
    assert smallest_irreducible(2, 4) == [1, 1, 0, 0, 1]


@pytest.mark.parametrize("p,v", [(2, 1), (2, 2), (2, 4), (3, 2), (5, 2), (7, 1), (2, 8)])
def test_field_axioms(p, v):
    F = galois_field(p, v)
    xs = np.arange(F.order)
    nz = xs[1:]
    assert sorted(F.exp_table.tolist()) == nz.tolist()
    a, b, c = np.meshgrid(xs, xs, xs[: min(F.order, 9)], indexing="ij")
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.mul(nz, F.inv(nz)), np.ones_like(nz))
    assert np.array_equal(F.add(xs, F.neg(xs)), np.zeros_like(xs))
    assert order_of(F, F.generator) == F.order - 1


def test_scalar_results_are_ints():
    F = galois_field(3, 2)
    assert isinstance(F.mul(2, 4), int)
    assert F.pow(F.generator, F.order - 1) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_splitting_field_roots():
    sf = splitting_field(Shape(3, (2, 4)))
    F = sf.field
    assert (F.p, F.degree) == (3, 2)
    assert sf.alphas[0] == 2  # -1
    for a, rj in zip(sf.alphas, sf.shape.r):
        assert order_of(F, a) == rj
    sf = splitting_field(Shape(2, (5, 7)))
    assert sf.field.degree == 12
    assert [order_of(sf.field, a) for a in sf.alphas] == [5, 7]


def test_splitting_field_needs_prime_q():
    with pytest.raises(ValidationError):
        splitting_field(Shape(4, (3, 5)))


def test_exponent_table():
    sf = splitting_field(Shape(2, (3, 5)))
    tab = sf.exponent_table()
    sh = sf.shape
    for i in [(0, 0), (1, 2), (2, 4)]:
        for j in [(1, 1), (2, 3)]:
            assert tab[sh.flat(i), sh.flat(j)] == sf.exponent(i, j)
