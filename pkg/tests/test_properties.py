from __future__ import annotations

import math

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from abelcodes.algebra import Shape, orbit_partition, root_class_representatives
from abelcodes.codes import (
    AbelianCode,
    BchSpec,
    apparent_distance_alpha,
    apparent_distance_code,
    apply_multiplier,
    bch_bound,
    bch_code,
    bch_dimension_bound,
    multiply_dimension,
)
from abelcodes.field import galois_field
from abelcodes.hypermatrix import apparent_distance, full
from abelcodes.mad import mad, max_support_submatrix
from abelcodes.oracle import mad_bruteforce

SHAPES = [(2, (3, 5)), (2, (5, 7)), (2, (3, 9)), (3, (2, 4)), (3, (4, 5)), (2, (3, 3, 5)), (3, (2, 2, 4)),
          (2, (15,)), (2, (21,)), (5, (2, 3, 4)), (4, (3, 5)), (2, (3, 3, 3))]

fast = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def codes(draw, shapes=SHAPES, nonzero=True):
    q, r = draw(st.sampled_from(shapes))
    sh = Shape(q, r)
    part = orbit_partition(sh)
    chosen = draw(st.lists(st.booleans(), min_size=len(part), max_size=len(part)))
    if nonzero and all(chosen):
        chosen[-1] = False
    ids = [i for i, c in enumerate(chosen) if c]
    return AbelianCode(sh, np.isin(part.labels, ids))


@st.composite
def bch_specs(draw):
    q, r = draw(st.sampled_from([s for s in SHAPES if max(s[1]) >= 2]))
    sh = Shape(q, r)
    ks = [k for k in range(1, sh.s + 1) if r[k - 1] >= 2]
    gamma = draw(st.lists(st.sampled_from(ks), min_size=1, max_size=len(ks), unique=True))
    delta = {k: draw(st.integers(2, r[k - 1])) for k in gamma}
    b = {k: draw(st.integers(0, 2 * r[k - 1])) for k in gamma}
    return sh, BchSpec(tuple(gamma), delta, b)


@fast
@given(codes())
def test_bounds_chain(code):
    assert bch_bound(code) <= apparent_distance_alpha(code) <= apparent_distance_code(code).value


@fast
@given(bch_specs())
def test_bch_code_properties(args):
    sh, spec = args
    code = bch_code(sh, spec)
    if code.is_zero:
        return
    assert apparent_distance_alpha(code) >= spec.designed_distance()
    assert code.dimension >= bch_dimension_bound(sh, spec)


@fast
@given(bch_specs(), st.data())
def test_bch_maximality(args, data):
    # any code whose defining set contains the stacks A_k is no larger than the BCH code
    sh, spec = args
    code = bch_code(sh, spec)
    part = orbit_partition(sh)
    extra = data.draw(st.lists(st.integers(0, len(part) - 1), max_size=4))
    mask = code.defining_mask | np.isin(part.labels, extra)
    assert AbelianCode(sh, mask).dimension <= code.dimension


@fast
@given(codes())
def test_root_class_action_preserves_dstar(code):
    base = apparent_distance_code(code)
    for c in root_class_representatives(code.shape):
        moved = apply_multiplier(code, c.multiplier)
        assert moved.dimension == code.dimension
        assert apparent_distance_code(moved).value == base.value


@fast
@given(codes(shapes=[(2, (7,)), (2, (9,)), (2, (15,)), (3, (8,)), (3, (10,)), (2, (21,))]), st.sampled_from([1, 5, 7]))
def test_multiply_dimension(code, n):
    if math.gcd(code.shape.q, n * code.shape.r[0]) != 1:
        return
    res = multiply_dimension(code, n)
    assert res.code.dimension == n * code.dimension
    assert apparent_distance_code(res.code).value == apparent_distance_code(code).value


@fast
@given(codes(shapes=[(2, (3, 5)), (2, (3, 9)), (3, (2, 4)), (2, (3, 3, 5))]))
def test_mad_matches_bruteforce(code):
    m = code.hypermatrix()
    assert mad(m)[0] == mad_bruteforce(m)


@fast
@given(codes(shapes=[(2, (5, 7)), (2, (3, 3, 5)), (3, (4, 5))]), st.data())
def test_max_support_submatrix_is_maximal(code, data):
    m = code.hypermatrix()
    k = data.draw(st.integers(1, m.shape.s))
    b = data.draw(st.integers(0, m.shape.r[k - 1] - 1))
    h = m.hypercolumn(k, b)
    keep = data.draw(st.lists(st.booleans(), min_size=h.support.size, max_size=h.support.size))
    a = h.support & np.array(keep, dtype=bool).reshape(h.support.shape)
    n = max_support_submatrix(m, a, k, b)
    assert n <= m
    assert not (n.hypercolumn(k, b).support & ~a).any()
    # exactly the orbits through the dropped entries of H_M(k, b) were removed
    sel = np.zeros(m.shape.r, dtype=bool)
    idx = [slice(None)] * m.shape.s
    idx[k - 1] = b
    sel[tuple(idx)] = h.support & ~a
    hit = np.unique(m.labels[sel])
    expected = m.support & ~np.isin(m.labels, hit)
    assert np.array_equal(n.support, expected)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (2, 4), (5, 1), (7, 2)]), st.data())
def test_field_arithmetic(pv, data):
    F = galois_field(*pv)
    a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1


@fast
@given(codes(nonzero=False))
def test_full_matrix_has_distance_one(code):
    assert apparent_distance(full(code.shape)).value == 1
