from __future__ import annotations

import numpy as np
import pytest

from abelcodes.algebra import Shape
from abelcodes.errors import ValidationError, ZeroCodeError
from abelcodes.hypermatrix import afford_orbits, apparent_distance, full, zero
from abelcodes.mad import eval_count, mad, mad_2d, max_support_submatrix, max_support_zeroing

D4 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 0), (1, 2, 1), (1, 2, 2), (1, 0, 1),
      (0, 1, 1), (1, 0, 2), (0, 1, 2)]


def test_mad_2d_example():
    m = afford_orbits([(1, 0), (0, 1), (1, 3), (1, 6)], Shape(2, (3, 9)))
    assert apparent_distance(m).involved_pairs == {(1, 0), (2, 0), (2, 3), (2, 6)}
    value, trace = mad(m)
    assert value == 3
    assert trace.m_values == [3, 3]
    assert eval_count(trace) == 2
    m1 = trace.stages[1].members[0]
    assert m1 == afford_orbits([(1, 0), (0, 1), (1, 3), (1, 6), (0, 0), (0, 3)], m.shape)
    assert trace.dstar[m1] == 4
    assert trace.involved[m1] == {(1, 2), (2, 2), (2, 5), (2, 8)}
    assert trace.stages[-1].stop == "next matrix is zero"


def test_mad_3d_example():
    sh = Shape(2, (3, 3, 5))
    m = afford_orbits(D4, sh)
    value, trace = mad(m)
    assert value == 6
    assert len(trace.stages) == 1
    st = trace.stages[0]
    b1 = afford_orbits(D4 + [(1, 1, 2)], sh)
    b2 = afford_orbits(D4 + [(1, 1, 1)], sh)
    assert st.expansions[m] == [b1, b2]
    assert (trace.dstar[b1], trace.dstar[b2]) == (12, 18)
    assert trace.involved[b1] == trace.involved[b2] == {(1, 2), (2, 2)}
    assert st.eta == [b1, b2]
    assert st.m == 6
    assert eval_count(trace) == 3


def test_vector_mad():
    m = afford_orbits([(1,), (5,)], Shape(2, (35,)))
    assert mad(m)[0] == 5
    assert mad(full(Shape(2, (7,))))[0] == 1


def test_zero_rejected():
    with pytest.raises(ZeroCodeError):
        mad(zero(Shape(2, (3, 5))))
    with pytest.raises(ValidationError):
        mad_2d(full(Shape(2, (3, 3, 5))))


def test_max_support_submatrix():
    sh = Shape(2, (5, 7))
    m = full(sh)
    a = np.ones(5, bool)
    a[0] = False
    n = max_support_submatrix(m, a, 2, 1)
    assert n.defining_reps() == [(0, 1)]
    with pytest.raises(ValidationError):
        max_support_submatrix(afford_orbits([(0, 1)], sh), np.ones(5, bool), 2, 1)
    z = max_support_zeroing(m, [(1, 0)])
    assert z.defining_reps() == [(0, 0), (0, 1), (0, 3)]


def test_trace_json_is_sorted():
    m = afford_orbits(D4, Shape(2, (3, 3, 5)))
    obj = mad(m)[1].to_json()
    assert obj["mad"] == 6 and obj["l"] == 0 and obj["l_prime"] == 0
    assert list(obj) == sorted(obj)
