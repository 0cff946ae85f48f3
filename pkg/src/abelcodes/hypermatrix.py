"""0/1 orbit hypermatrices, hypercolumns, zero-run counts and apparent distance.

A hypermatrix is stored as a boolean numpy array of shape ``r`` holding its
support.  Directions ``k`` are 1-based (k = 1..s) and levels ``b`` are
canonical residues, matching the usual notation H_M(k, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .algebra import Index, Shape, orbit_labels
from .errors import ValidationError

# -- apparent distance on raw support arrays ---------------------------------


def _gaps(nonzero: np.ndarray) -> np.ndarray:
    """omega for every nonzero position of a 1-d boolean vector, in position order."""
    pos = np.flatnonzero(nonzero)
    r = nonzero.shape[0]
    if len(pos) == 1:
        return np.array([r - 1])
    return (np.roll(pos, -1) - pos - 1) % r


@lru_cache(maxsize=1 << 18)
def _dstar_key(r: tuple[int, ...], bits: bytes) -> int:
    a = np.frombuffer(bits, dtype=bool).reshape(r)
    return _dstar_array(a)


def _dstar_array(a: np.ndarray) -> int:
    if not a.any():
        return 0
    if a.ndim == 0:
        return 1
    if a.ndim == 1:
        return int(_gaps(a).max()) + 1
    best = 0
    for axis in range(a.ndim):
        best = max(best, _direction_dstar(a, axis)[0])
    return best


def _hyper(a: np.ndarray, axis: int, b: int) -> np.ndarray:
    return np.ascontiguousarray(np.take(a, b, axis=axis))


def _dstar_cached(a: np.ndarray) -> int:
    a = np.ascontiguousarray(a, dtype=bool)
    return _dstar_key(a.shape, a.tobytes())


def _direction_dstar(a: np.ndarray, axis: int) -> tuple[int, dict[int, tuple[int, int]]]:
    """(d*_k, {b: (omega, d*(H))}) for direction ``axis`` (0-based)."""
    other = tuple(i for i in range(a.ndim) if i != axis)
    nz = a.any(axis=other) if other else a
    levels = np.flatnonzero(nz)
    omegas = _gaps(nz)
    table = {}
    best = 0
    for b, om in zip(levels.tolist(), omegas.tolist()):
        h = _dstar_cached(_hyper(a, axis, b))
        table[b] = (om, h)
        best = max(best, (om + 1) * h)
    return best, table


def dstar(support) -> int:
    """Apparent distance of any 0/1 array (orbit-closed or not)."""
    return _dstar_cached(np.asarray(support, dtype=bool))


@dataclass(frozen=True)
class ApDistResult:
    value: int
    per_direction: tuple[int, ...]
    involved_pairs: frozenset[tuple[int, int]]
    # (k, b) -> (omega, d*(H_M(k, b))) for every nonzero hypercolumn
    table: dict = field(default_factory=dict, repr=False, compare=False)


def apparent_distance_array(support) -> ApDistResult:
    a = np.ascontiguousarray(support, dtype=bool)
    if not a.any():
        return ApDistResult(0, tuple(0 for _ in range(a.ndim)), frozenset())
    if a.ndim == 0:
        return ApDistResult(1, (), frozenset())
    per_dir = []
    table = {}
    for axis in range(a.ndim):
        d_k, rows = _direction_dstar(a, axis)
        per_dir.append(d_k)
        for b, v in rows.items():
            table[(axis + 1, b)] = v
    value = max(per_dir)
    ip = frozenset(kb for kb, (om, h) in table.items() if (om + 1) * h == value)
    return ApDistResult(value, tuple(per_dir), ip, table)


# -- orbit hypermatrices -----------------------------------------------------


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=bool)
    a.flags.writeable = False
    return a


def _orbit_closed(labels: np.ndarray, zero: np.ndarray) -> np.ndarray | None:
    """A flat index of ``zero`` whose orbit is not fully inside ``zero``, if any."""
    touched = np.zeros(int(labels.max()) + 1, dtype=bool)
    touched[labels[zero]] = True
    bad = touched[labels] & ~zero
    if bad.any():
        return np.flatnonzero(bad)[0]
    return None


@dataclass(frozen=True, eq=False)
class OrbitHypermatrix:
    """The q^t-orbit hypermatrix M(D): entry 0 on the defining set D, 1 elsewhere.

    Equality and hashing use (r, orbit structure, support), so two
    hypermatrices built along different routes compare equal.
    """

    shape: Shape
    t: int
    support: np.ndarray = field(repr=False)

    @classmethod
    def _unchecked(cls, shape: Shape, t: int, support: np.ndarray) -> OrbitHypermatrix:
        return cls(shape, t, _readonly(support))

    # identity ---------------------------------------------------------------

    @cached_property
    def key(self) -> tuple:
        return (self.shape.q, self.shape.r, self.shape.multipliers(self.t), self.support.tobytes())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrbitHypermatrix) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"OrbitHypermatrix(r={self.shape.r}, q={self.shape.q}, t={self.t}, D={self.defining_reps()})"

    # structure --------------------------------------------------------------

    @property
    def labels(self) -> np.ndarray:
        return orbit_labels(self.shape, self.t)[0]

    @property
    def orbit_members(self) -> tuple[np.ndarray, ...]:
        return orbit_labels(self.shape, self.t)[1]

    @property
    def is_zero(self) -> bool:
        return not self.support.any()

    @property
    def defining_mask(self) -> np.ndarray:
        return ~self.support

    @property
    def defining_set(self) -> frozenset[Index]:
        return frozenset(tuple(int(x) for x in i) for i in np.argwhere(~self.support)) if self.shape.r else (
            frozenset() if self.support else frozenset({()}))

    def defining_reps(self) -> list[Index]:
        """Sorted orbit representatives of the defining set."""
        members = self.orbit_members
        flat_zero = (~self.support).reshape(-1)
        return [self.shape.unflat(int(m[0])) for m in members if flat_zero[m[0]]]

    def support_orbits(self) -> list[int]:
        """Orbit ids (in label order) of the orbits in the support."""
        flat = self.support.reshape(-1)
        return [i for i, m in enumerate(self.orbit_members) if flat[m[0]]]

    def sort_key(self) -> tuple:
        return tuple(self.defining_reps())

    # hypercolumns -----------------------------------------------------------

    def _check_kb(self, k: int, b: int) -> None:
        if not 1 <= k <= self.shape.s:
            raise ValidationError(f"direction k={k} outside 1..{self.shape.s}")
        if not 0 <= b < self.shape.r[k - 1]:
            raise ValidationError(f"level b={b} outside Z_{self.shape.r[k - 1]}")

    def hypercolumn_step(self, k: int, b: int) -> int:
        """t' = t * |C_{q^t}(b)| modulo r_k."""
        self._check_kb(k, b)
        rk = self.shape.r[k - 1]
        m = pow(self.shape.q, self.t, rk)
        size, x = 1, b * m % rk
        while x != b:
            x = x * m % rk
            size += 1
        return self.t * size

    def hypercolumn(self, k: int, b: int) -> OrbitHypermatrix:
        """H_M(k, b) as an (s-1)-dimensional q^t'-orbit hypermatrix."""
        t2 = self.hypercolumn_step(k, b)
        return OrbitHypermatrix._unchecked(self.shape.drop(k - 1), t2, _hyper(self.support, k - 1, b))

    def nonzero_levels(self, k: int) -> np.ndarray:
        other = tuple(i for i in range(self.shape.s) if i != k - 1)
        return self.support.any(axis=other) if other else self.support.copy()

    # order ------------------------------------------------------------------

    def _compatible(self, other: OrbitHypermatrix) -> None:
        if self.shape != other.shape or self.shape.multipliers(self.t) != other.shape.multipliers(other.t):
            raise ValidationError("hypermatrices over different index sets or orbit structures")

    def __le__(self, other: OrbitHypermatrix) -> bool:
        self._compatible(other)
        return bool(np.all(~self.support | other.support))

    def __lt__(self, other: OrbitHypermatrix) -> bool:
        return self <= other and self != other

    # derived hypermatrices --------------------------------------------------

    def with_zeroed_orbits(self, flat_indices: Iterable[int] | np.ndarray) -> OrbitHypermatrix:
        """Hypermatrix whose defining set also contains the orbits of the given entries."""
        idx = np.asarray(list(flat_indices) if not isinstance(flat_indices, np.ndarray) else flat_indices,
                         dtype=np.int64)
        if idx.size == 0:
            return self
        labels = self.labels.reshape(-1)
        hit = np.zeros(len(self.orbit_members), dtype=bool)
        hit[labels[idx]] = True
        sup = self.support.reshape(-1) & ~hit[labels]
        return OrbitHypermatrix._unchecked(self.shape, self.t, sup.reshape(self.shape.r))

    def to_json(self) -> dict:
        return {
            "defining_set_orbit_reps": [list(a) for a in self.defining_reps()],
            "q": self.shape.q,
            "r": list(self.shape.r),
            "t": self.t,
        }


def afford(defining_set, shape: Shape, t: int = 1) -> OrbitHypermatrix:
    """M(D) for a union of q^t-orbits D (iterable of indices or boolean mask)."""
    if t < 1:
        raise ValidationError("step t must be positive")
    if isinstance(defining_set, np.ndarray) and defining_set.dtype == bool:
        if defining_set.shape != shape.r:
            raise ValidationError(f"mask shape {defining_set.shape} does not match r={shape.r}")
        zero = defining_set.copy()
    else:
        zero = np.zeros(shape.r, dtype=bool)
        for a in defining_set:
            zero[shape.check_index(a)] = True
    labels = orbit_labels(shape, t)[0]
    bad = _orbit_closed(labels.reshape(-1), zero.reshape(-1))
    if bad is not None:
        raise ValidationError(
            f"defining set is not a union of q^t-orbits: {shape.unflat(int(bad))} is in the orbit of an "
            f"element of D but not in D")
    return OrbitHypermatrix._unchecked(shape, t, ~zero)


def afford_orbits(orbit_reps: Iterable[Sequence[int]], shape: Shape, t: int = 1) -> OrbitHypermatrix:
    """M(D) for D the union of the q^t-orbits of the given indices."""
    full = OrbitHypermatrix._unchecked(shape, t, np.ones(shape.r, dtype=bool))
    return full.with_zeroed_orbits([shape.flat(shape.check_index(a)) for a in orbit_reps])


def from_json(obj: dict) -> OrbitHypermatrix:
    shape = Shape(int(obj["q"]), tuple(obj["r"]))
    return afford_orbits(obj.get("defining_set_orbit_reps", []), shape, int(obj.get("t", 1)))


def leq(m: OrbitHypermatrix, n: OrbitHypermatrix) -> bool:
    """M <= N iff supp(M) is contained in supp(N)."""
    return m <= n


def hypercolumn(m: OrbitHypermatrix, k: int, b: int) -> OrbitHypermatrix:
    return m.hypercolumn(k, b)


def omega(m: OrbitHypermatrix | np.ndarray, k: int, b: int) -> int:
    """Number of consecutive zero hypercolumns cyclically following the nonzero H_M(k, b)."""
    sup = m.support if isinstance(m, OrbitHypermatrix) else np.asarray(m, dtype=bool)
    if not 1 <= k <= max(sup.ndim, 1) or not 0 <= b < (sup.shape[k - 1] if sup.ndim else 1):
        raise ValidationError(f"(k, b) = ({k}, {b}) out of range")
    other = tuple(i for i in range(sup.ndim) if i != k - 1)
    nz = sup.any(axis=other) if other else sup
    if not nz[b]:
        raise ValidationError(f"omega is only defined for nonzero hypercolumns; H({k}, {b}) = 0")
    r = nz.shape[0]
    n = 0
    while n < r - 1 and not nz[(b + 1 + n) % r]:
        n += 1
    return n


def apparent_distance(m: OrbitHypermatrix | np.ndarray) -> ApDistResult:
    """d*(M), the per-direction values d*_k(M) and the involved pairs Ip(M)."""
    sup = m.support if isinstance(m, OrbitHypermatrix) else m
    return apparent_distance_array(sup)


def full(shape: Shape, t: int = 1) -> OrbitHypermatrix:
    return OrbitHypermatrix._unchecked(shape, t, np.ones(shape.r, dtype=bool))


def zero(shape: Shape, t: int = 1) -> OrbitHypermatrix:
    return OrbitHypermatrix._unchecked(shape, t, np.zeros(shape.r, dtype=bool))
