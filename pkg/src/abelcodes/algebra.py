"""Residue arithmetic over I = Z_r1 x ... x Z_rs: shapes, q^t-orbits, root classes.

Indices are plain tuples of canonical residues.  The flat (row-major) position
of an index is used as a cheap total order: it coincides with the
lexicographic order of the tuples, so "smallest flat position" and
"lexicographically smallest member" are the same thing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ValidationError

Index = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power_base(q: int) -> int | None:
    """Return p if ``q == p**e`` for a prime p and e >= 1, else None."""
    ps = prime_factors(q) if q >= 2 else []
    return ps[0] if len(ps) == 1 else None


def lcm(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def euler_phi(n: int) -> int:
    out = n
    for p in prime_factors(n):
        out -= out // p
    return out


@dataclass(frozen=True)
class Shape:
    """Ambient algebra A_q(r_1, ..., r_s).

    ``r`` may be empty; that is the single-entry shape used for the
    hypercolumns of a vector.
    """

    q: int
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        if prime_power_base(self.q) is None:
            raise ValidationError(f"q={self.q} is not a prime power")
        for rj in self.r:
            if rj < 1:
                raise ValidationError(f"lengths must be positive, got r={self.r}")
            if math.gcd(rj, self.q) != 1:
                raise ValidationError(f"gcd(r_j, q) must be 1 (semisimple case); r={self.r}, q={self.q}")

    @property
    def s(self) -> int:
        return len(self.r)

    @property
    def p(self) -> int:
        return prime_power_base(self.q)  # type: ignore[return-value]

    @property
    def size(self) -> int:
        return math.prod(self.r)

    def indices(self) -> Iterator[Index]:
        return itertools.product(*(range(rj) for rj in self.r))

    def check_index(self, a: Sequence[int]) -> Index:
        a = tuple(int(x) for x in a)
        if len(a) != self.s or any(not 0 <= x < rj for x, rj in zip(a, self.r)):
            raise ValidationError(f"index {a} is not a canonical element of Z_{self.r}")
        return a

    def flat(self, a: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(a), self.r)) if self.r else 0

    def unflat(self, i: int) -> Index:
        return tuple(int(x) for x in np.unravel_index(i, self.r)) if self.r else ()

    def drop(self, axis: int) -> Shape:
        """Shape without the ``axis``-th (0-based) length."""
        return Shape(self.q, self.r[:axis] + self.r[axis + 1:])

    def multipliers(self, t: int) -> tuple[int, ...]:
        """Componentwise reduction of q^t, which is all the orbit structure depends on."""
        return tuple(pow(self.q, t, rj) for rj in self.r)


def mult_order(a: int, b: int) -> int:
    """Multiplicative order of ``a`` modulo ``b``."""
    if b < 1:
        raise ValidationError(f"modulus must be positive, got {b}")
    if math.gcd(a, b) != 1:
        raise ValidationError(f"gcd({a}, {b}) != 1, order undefined")
    if b == 1:
        return 1
    m, x = 1, a % b
    while x != 1:
        x = x * a % b
        m += 1
    return m


@dataclass(frozen=True)
class Orbit:
    """A q^t-orbit; members sorted lexicographically, ``rep`` the smallest."""

    shape: Shape
    t: int
    members: tuple[Index, ...]

    @property
    def rep(self) -> Index:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Index]:
        return iter(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members


@lru_cache(maxsize=4096)
def _cycles(r: tuple[int, ...], mults: tuple[int, ...]) -> tuple[np.ndarray, tuple[np.ndarray, ...]]:
    """Orbits of i -> mults * i on Z_r as (label array, member flat-index arrays).

    Labels are numbered by the smallest flat member, so orbit 0 contains 0.
    """
    n = math.prod(r)
    if not r:
        labels = np.zeros((), dtype=np.int64)
        return labels, (np.zeros(1, dtype=np.int64),)
    grid = np.indices(r).reshape(len(r), -1)
    image = np.ravel_multi_index(tuple((grid * np.array(mults)[:, None]) % np.array(r)[:, None]), r)
    labels = np.full(n, -1, dtype=np.int64)
    members = []
    for start in range(n):
        if labels[start] >= 0:
            continue
        cyc = [start]
        labels[start] = len(members)
        nxt = int(image[start])
        while nxt != start:
            if labels[nxt] >= 0:
                raise ValidationError(f"multiplier {mults} is not invertible modulo {r}")
            labels[nxt] = len(members)
            cyc.append(nxt)
            nxt = int(image[nxt])
        members.append(np.array(sorted(cyc), dtype=np.int64))
    labels = labels.reshape(r)
    labels.flags.writeable = False
    for m in members:
        m.flags.writeable = False
    return labels, tuple(members)


def orbit_labels(shape: Shape, t: int = 1) -> tuple[np.ndarray, tuple[np.ndarray, ...]]:
    """Label array (shape ``r``) and flat member arrays of the q^t-orbits."""
    return _cycles(shape.r, shape.multipliers(t))


def cyclotomic_coset(b: int, r: int, q: int, t: int = 1) -> Orbit:
    """The q^t-cyclotomic coset of ``b`` modulo ``r``."""
    if r < 1 or math.gcd(r, q) != 1:
        raise ValidationError(f"modulus {r} must be coprime to q={q}")
    if not 0 <= b < r:
        raise ValidationError(f"{b} is not a canonical residue modulo {r}")
    return q_orbit((b,), Shape(q, (r,)), t)


def q_orbit(a: Sequence[int], shape: Shape, t: int = 1) -> Orbit:
    """Componentwise orbit of ``a`` under multiplication by q^t."""
    a = shape.check_index(a)
    if t < 1:
        raise ValidationError("step t must be positive")
    labels, members = orbit_labels(shape, t)
    flat = members[int(labels[a])] if shape.r else members[0]
    return Orbit(shape, t, tuple(shape.unflat(int(i)) for i in flat))


@dataclass(frozen=True)
class OrbitPartition:
    shape: Shape
    t: int
    orbits: tuple[Orbit, ...]
    labels: np.ndarray = field(repr=False, compare=False)

    def index_to_orbit(self, a: Sequence[int]) -> int:
        return int(self.labels[tuple(a)])

    def orbit_of(self, a: Sequence[int]) -> Orbit:
        return self.orbits[self.index_to_orbit(a)]

    def by_rep(self, rep: Sequence[int]) -> Orbit:
        orb = self.orbit_of(rep)
        if orb.rep != tuple(rep):
            raise ValidationError(f"{tuple(rep)} is not the canonical representative of {orb.rep}")
        return orb

    def __len__(self) -> int:
        return len(self.orbits)


def orbit_partition(shape: Shape, t: int = 1) -> OrbitPartition:
    """All q^t-orbits of I, sorted by representative."""
    labels, members = orbit_labels(shape, t)
    orbits = tuple(Orbit(shape, t, tuple(shape.unflat(int(i)) for i in m)) for m in members)
    return OrbitPartition(shape, t, orbits, labels)


@dataclass(frozen=True, order=True)
class RootClass:
    """A unit multiplier a (gcd(a_j, r_j) = 1) standing for the roots beta = alpha^a."""

    multiplier: Index

    def apply(self, shape: Shape, a: Sequence[int]) -> Index:
        return tuple(x * m % rj for x, m, rj in zip(a, self.multiplier, shape.r))


def unit_grid(shape: Shape) -> list[Index]:
    units = [[u for u in range(rj) if math.gcd(u, rj) == 1] for rj in shape.r]
    return [tuple(u) for u in itertools.product(*units)]


def root_class_representatives(shape: Shape) -> list[RootClass]:
    """One multiplier per class of componentwise units under a ~ q*a.

    The identity class comes first; the rest follow in lexicographic order of
    their smallest member.
    """
    seen: set[Index] = set()
    reps = []
    ident = tuple(1 % rj for rj in shape.r)
    for a in [ident] + unit_grid(shape):
        if a in seen:
            continue
        cls = []
        x = a
        while x not in cls:
            cls.append(x)
            x = tuple(v * shape.q % rj for v, rj in zip(x, shape.r))
        seen.update(cls)
        reps.append(RootClass(min(cls)))
    return reps


def root_class_bound(shape: Shape) -> int:
    """The coarse upper bound prod(phi(r_j)) / gcd(ord_{r_j}(q)) on the class count."""
    phis = math.prod(euler_phi(rj) for rj in shape.r)
    g = reduce(math.gcd, (mult_order(shape.q, rj) for rj in shape.r), 0) or 1
    return phis // g
