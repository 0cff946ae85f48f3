"""Abelian codes given by defining sets, and the constructions built on them.

A code is stored as its shape plus the boolean mask of its defining set D
with respect to the standard roots alpha.  Everything here is combinatorial:
q only enters as an integer multiplier, so any prime power is accepted.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .algebra import Index, RootClass, Shape, lcm, mult_order, orbit_labels, root_class_representatives
from .errors import BudgetExceeded, EngineMismatch, ValidationError, ZeroCodeError
from .hypermatrix import OrbitHypermatrix, afford, afford_orbits
from .mad import mad


@dataclass(frozen=True, eq=False)
class AbelianCode:
    """The code in A_q(r) whose defining set (w.r.t. the standard alpha) is D."""

    shape: Shape
    defining_mask: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        mask = np.array(self.defining_mask, dtype=bool)
        if mask.shape != self.shape.r:
            raise ValidationError(f"mask shape {mask.shape} does not match r={self.shape.r}")
        afford(mask, self.shape)  # raises unless D is a union of q-orbits
        mask.flags.writeable = False
        object.__setattr__(self, "defining_mask", mask)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, AbelianCode) and self.shape == other.shape
                and np.array_equal(self.defining_mask, other.defining_mask))

    def __hash__(self) -> int:
        return hash((self.shape, self.defining_mask.tobytes()))

    def __repr__(self) -> str:
        return f"AbelianCode(q={self.shape.q}, r={self.shape.r}, dim={self.dimension}, D={self.defining_reps()})"

    @property
    def length(self) -> int:
        return self.shape.size

    @property
    def dimension(self) -> int:
        return self.shape.size - int(self.defining_mask.sum())

    @property
    def is_zero(self) -> bool:
        return bool(self.defining_mask.all())

    def hypermatrix(self) -> OrbitHypermatrix:
        return OrbitHypermatrix._unchecked(self.shape, 1, ~self.defining_mask)

    def defining_reps(self) -> list[Index]:
        return self.hypermatrix().defining_reps()

    def to_json(self) -> dict:
        return {"orbit_reps": [list(a) for a in self.defining_reps()], "q": self.shape.q, "r": list(self.shape.r)}


def code_from_orbits(shape: Shape, orbit_reps: Sequence[Sequence[int]]) -> AbelianCode:
    """The code whose defining set is the union of the q-orbits of ``orbit_reps``."""
    return AbelianCode(shape, afford_orbits(orbit_reps, shape).defining_mask)


def code_from_hypermatrix(m: OrbitHypermatrix) -> AbelianCode:
    if m.shape.multipliers(m.t) != m.shape.multipliers(1):
        raise ValidationError("codes are defined by q-orbits (t = 1)")
    return AbelianCode(m.shape, m.defining_mask)


def code_from_json(obj: Mapping) -> AbelianCode:
    """Parse ``{"q": 2, "r": [5, 7], "orbit_reps": [[0, 0], [1, 0]]}``."""
    try:
        shape = Shape(int(obj["q"]), tuple(int(x) for x in obj["r"]))
        reps = [tuple(int(x) for x in a) for a in obj.get("orbit_reps", [])]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed code spec: {exc!r}") from None
    return code_from_orbits(shape, reps)


# -- apparent distance -------------------------------------------------------


def _require_nonzero(code: AbelianCode) -> None:
    if code.is_zero:
        raise ZeroCodeError("the zero code has no apparent distance")


def apparent_distance_alpha(code: AbelianCode) -> int:
    """d*_alpha(C) = mad(M(D)) for the standard alpha."""
    _require_nonzero(code)
    return mad(code.hypermatrix())[0]


def apply_multiplier(code: AbelianCode, a: Sequence[int]) -> AbelianCode:
    """The code with defining set a.D (componentwise product)."""
    sh = code.shape
    a = tuple(int(x) for x in a)
    if len(a) != sh.s or any(math.gcd(x, rj) != 1 for x, rj in zip(a, sh.r)):
        raise ValidationError(f"multiplier {a} is not a unit modulo r={sh.r}")
    if not sh.r:
        return code
    grid = np.indices(sh.r)
    image = tuple((grid[j] * a[j]) % sh.r[j] for j in range(sh.s))
    mask = np.zeros(sh.r, dtype=bool)
    mask[image] = code.defining_mask
    return AbelianCode(sh, mask)


@dataclass(frozen=True)
class CodeApDistResult:
    """d*(C) together with d*_beta(C) for one multiplier per root class."""

    value: int
    per_class: dict[RootClass, int]
    optimized_roots: tuple[RootClass, ...]

    def to_json(self) -> dict:
        return {
            "d_star_code": self.value,
            "optimized_root_classes": [list(c.multiplier) for c in self.optimized_roots],
            "per_class": [{"d_star": v, "multiplier": list(c.multiplier)} for c, v in self.per_class.items()],
        }


def apparent_distance_code(code: AbelianCode, classes: Sequence[RootClass] | None = None) -> CodeApDistResult:
    """d*(C) as the maximum of mad(M(a.D)) over root-class representatives a."""
    _require_nonzero(code)
    classes = list(classes) if classes is not None else root_class_representatives(code.shape)
    per_class = {c: apparent_distance_alpha(apply_multiplier(code, c.multiplier)) for c in classes}
    best = max(per_class.values())
    return CodeApDistResult(best, per_class, tuple(c for c, v in per_class.items() if v == best))


def _reaches(code: AbelianCode, target: int, classes: Sequence[RootClass]) -> bool:
    """d*(C) >= target, stopping at the first class that proves it."""
    return any(apparent_distance_alpha(apply_multiplier(code, c.multiplier)) >= target for c in classes)


# -- multivariate BCH --------------------------------------------------------


def _longest_zero_run(nonzero: np.ndarray) -> tuple[int, int]:
    """(length, start) of the longest cyclic run of False entries; (0, 0) if none."""
    r = len(nonzero)
    if nonzero.all():
        return 0, 0
    best, best_start = 0, 0
    for start in range(r):
        if nonzero[start] or not nonzero[start - 1]:
            continue
        n = 0
        while n < r and not nonzero[(start + n) % r]:
            n += 1
        if n > best:
            best, best_start = n, start
    return best, best_start


def bch_runs(code: AbelianCode) -> dict[int, tuple[int, int]]:
    """Direction k -> (length, start) of its longest cyclic run of zero hypercolumns."""
    _require_nonzero(code)
    m = code.hypermatrix()
    out = {}
    for k in range(1, code.shape.s + 1):
        length, start = _longest_zero_run(m.nonzero_levels(k))
        if length:
            out[k] = (length, start)
    return out


def bch_bound(code: AbelianCode) -> int:
    """Product of (run + 1) over the directions that have a zero-hypercolumn run.

    This is the BCH bound for the largest (gamma, delta, b) whose stack is
    contained in D, so it never exceeds d*_alpha(C).
    """
    return math.prod(n + 1 for n, _ in bch_runs(code).values())


@dataclass(frozen=True)
class BchSpec:
    """Parameters (gamma, delta, b) of a multivariate BCH code; directions are 1-based."""

    gamma: tuple[int, ...]
    delta: dict[int, int]
    b: dict[int, int]

    def __post_init__(self) -> None:
        gamma = tuple(sorted({int(k) for k in self.gamma}))
        if not gamma:
            raise ValidationError("gamma must be a nonempty set of directions")
        delta = {int(k): int(v) for k, v in self.delta.items()}
        b = {int(k): int(v) for k, v in self.b.items()}
        for k in gamma:
            if k not in delta:
                raise ValidationError(f"delta is missing direction {k}")
            if b.get(k, 0) < 0:
                raise ValidationError(f"offset b_{k} must be nonnegative")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", {k: delta[k] for k in gamma})
        object.__setattr__(self, "b", {k: b.get(k, 0) for k in gamma})

    def validate(self, shape: Shape) -> None:
        for k in self.gamma:
            if not 1 <= k <= shape.s:
                raise ValidationError(f"direction {k} outside 1..{shape.s}")
            if not 2 <= self.delta[k] <= shape.r[k - 1]:
                raise ValidationError(f"delta_{k}={self.delta[k]} outside [2, r_{k}={shape.r[k - 1]}]")

    def designed_distance(self) -> int:
        return math.prod(self.delta.values())

    def to_json(self) -> dict:
        return {"b": {str(k): v for k, v in self.b.items()}, "delta": {str(k): v for k, v in self.delta.items()},
                "gamma": list(self.gamma)}

    @classmethod
    def from_json(cls, obj: Mapping) -> BchSpec:
        try:
            return cls(tuple(obj["gamma"]), dict(obj["delta"]), dict(obj.get("b", {})))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"malformed BCH spec: {exc!r}") from None


def bch_code(shape: Shape, spec: BchSpec) -> AbelianCode:
    """Union over k in gamma of the orbits of indices with k-th coordinate in J_k."""
    spec.validate(shape)
    mask = np.zeros(shape.r, dtype=bool)
    for k in spec.gamma:
        rk = shape.r[k - 1]
        idx = [slice(None)] * shape.s
        idx[k - 1] = [(spec.b[k] + ell) % rk for ell in range(spec.delta[k] - 1)]
        mask[tuple(idx)] = True
    labels, _ = orbit_labels(shape)
    mask = np.isin(labels, np.unique(labels[mask]))
    return AbelianCode(shape, mask)


def bch_dimension_bound(shape: Shape, spec: BchSpec) -> int:
    """prod r - m * sum_k (delta_k - 1) prod_{j != k} r_j with m = lcm of all O_{r_k}(q).

    The value is returned as is; anything <= 0 is a vacuous bound.
    """
    spec.validate(shape)
    m = lcm(mult_order(shape.q, rk) for rk in shape.r)
    n = shape.size
    return n - m * sum((spec.delta[k] - 1) * (n // shape.r[k - 1]) for k in spec.gamma)


def rs_exact(shape: Shape, spec: BchSpec, verify: bool = True) -> tuple[int, int]:
    """(delta_k, (r_k - delta_k + 1) prod_{j != k} r_j) for gamma = {k} and r_k = q - 1.

    With ``verify`` the pair is checked against mad and the defining-set size.
    """
    spec.validate(shape)
    if len(spec.gamma) != 1:
        raise ValidationError("rs_exact needs a single direction in gamma")
    (k,) = spec.gamma
    rk = shape.r[k - 1]
    if rk != shape.q - 1:
        raise ValidationError(f"rs_exact needs r_{k} = q - 1 = {shape.q - 1}, got {rk}")
    dk = spec.delta[k]
    out = (dk, (rk - dk + 1) * (shape.size // rk))
    if verify:
        code = bch_code(shape, spec)
        got = (apparent_distance_alpha(code), code.dimension)
        if got != out:
            raise EngineMismatch(f"closed form {out} disagrees with computed {got}")
    return out


# -- dimension multiplication ------------------------------------------------


def is_column_constant(m: OrbitHypermatrix | AbelianCode, k: int) -> bool:
    """True iff every hypercolumn in direction k is all-zero or all-one."""
    sup = m.hypermatrix().support if isinstance(m, AbelianCode) else m.support
    if not 1 <= k <= sup.ndim:
        raise ValidationError(f"direction k={k} outside 1..{sup.ndim}")
    other = tuple(i for i in range(sup.ndim) if i != k - 1)
    if not other:
        return True
    return bool(np.all(sup.all(axis=other) | ~sup.any(axis=other)))


@dataclass(frozen=True)
class MultiplyResult:
    code: AbelianCode
    source: AbelianCode        # the cyclic code after any remapping
    multiplier: int            # root-class multiplier applied to the source
    d_star: int


def multiply_dimension(code: AbelianCode, n: int) -> MultiplyResult:
    """C_n in A_q(n, r) with defining set Z_n x D(C): dim(C_n) = n dim(C), d*(C_n) = d*(C).

    If the standard root is not optimized for C, D is first replaced by a.D
    for the first optimizing class a.
    """
    if code.shape.s != 1:
        raise ValidationError("multiply_dimension takes a cyclic code (s = 1)")
    _require_nonzero(code)
    q, (r,) = code.shape.q, code.shape.r
    if n < 1 or math.gcd(q, n * r) != 1:
        raise ValidationError(f"gcd(q, n*r) must be 1; q={q}, n={n}, r={r}")
    res = apparent_distance_code(code)
    ident = RootClass((1 % r,))
    mult = ident if ident in res.optimized_roots else res.optimized_roots[0]
    src = apply_multiplier(code, mult.multiplier)
    shape = Shape(q, (n, r))
    mask = np.broadcast_to(src.defining_mask[None, :], shape.r)
    return MultiplyResult(AbelianCode(shape, mask), src, mult.multiplier[0], res.value)


# -- HD search ---------------------------------------------------------------


@dataclass(frozen=True)
class HdSearchResult:
    codes: list[AbelianCode]
    dimension: int | None
    evaluated: int


def _subsets_by_mass(sizes: Sequence[int]):
    """Yield every subset of range(len(sizes)) (as sorted tuples) in order of total size."""
    order = sorted(range(len(sizes)), key=lambda i: (sizes[i], i))
    w = [sizes[i] for i in order]
    yield 0, ()
    if not order:
        return
    heap = [(w[0], (0,))]
    while heap:
        mass, pos = heapq.heappop(heap)
        yield mass, tuple(sorted(order[p] for p in pos))
        last = pos[-1]
        if last + 1 < len(w):
            heapq.heappush(heap, (mass + w[last + 1], pos + (last + 1,)))
            heapq.heappush(heap, (mass - w[last] + w[last + 1], pos[:-1] + (last + 1,)))


def _orbit_permutations(shape: Shape) -> list[np.ndarray]:
    """Action of each root-class multiplier on orbit ids."""
    labels, members = orbit_labels(shape)
    perms = []
    for c in root_class_representatives(shape):
        perms.append(np.array([int(labels[c.apply(shape, shape.unflat(int(m[0])))]) for m in members]))
    return perms


def hd_search(shape: Shape, target_d: int, budget: int = 10_000) -> HdSearchResult:
    """Maximum-dimension codes with d*(C) >= target_d.

    Defining sets are visited as unions of q-orbits in order of increasing
    size, so the first size that succeeds is optimal and the search stops
    after finishing it.  Only the lexicographically smallest member of each
    root-class family is evaluated; every distinct member of a winning family
    is returned, sorted by orbit representatives.  ``budget`` caps the number
    of evaluated defining sets; exceeding it raises BudgetExceeded, while an
    exhausted search with no hit returns an empty result.
    """
    if target_d < 2:
        raise ValidationError("target_d must be at least 2")
    _, members = orbit_labels(shape)
    sizes = [len(m) for m in members]
    perms = _orbit_permutations(shape)
    classes = root_class_representatives(shape)
    n_orbits = len(sizes)
    evaluated = 0
    found: list[tuple[int, ...]] = []
    found_mass = None
    for mass, subset in _subsets_by_mass(sizes):
        if found_mass is not None and mass > found_mass:
            break
        if len(subset) == n_orbits:
            continue  # zero code
        images = {tuple(sorted(int(p[i]) for i in subset)) for p in perms}
        if subset != min(images):
            continue
        evaluated += 1
        if evaluated > budget:
            raise BudgetExceeded(f"hd_search needs more than {budget} evaluations", None, budget)
        code = _code_from_orbit_ids(shape, subset)
        if _reaches(code, target_d, classes):
            found_mass = mass
            found.extend(images)
    codes = sorted((_code_from_orbit_ids(shape, s) for s in set(found)), key=lambda c: c.defining_reps())
    return HdSearchResult(codes, codes[0].dimension if codes else None, evaluated)


def _code_from_orbit_ids(shape: Shape, ids: Sequence[int]) -> AbelianCode:
    labels, _ = orbit_labels(shape)
    return AbelianCode(shape, np.isin(labels, np.asarray(ids, dtype=np.int64)))
