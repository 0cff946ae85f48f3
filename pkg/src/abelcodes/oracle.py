"""Brute-force checks that stay independent of the hypermatrix engine.

* Camion's apparent distance of a polynomial, evaluated literally over all
  shifts X^h f.
* The finite-field Fourier transform, its inverse and generating idempotents.
* Exhaustive mad over every nonzero sub-hypermatrix.
* Generator matrices from the zero constraints at the defining set, and
  exhaustive minimum distance by a Gray-code walk of the row span.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .algebra import Index, Shape
from .errors import BudgetExceeded, EngineMismatch, ValidationError, ZeroCodeError
from .field import GaloisField, SplittingField, galois_field, splitting_field
from .hypermatrix import OrbitHypermatrix, dstar

DEFAULT_ORBIT_BUDGET = 20
DEFAULT_SPAN_BUDGET = 1 << 24
EXTENDED_SPAN_BUDGET = 1 << 28


@dataclass(frozen=True)
class AmbientPolynomial:
    """f = sum a_i X^i in A(r_1, ..., r_s) over ``field``; zero coefficients are dropped."""

    shape: Shape
    field: GaloisField
    coeffs: Mapping[Index, int]

    def __post_init__(self) -> None:
        clean = {}
        for i, c in self.coeffs.items():
            i = tuple(int(x) % rj for x, rj in zip(i, self.shape.r))
            c = int(c)
            if not 0 <= c < self.field.order:
                raise ValidationError(f"{c} is not an element of GF({self.field.order})")
            if c:
                clean[i] = int(self.field.add(clean.get(i, 0), c))
                if not clean[i]:
                    del clean[i]
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_dense(cls, shape: Shape, F: GaloisField, values) -> AmbientPolynomial:
        values = np.asarray(values, dtype=np.int64).reshape(shape.r)
        return cls(shape, F, {tuple(int(x) for x in i): int(values[tuple(i)]) for i in np.argwhere(values)})

    def dense(self) -> np.ndarray:
        out = np.zeros(self.shape.r, dtype=np.int64)
        for i, c in self.coeffs.items():
            out[i] = c
        return out

    @property
    def support(self) -> np.ndarray:
        return self.dense() != 0

    def weight(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def shift(self, h: Index) -> AmbientPolynomial:
        """X^h f with exponents reduced modulo r."""
        return AmbientPolynomial(self.shape, self.field, {
            tuple((a + b) % rj for a, b, rj in zip(i, h, self.shape.r)): c for i, c in self.coeffs.items()})

    def __add__(self, other: AmbientPolynomial) -> AmbientPolynomial:
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = int(self.field.add(out.get(i, 0), c))
        return AmbientPolynomial(self.shape, self.field, out)

    def __mul__(self, other: AmbientPolynomial) -> AmbientPolynomial:
        out: dict[Index, int] = {}
        F = self.field
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = tuple((x + y) % rj for x, y, rj in zip(i, j, self.shape.r))
                out[k] = int(F.add(out.get(k, 0), F.mul(a, b)))
        return AmbientPolynomial(self.shape, F, out)


# -- Camion's apparent distance ---------------------------------------------


def _poly_dstar(r: tuple[int, ...], terms: frozenset) -> int:
    return _poly_dstar_cached(r, terms)


@lru_cache(maxsize=1 << 16)
def _poly_dstar_cached(r: tuple[int, ...], terms: frozenset) -> int:
    if not terms:
        return 0
    if len(r) == 0:
        return 1
    if len(r) == 1:
        rr = r[0]
        best = 0
        for h in range(rr):
            deg = max((e[0] + h) % rr for e, _ in terms)
            best = max(best, rr - deg)
        return best
    best = 0
    for h in itertools.product(*(range(x) for x in r)):
        shifted = [(tuple((a + b) % x for a, b, x in zip(e, h, r)), c) for e, c in terms]
        for k in range(len(r)):
            d_k = max(e[k] for e, _ in shifted)
            lead = frozenset((e[:k] + e[k + 1:], c) for e, c in shifted if e[k] == d_k)
            best = max(best, _poly_dstar(r[:k] + r[k + 1:], lead) * (r[k] - d_k))
    return best


def apparent_distance_poly(f: AmbientPolynomial) -> int:
    """Camion's d*(f): max over h in I and directions k of d*(c_k[h]) (r_k - d_k[h])."""
    return _poly_dstar(f.shape.r, frozenset(f.coeffs.items()))


# -- Fourier transform -------------------------------------------------------


def _exponents(sf: SplittingField) -> np.ndarray:
    return sf.exponent_table()


def _transform(values: np.ndarray, F: GaloisField, expo: np.ndarray) -> np.ndarray:
    """out_j = sum_i values_i g^expo[i, j] for a flat coefficient vector."""
    nz = np.flatnonzero(values)
    if nz.size == 0:
        return np.zeros(expo.shape[1], dtype=np.int64)
    logs = F.log_table[values[nz]][:, None]
    terms = F.exp_table[(logs + expo[nz]) % F.mult_order]
    return np.asarray(F.sum(terms, axis=0), dtype=np.int64)


def fourier_transform(f: AmbientPolynomial, sf: SplittingField | None = None) -> AmbientPolynomial:
    """phi_{alpha,f} = sum_j f(alpha^j) X^j over the splitting field."""
    sf = sf or splitting_field(f.shape)
    F = sf.field
    vals = f.dense().reshape(-1)
    if f.field.degree != 1 and f.field is not F:
        raise ValidationError("polynomial must live over the prime field or the splitting field")
    return AmbientPolynomial.from_dense(f.shape, F, _transform(vals, F, _exponents(sf)))


def inverse_fourier_transform(phi: AmbientPolynomial, sf: SplittingField | None = None) -> AmbientPolynomial:
    """f_i = |I|^-1 sum_j phi_j alpha^(-i.j)."""
    sf = sf or splitting_field(phi.shape)
    F = sf.field
    n = phi.shape.size
    n_inv = pow(n % F.p, -1, F.p)
    raw = _transform(phi.dense().reshape(-1), F, (-_exponents(sf)) % F.mult_order)
    return AmbientPolynomial.from_dense(phi.shape, F, F.mul(raw, n_inv))


def _defining_mask(code) -> tuple[Shape, np.ndarray]:
    if isinstance(code, OrbitHypermatrix):
        return code.shape, code.defining_mask
    m = code.hypermatrix()
    return m.shape, m.defining_mask


def generating_idempotent(code) -> AmbientPolynomial:
    """The idempotent e with phi(e) equal to 1 off D and 0 on D, as a polynomial over F_q."""
    shape, dmask = _defining_mask(code)
    if dmask.all():
        raise ZeroCodeError("the zero code has no nonzero generating idempotent")
    sf = splitting_field(shape)
    F = sf.field
    ind = AmbientPolynomial.from_dense(shape, F, (~dmask).astype(np.int64))
    e = inverse_fourier_transform(ind, sf)
    if not all(c < F.p for c in e.coeffs.values()):
        raise ValidationError("inverse transform is not F_q-rational; D is not orbit-closed")
    return AmbientPolynomial(shape, galois_field(F.p, 1), e.coeffs)


# -- exhaustive mad ----------------------------------------------------------


def mad_bruteforce(m: OrbitHypermatrix, budget: int = DEFAULT_ORBIT_BUDGET) -> int:
    """min d*(P) over all 2^k - 1 nonzero orbit sub-hypermatrices P <= M."""
    if m.is_zero:
        raise ZeroCodeError("mad is undefined for the zero hypermatrix")
    free = m.support_orbits()
    if len(free) > budget:
        raise BudgetExceeded(f"{len(free)} free orbits exceed the enumeration budget {budget}",
                             len(free), budget)
    members = m.orbit_members
    masks = []
    for o in free:
        mk = np.zeros(m.shape.size, dtype=bool)
        mk[members[o]] = True
        masks.append(mk)
    best = None
    cur = np.zeros(m.shape.size, dtype=bool)
    # Gray order: one orbit toggled per step
    for step in range(1, 1 << len(free)):
        bit = (step & -step).bit_length() - 1
        cur ^= masks[bit]
        d = dstar(cur.reshape(m.shape.r))
        if best is None or d < best:
            best = d
    return best


# -- generator matrices and minimum distance ---------------------------------


def _rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - a[others, c][:, None] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : a x = 0} over Z_p."""
    n = a.shape[1]
    red, pivots = _rref_mod_p(a, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, fcol in enumerate(free):
        basis[i, fcol] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-red[row, fcol]) % p
    return basis


def rank_mod_p(a: np.ndarray, p: int) -> int:
    return len(_rref_mod_p(a, p)[1])


@dataclass(frozen=True)
class GeneratorMatrix:
    shape: Shape
    rows: np.ndarray = field(repr=False)  # k x |I| over F_q, columns in flat order of I

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]


def generator_matrix(code) -> GeneratorMatrix:
    """Basis of {c : c(alpha^j) = 0 for j in D} from the nullspace of the evaluation constraints."""
    shape, dmask = _defining_mask(code)
    if shape.p != shape.q:
        raise ValidationError("generator matrices are built for prime q only")
    if dmask.all():
        raise ZeroCodeError("the zero code has no generator matrix")
    sf = splitting_field(shape)
    F = sf.field
    expo = _exponents(sf)
    n = shape.size
    dflat = np.flatnonzero(dmask.reshape(-1))
    if dflat.size == 0:
        rows = np.eye(n, dtype=np.int64)
    else:
        # row block per j in D: the F_p coordinates of alpha^(i.j) for every column i
        vals = F.exp_table[expo[:, dflat]]          # n x |D|
        digits = F.digits(vals)                      # n x |D| x v
        constraints = digits.transpose(1, 2, 0).reshape(-1, n)
        rows = nullspace_mod_p(constraints, F.p)
    if rows.shape[0] + dflat.size != n:
        raise EngineMismatch(f"rank {n - rows.shape[0]} != |D| = {dflat.size}; defining set not orbit-closed?")
    # the span must vanish on D and nowhere else
    tr = np.stack([_transform(row, F, expo) for row in rows])
    vanish = ~(tr != 0).any(axis=0)
    if not np.array_equal(vanish, dmask.reshape(-1)):
        raise EngineMismatch("transform support of the generator rows does not match the defining set")
    return GeneratorMatrix(shape, rows.astype(np.uint8))


def _pack_bits(rows: np.ndarray) -> np.ndarray:
    """Pack 0/1 rows into uint64 words (little-endian bit order)."""
    k, n = rows.shape
    words = -(-n // 64)
    padded = np.zeros((k, words * 64), dtype=np.uint8)
    padded[:, :n] = rows
    return np.packbits(padded.reshape(k, words, 64), axis=2, bitorder="little").view(np.uint64).reshape(k, words)


def _span_table(rows: np.ndarray, q: int) -> np.ndarray:
    """All q^a combinations of the given rows (Gray order irrelevant here)."""
    table = np.zeros((1, rows.shape[1]), dtype=rows.dtype)
    for row in rows:
        if q == 2:
            table = np.concatenate([table, table ^ row])
        else:
            table = np.concatenate([(table + c * row) % q for c in range(q)])
    return table


def min_distance_bruteforce(code, budget: int = DEFAULT_SPAN_BUDGET, split: int = 16) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    The first ``split`` rows are tabulated once; the remaining rows are walked
    in (q-ary, modular) Gray order so each step adds a single row to the
    running offset.
    """
    g = code if isinstance(code, GeneratorMatrix) else generator_matrix(code)
    q = g.shape.q
    k, n = g.k, g.n
    total = q**k
    if total > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the enumeration budget {budget}", total, budget)
    if k == 0:
        raise ZeroCodeError("the zero code has no nonzero codewords")
    low = min(k, split)
    rows = g.rows.astype(np.int64)
    if q == 2:
        packed = _pack_bits(rows.astype(np.uint8))
        table = _span_table(packed[:low], 2)
        high = packed[low:]
        weights = np.bitwise_count(table).sum(axis=1, dtype=np.int64)
        best = int(weights[1:].min()) if len(table) > 1 else n + 1
        cur = np.zeros(packed.shape[1], dtype=np.uint64)
        for step in range(1, 1 << (k - low)):
            bit = (step & -step).bit_length() - 1
            cur ^= high[bit]
            w = np.bitwise_count(table ^ cur).sum(axis=1, dtype=np.int64).min()
            best = min(best, int(w))
        return best
    table = _span_table(rows[:low], q)
    high = rows[low:]
    weights = (table != 0).sum(axis=1)
    best = int(weights[1:].min()) if len(table) > 1 else n + 1
    cur = np.zeros(n, dtype=np.int64)
    for step in range(1, q ** (k - low)):
        j, s = 0, step
        while s % q == 0:
            s //= q
            j += 1
        cur = (cur + high[j]) % q
        w = ((table + cur) % q != 0).sum(axis=1).min()
        best = min(best, int(w))
    return best


def dimension(code) -> int:
    """Dimension read off the generator matrix (independent of |D| bookkeeping)."""
    return generator_matrix(code).k


def prime_field(p: int) -> GaloisField:
    return galois_field(p, 1)

