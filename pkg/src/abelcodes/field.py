"""Table-driven arithmetic in GF(p^v) and the splitting field of a shape.

Elements are integers 0 <= x < p^v whose base-p digits are the coefficients of
a polynomial in the basis 1, x, ..., x^(v-1) (digit i <-> x^i).  The prime
subfield is exactly {0, ..., p-1}.

All operations accept Python ints or integer numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import Shape, lcm, mult_order, prime_factors
from .errors import ValidationError

# -- polynomials over Z_p as coefficient lists, lowest degree first ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _polymulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polymod(out, m, p)


def _polypowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _polymod(a, m, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, p)
        base = _polymulmod(base, base, m, p)
        e >>= 1
    return result


def _polygcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def _digits(x: int, p: int, v: int) -> list[int]:
    out = []
    for _ in range(v):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _undigits(d: list[int], p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(d))


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over Z_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _trim([c % p for c in _subtract(_polypowmod(x, p**n, f, p), x, p)]):
        return False
    for ell in prime_factors(n):
        h = _subtract(_polypowmod(x, p ** (n // ell), f, p), x, p)
        if len(_polygcd(f, h, p)) > 1:
            return False
    return True


def _subtract(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def smallest_irreducible(p: int, v: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``v`` over Z_p.

    Candidates are ordered by the integer whose base-p digits are the lower
    coefficients.
    """
    for low in range(p**v):
        f = _digits(low, p, v) + [1]
        if is_irreducible(f, p):
            return f
    raise ValidationError(f"no irreducible polynomial of degree {v} over Z_{p}")  # unreachable


@dataclass(frozen=True, eq=False)
class GaloisField:
    """GF(p^v) with exp/log tables over the smallest primitive element ``g``."""

    p: int
    degree: int
    modulus: tuple[int, ...]
    generator: int
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def mult_order(self) -> int:
        return self.order - 1

    # arithmetic -----------------------------------------------------------

    def digits(self, x) -> np.ndarray:
        """Coefficient vectors, trailing axis of length ``degree``."""
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // (self.p ** np.arange(self.degree))) % self.p

    def undigits(self, d) -> np.ndarray:
        d = np.asarray(d, dtype=np.int64) % self.p
        return d @ (self.p ** np.arange(self.degree, dtype=np.int64))

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._pack(self.undigits(self.digits(a) + self.digits(b)), a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        return self._pack(self.undigits(-self.digits(a)), a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a_arr, b_arr = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        zero = (a_arr == 0) | (b_arr == 0)
        e = (self.log_table[a_arr] + self.log_table[b_arr]) % self.mult_order
        return self._pack(np.where(zero, 0, self.exp_table[e]), a, b)

    def inv(self, a):
        a_arr = np.asarray(a, dtype=np.int64)
        if np.any(a_arr == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._pack(self.exp_table[(-self.log_table[a_arr]) % self.mult_order], a)

    def pow(self, a, e: int):
        a_arr = np.asarray(a, dtype=np.int64)
        if e < 0:
            a_arr = np.asarray(self.inv(a_arr))
            e = -e
        if e == 0:
            return self._pack(np.ones_like(a_arr), a)
        out = np.where(a_arr == 0, 0, self.exp_table[(self.log_table[a_arr] * e) % self.mult_order])
        return self._pack(out, a)

    def exp(self, k):
        """g^k for integer exponents (any sign)."""
        k = np.asarray(k, dtype=np.int64)
        out = self.exp_table[k % self.mult_order]
        return int(out) if out.ndim == 0 else out

    def sum(self, values, axis=None):
        values = np.asarray(values, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(values, axis=axis) if values.size else 0
        d = self.digits(values)
        if axis is None:
            return int(self.undigits(d.reshape(-1, self.degree).sum(axis=0)))
        ax = axis if axis >= 0 else values.ndim + axis
        return self.undigits(d.sum(axis=ax))

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def in_prime_field(self, x) -> np.ndarray:
        return np.asarray(x) < self.p

    @staticmethod
    def _pack(out, *inputs):
        if all(np.ndim(x) == 0 for x in inputs):
            return int(out)
        return out


def _mul_matrix(f: list[int], p: int, elem: list[int]) -> np.ndarray:
    """Matrix of y -> elem * y on coefficient vectors (columns are images of x^i)."""
    v = len(f) - 1
    cols = []
    for i in range(v):
        prod = _polymulmod(elem, [0] * i + [1], f, p)
        cols.append(prod + [0] * (v - len(prod)))
    return np.array(cols, dtype=np.int64).T


@lru_cache(maxsize=32)
def galois_field(p: int, degree: int) -> GaloisField:
    """GF(p^degree) over the smallest irreducible modulus and smallest primitive element."""
    if len(prime_factors(p)) != 1 or prime_factors(p)[0] != p:
        raise ValidationError(f"field characteristic must be prime, got {p}")
    if degree < 1:
        raise ValidationError("field degree must be positive")
    f = smallest_irreducible(p, degree)
    order = p**degree
    n = order - 1
    qs = prime_factors(n) if n > 1 else []
    g = None
    for cand in range(1, order):
        poly = _trim(_digits(cand, p, degree))
        if all(_trim(_polypowmod(poly, n // ell, f, p)) != [1] for ell in qs):
            g = cand
            break
    assert g is not None
    g_poly = _trim(_digits(g, p, degree))

    # exp table in blocks: first block sequentially, the rest by one matrix product each
    block = min(n, 1024)
    mg = _mul_matrix(f, p, g_poly)
    first = np.zeros((block, degree), dtype=np.int64)
    cur = np.zeros(degree, dtype=np.int64)
    cur[0] = 1
    for i in range(block):
        first[i] = cur
        cur = mg @ cur % p
    step = _mul_matrix(f, p, _trim(cur.tolist()))  # multiplication by g^block
    rows = [first]
    shift = np.eye(degree, dtype=np.int64)
    for _ in range(1, -(-n // block)):
        shift = step @ shift % p
        rows.append(first @ shift.T % p)
    digits = np.concatenate(rows)[:n]
    exp_table = digits @ (p ** np.arange(degree, dtype=np.int64))
    log_table = np.zeros(order, dtype=np.int64)
    log_table[exp_table] = np.arange(n)
    if len(np.unique(exp_table)) != n:
        raise ValidationError("generator search failed; exp table is not a permutation")
    exp_table.flags.writeable = False
    log_table.flags.writeable = False
    return GaloisField(p, degree, tuple(f), g, exp_table, log_table)


@dataclass(frozen=True)
class SplittingField:
    """F_{q^v} together with the standard roots alpha_j of exact order r_j."""

    shape: Shape
    field: GaloisField
    root_logs: tuple[int, ...]  # alpha_j = g ** root_logs[j]

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(self.field.exp(e) for e in self.root_logs)

    def exponent(self, i, j) -> int:
        """log_g of alpha^(i.j) = prod_k alpha_k^(i_k j_k)."""
        return sum(e * a * b for e, a, b in zip(self.root_logs, i, j)) % self.field.mult_order

    def exponent_table(self) -> np.ndarray:
        """|I| x |I| matrix of log_g alpha^(i.j), rows i and columns j in flat order."""
        sh = self.shape
        grid = np.indices(sh.r).reshape(sh.s, -1) if sh.r else np.zeros((0, 1), dtype=np.int64)
        w = np.array(self.root_logs, dtype=np.int64)[:, None] * grid
        return (w.T @ grid) % self.field.mult_order


def splitting_field(shape: Shape) -> SplittingField:
    """F_{q^v}, v = ord_{lcm(r)}(q), and alpha_j = g^((q^v - 1) / r_j)."""
    if shape.p != shape.q:
        raise ValidationError(f"the field tower is only built for prime q (got q={shape.q})")
    v = mult_order(shape.q, lcm(shape.r)) if shape.r else 1
    F = galois_field(shape.q, v)
    logs = tuple(F.mult_order // rj for rj in shape.r)
    return SplittingField(shape, F, logs)


def order_of(F: GaloisField, x: int) -> int:
    """Multiplicative order of a nonzero element."""
    if x == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    return F.mult_order // math.gcd(F.mult_order, int(F.log_table[x]))
