"""Power sums over A_+(d), twisted by powers of chi_t, and their digit criteria."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import APoly, FieldSpec, TPoly, chi_eval
from ._batch import contract, mul_stack, multipliers
from .carlitz import DEFAULT_SIZE_LIMIT, enumerate_monic, monic_array

MAX_EXPONENT = 2**20
_TABLE_MAX = 96  # exponents up to this use the batched power table


@dataclass(frozen=True)
class DigitVector:
    base: int
    digits: tuple[int, ...]

    @classmethod
    def of(cls, n: int, base: int) -> "DigitVector":
        if n < 0 or base < 2:
            raise ValueError("need n >= 0 and base >= 2")
        digits = []
        while n:
            n, r = divmod(n, base)
            digits.append(r)
        return cls(base, tuple(digits))

    @property
    def value(self) -> int:
        return sum(d * self.base**i for i, d in enumerate(self.digits))

    @property
    def length(self) -> int:
        return sum(self.digits)


def q_length(n: int, base: int) -> int:
    """Sum of the base-``base`` digits of ``n``."""
    if n < 1:
        raise ValueError(f"q-length is defined for positive integers, got {n}")
    return DigitVector.of(n, base).length


def phi_degree(field: FieldSpec, beta: int, k: int) -> int:
    """min over 0 <= i < e of floor((l(p^i beta) + l(p^i k)) / (q - 1))."""
    if beta < 1 or k < 1:
        raise ValueError(f"phi is defined for positive beta, k; got beta={beta}, k={k}")
    p, q = field.p, field.q
    return min(
        (q_length(p**i * beta, q) + q_length(p**i * k, q)) // (q - 1) for i in range(field.e)
    )


def boeckle_degree(field: FieldSpec, k: int) -> int:
    """min over 0 <= i < e of floor(l(p^i k) / (q - 1))."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    p, q = field.p, field.q
    return min(q_length(p**i * k, q) // (q - 1) for i in range(field.e))


def sheats_test(field: FieldSpec, d: int, k: int) -> bool:
    """Digit criterion for S_d(k) != 0.

    Searches for i_0 + ... + i_d = k without p-adic carries, with i_j positive
    and divisible by q - 1 for j < d. The base-p digits of k are distributed
    one position at a time; the search state is the residue of each
    constrained slot mod (q - 1) and which of those slots are already positive.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if d < 0 or d > 6:
        raise ValueError("sheats_test supports 0 <= d <= 6")
    p, m = field.p, field.q - 1
    digits = DigitVector.of(k, p).digits
    weights = [pow(p, r, m) if m > 1 else 0 for r in range(len(digits))]

    @lru_cache(maxsize=None)
    def search(pos: int, residues: tuple[int, ...], positive: int) -> bool:
        if pos == len(digits):
            return positive == (1 << d) - 1 and not any(residues)
        for split in _compositions(digits[pos], d + 1):
            nres = tuple((r + c * weights[pos]) % m if m > 1 else 0
                         for r, c in zip(residues, split[:d]))
            npos = positive
            for j in range(d):
                if split[j]:
                    npos |= 1 << j
            if search(pos + 1, nres, npos):
                return True
        return False

    return search(0, (0,) * d, 0)


@lru_cache(maxsize=None)
def _compositions(n: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 1:
        return ((n,),)
    out = []
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=16)
def _power_table(field: FieldSpec, d: int, kmax: int, limit: float) -> np.ndarray:
    """a^j for every a in A_+(d) and j <= kmax, shape (q^d, kmax + 1, d*kmax + 1, e)."""
    e = field.e
    mon = monic_array(field, d, limit)
    n = mon.shape[0]
    width = d * kmax + 1
    table = np.zeros((n, kmax + 1, width, e), dtype=np.int64)
    table[:, 0, 0, 0] = 1
    mats = multipliers(field, mon)
    for j in range(kmax):
        table[:, j + 1, : d * (j + 1) + 1] = mul_stack(field, table[:, j, : d * j + 1], mon, mats)
    table.setflags(write=False)
    return table


def _rounded(kmax: int) -> int:
    return max(16, -(-kmax // 16) * 16)


def twisted_power_sum(field: FieldSpec, d: int, beta: int, k: int,
                      limit: float = DEFAULT_SIZE_LIMIT) -> TPoly:
    """S_d(chi_t^beta, k): the sum of chi_t(a)^beta * a^k over a in A_+(d)."""
    if beta < 0 or k < 0:
        raise ValueError("beta and k must be non-negative")
    if max(beta, k) > MAX_EXPONENT:
        raise ValueError(f"exponent exceeds {MAX_EXPONENT}")
    if max(beta, k) <= _TABLE_MAX:
        table = _power_table(field, d, _rounded(max(beta, k)), limit)
        return TPoly(field, contract(field, table[:, beta], table[:, k]))
    total = TPoly.zero(field)
    for a in enumerate_monic(field, d, limit):
        total = total + chi_eval(a) ** beta * a**k
    return total


def power_sum(field: FieldSpec, d: int, k: int, limit: float = DEFAULT_SIZE_LIMIT) -> APoly:
    """S_d(k): the sum of a^k over a in A_+(d)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > MAX_EXPONENT:
        raise ValueError(f"exponent exceeds {MAX_EXPONENT}")
    if k <= _TABLE_MAX:
        table = _power_table(field, d, _rounded(k), limit)
        return APoly(field, table[:, k].sum(axis=0))
    total = APoly.zero(field)
    for a in enumerate_monic(field, d, limit):
        total = total + a**k
    return total
