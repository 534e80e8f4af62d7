"""Finite sets A_+(d) and A(d), Carlitz factorials, and the polynomials e_d(z)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._batch import apply_matrix
from .algebra import APoly, FieldSpec, ZPoly, exact_div
from .errors import TooLarge

DEFAULT_SIZE_LIMIT = 13  # max d * log2(q) for any enumeration, i.e. q^d <= 8192


def check_size(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> None:
    if d < 0:
        raise ValueError(f"degree must be non-negative, got {d}")
    if d * math.log2(field.q) > limit:
        raise TooLarge(f"q^d = {field.q}^{d} exceeds the enumeration limit 2^{limit}")


def _digit_array(field: FieldSpec, d: int) -> np.ndarray:
    """Coordinates of all coefficient tuples of length d, shape (q^d, d, e).

    Row n holds the base-q digits of n (the theta^0 coefficient varies fastest).
    """
    q = field.q
    n = np.arange(q**d, dtype=np.int64)
    digits = np.stack([(n // q**i) % q for i in range(d)], axis=-1) if d else np.zeros((1, 0), np.int64)
    return field.coords_of(digits).reshape(q**d, d, field.e)


def monic_array(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> np.ndarray:
    """All of A_+(d) stacked as one array of shape (q^d, d + 1, e)."""
    check_size(field, d, limit)
    return _monic_array(field, d)


@lru_cache(maxsize=64)
def _monic_array(field: FieldSpec, d: int) -> np.ndarray:
    low = _digit_array(field, d)
    top = np.zeros((low.shape[0], 1, field.e), dtype=np.int64)
    top[:, 0, 0] = 1
    arr = np.concatenate([low, top], axis=1)
    arr.setflags(write=False)
    return arr


def below_array(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> np.ndarray:
    """All of A(d) (degree < d, zero included), shape (q^d, max(d, 1), e)."""
    check_size(field, d, limit)
    return _below_array(field, d)


@lru_cache(maxsize=64)
def _below_array(field: FieldSpec, d: int) -> np.ndarray:
    if d == 0:
        arr = np.zeros((1, 1, field.e), dtype=np.int64)
    else:
        arr = _digit_array(field, d)
    arr.setflags(write=False)
    return arr


def enumerate_monic(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> list[APoly]:
    """A_+(d) in lexicographic order, low-degree coefficient varying fastest."""
    return [APoly(field, row, _canonical=True) for row in monic_array(field, d, limit)]


def enumerate_below(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> list[APoly]:
    """A(d) in the same lexicographic order; ``A(0) = [0]``."""
    return [APoly(field, row) for row in below_array(field, d, limit)]


@dataclass(frozen=True)
class CarlitzBasics:
    d: int
    D: APoly
    L: APoly
    bracket: APoly


def bracket(field: FieldSpec, d: int) -> APoly:
    """theta^(q^d) - theta (zero for d = 0)."""
    theta = APoly.theta(field)
    return theta.shift(field.q**d - 1) - theta


@lru_cache(maxsize=64)
def factorials(field: FieldSpec, d: int) -> CarlitzBasics:
    """D_d and L_d from  D_d = [d] D_{d-1}^q  and  L_d = [d] L_{d-1}."""
    if d < 0:
        raise ValueError("d must be non-negative")
    one = APoly.one(field)
    if d == 0:
        return CarlitzBasics(0, one, one, bracket(field, 0))
    prev = factorials(field, d - 1)
    b = bracket(field, d)
    return CarlitzBasics(d, b * prev.D ** field.q, b * prev.L, b)


def product_of_linear_factors(field: FieldSpec, roots: np.ndarray) -> np.ndarray:
    """Array (z, theta, e) of prod_r (z - r) for a stack of APoly arrays ``roots``."""
    p, e = field.p, field.e
    n, rw = roots.shape[0], roots.shape[1]
    width = max(rw - 1, 0) * n + 1
    poly = np.zeros((n + 1, width, e), dtype=np.int64)
    poly[0, 0, 0] = 1
    for s in range(n):
        r = roots[s]
        cur_deg = s  # z-degree before this factor
        cur_w = max(rw - 1, 0) * s + 1
        cur = poly[: cur_deg + 1, :cur_w].copy()
        new = np.zeros((cur_deg + 2, cur_w + rw - 1, e), dtype=np.int64)
        new[1:, :cur_w] += cur
        for i in range(rw):
            c = r[i]
            if not c.any():
                continue
            if e == 1:
                new[: cur_deg + 1, i:i + cur_w] -= cur * int(c[0])
            else:
                new[: cur_deg + 1, i:i + cur_w] -= apply_matrix(cur, field.mul_matrix(c))
        poly[: cur_deg + 2, : cur_w + rw - 1] = new % p
    return poly


def _zpoly_from_za(field: FieldSpec, arr: np.ndarray) -> ZPoly:
    return ZPoly(field, arr[:, None, :, :])


def e_poly(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> ZPoly:
    """e_d(z): the literal product of (z - a) over a in A(d)."""
    check_size(field, d, limit)
    return _e_poly(field, d)


@lru_cache(maxsize=32)
def _e_poly(field: FieldSpec, d: int) -> ZPoly:
    return _zpoly_from_za(field, product_of_linear_factors(field, _below_array(field, d)))


def e_shift(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> ZPoly:
    """e_d(z - theta^d): the literal product of (z - a) over a in A_+(d)."""
    check_size(field, d, limit)
    return _e_shift(field, d)


@lru_cache(maxsize=32)
def _e_shift(field: FieldSpec, d: int) -> ZPoly:
    return _zpoly_from_za(field, product_of_linear_factors(field, _monic_array(field, d)))


def m_one(field: FieldSpec, d: int) -> APoly:
    """The constant (-1)^d D_d / L_d, i.e. the Carlitz approximation of 1."""
    fb = factorials(field, d)
    num = fb.D if d % 2 == 0 else -fb.D
    return exact_div(num, fb.L).coeff(0)
