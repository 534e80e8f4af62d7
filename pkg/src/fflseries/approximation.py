"""Carlitz interpolation of functions A -> A[t] and the Wagner coefficients of chi_t.

For a function ``f`` on A_+(d) the Carlitz approximation is

    M_d(f)(z) = sum over a in A_+(d) of f(a) * E(z) / (z - a),

where ``E(z)`` is the product of ``z - a`` over A_+(d). All quotients
``E / (z - a)`` are produced together by one batched synthetic division, and
the weighted sum is accumulated coefficient by coefficient, so the quotients
never have to be held in memory at once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence, Union

import numpy as np

from ._batch import contract, mul_stack, multipliers
from .algebra import APoly, FieldSpec, RationalForm, TPoly, ZPoly, chi_eval, exact_div, rational_reduce
from .algebra.poly import _pad_to
from .carlitz import DEFAULT_SIZE_LIMIT, e_poly, e_shift, enumerate_monic, factorials, m_one, monic_array
from .errors import BoundTooSmall, DegreeTooHigh, NonExactDivision, NotLinear
from .powersums import DigitVector, q_length


@dataclass(frozen=True)
class LinearMapSpec:
    """An F_q-linear map A -> A[t] given by the images of 1, theta, theta^2, ...

    ``images[i]`` is f(theta^i); the map is defined on polynomials of degree at
    most ``bound = len(images) - 1``.
    """

    images: tuple[TPoly, ...]
    name: str = "custom"

    @property
    def bound(self) -> int:
        return len(self.images) - 1

    @property
    def field(self) -> FieldSpec:
        return self.images[0].field

    def __call__(self, a: APoly) -> TPoly:
        if a.degree > self.bound:
            raise BoundTooSmall(f"map known up to degree {self.bound}, argument has degree {a.degree}")
        total = TPoly.zero(a.field)
        for i, c in enumerate(a.coeffs):
            if c:
                total = total + self.images[i].scale(c)
        return total

    @classmethod
    def chi(cls, field: FieldSpec, bound: int) -> "LinearMapSpec":
        return cls(tuple(TPoly.monomial(field, (i, 0)) for i in range(bound + 1)), "chi")

    @classmethod
    def identity(cls, field: FieldSpec, bound: int) -> "LinearMapSpec":
        return cls(tuple(TPoly.monomial(field, (0, i)) for i in range(bound + 1)), "identity")

    @classmethod
    def chi_frobenius(cls, field: FieldSpec, j: int, bound: int) -> "LinearMapSpec":
        """a -> chi_t(a)^(q^j)."""
        qj = field.q**j
        return cls(tuple(TPoly.monomial(field, (i * qj, 0)) for i in range(bound + 1)), f"chi_frobenius({j})")

    @classmethod
    def random(cls, field: FieldSpec, bound: int, rng: random.Random,
               t_degree: int = 2, theta_degree: int = 2) -> "LinearMapSpec":
        images = []
        for _ in range(bound + 1):
            arr = np.array(
                [[[rng.randrange(field.p) for _ in range(field.e)] for _ in range(theta_degree + 1)]
                 for _ in range(t_degree + 1)],
                dtype=np.int64,
            )
            images.append(TPoly(field, arr))
        return cls(tuple(images), "random")


Function = Union[LinearMapSpec, Callable[[APoly], TPoly]]


@dataclass(frozen=True)
class WagnerData:
    d: int
    b: TPoly
    m0: TPoly

    def to_json(self) -> dict:
        return {"d": self.d, "b": self.b.to_json(), "m0": self.m0.to_json()}


def _values_array(field: FieldSpec, monics: Sequence[APoly], f: Function) -> np.ndarray:
    vals = []
    for a in monics:
        v = f(a)
        vals.append(v.embed(TPoly) if isinstance(v, APoly) else v)
    shape = tuple(max(v.array.shape[i] for v in vals) for i in range(2)) + (field.e,)
    return np.stack([_pad_to(v.array, shape) for v in vals])


def _interpolate(field: FieldSpec, d: int, values: np.ndarray, limit: float) -> np.ndarray:
    """Array (z, t, theta, e) of sum_a values[a] * E(z) / (z - a)."""
    p, e = field.p, field.e
    mon = monic_array(field, d, limit)
    big_e = e_shift(field, d, limit).array[:, 0]  # (n + 1, H, e)
    n = big_e.shape[0] - 1
    nvals, tlen, flen = values.shape[0], values.shape[1], values.shape[2]
    width = d * (n - 1) + 1 if n > 0 else 1
    out = np.zeros((n, tlen, width + flen - 1, e), dtype=np.int64)
    mats = multipliers(field, mon)
    quot = np.zeros((nvals, 1, e), dtype=np.int64)
    quot[:, 0, 0] = 1  # Q_{n-1} = leading coefficient of E
    for j in range(n - 1, -1, -1):
        w = quot.shape[1]
        for s in range(flen):
            col = values[:, :, s]
            if col.any():
                out[j, :, s:s + w] += contract(field, col, quot)
        nxt = mul_stack(field, quot, mon, mats)
        ej = big_e[j, : nxt.shape[1]]
        nxt += ej
        nxt %= p
        if j == 0:
            if nxt.any():
                raise NonExactDivision("z - a does not divide the product over A_+(d)")
            break
        quot = nxt[:, : d * (n - j) + 1]
    return out % p


def carlitz_approx(field: FieldSpec, d: int, f: Function, limit: float = DEFAULT_SIZE_LIMIT) -> ZPoly:
    """M_d(f): the interpolation sum over A_+(d)."""
    if isinstance(f, LinearMapSpec):
        if f.bound < d:
            raise BoundTooSmall(f"need images up to theta^{d}, have up to theta^{f.bound}")
        return _carlitz_approx_linear(field, d, f, limit)
    return _carlitz_approx_any(field, d, f, limit)


@lru_cache(maxsize=64)
def _carlitz_approx_linear(field: FieldSpec, d: int, f: LinearMapSpec, limit: float) -> ZPoly:
    return _carlitz_approx_any(field, d, f, limit)


def _carlitz_approx_any(field, d, f, limit) -> ZPoly:
    values = _values_array(field, enumerate_monic(field, d, limit), f)
    return ZPoly(field, _interpolate(field, d, values, limit))


def _weighted_cofactor_sum(items: list[tuple[TPoly, APoly]]) -> tuple[TPoly, APoly]:
    """(sum of v_a * prod_{b != a} b, prod of b) over pairs (v_a, a), by a product tree."""
    if len(items) == 1:
        return items[0][0], items[0][1]
    mid = len(items) // 2
    nl, pl = _weighted_cofactor_sum(items[:mid])
    nr, pr = _weighted_cofactor_sum(items[mid:])
    return nl * pr + nr * pl, pl * pr


def carlitz_constant(field: FieldSpec, d: int, f: Function, limit: float = DEFAULT_SIZE_LIMIT) -> TPoly:
    """M_d(f)(0) without expanding M_d(f).

    The quotient E(z) / (z - a) takes the value (-1)^(q^d + 1) prod_{b != a} b
    at z = 0, since E(0) is (-1)^(q^d) times the product of all monics.
    """
    monics = enumerate_monic(field, d, limit)
    values = [v.embed(TPoly) if isinstance(v, APoly) else v for v in (f(a) for a in monics)]
    num, _ = _weighted_cofactor_sum(list(zip(values, monics)))
    return num if field.q**d % 2 else -num


def chi_power(beta: int) -> Callable[[APoly], TPoly]:
    """The (generally non-linear) map a -> chi_t(a)^beta."""

    def f(a: APoly) -> TPoly:
        return chi_eval(a) ** beta

    f.__name__ = f"chi^{beta}"
    return f


def p_approx(field: FieldSpec, d: int, f: Function, limit: float = DEFAULT_SIZE_LIMIT) -> ZPoly:
    """P_d(f) = M_d(f) - M_d(f)(0)."""
    if d == 0:
        return ZPoly.zero(field)
    m = carlitz_approx(field, d, f, limit)
    return m - m.constant_term()


def wagner_coeff(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> WagnerData:
    """b_d(chi_t) = (-1)^d (L_d / D_d) M_d(chi_t)(0)."""
    return _wagner_coeff(field, d, limit)


@lru_cache(maxsize=32)
def _wagner_coeff(field: FieldSpec, d: int, limit: float) -> WagnerData:
    m0 = carlitz_constant(field, d, LinearMapSpec.chi(field, d), limit)
    fb = factorials(field, d)
    num = fb.L * m0
    if d % 2:
        num = -num
    return WagnerData(d, exact_div(num, fb.D), m0)


def wagner_product(field: FieldSpec, d: int) -> TPoly:
    """prod over 0 <= l < d of (t - theta^(q^l))."""
    t = TPoly.t(field)
    result = TPoly.one(field)
    for l in range(d):
        result = result * (t - APoly.theta(field).shift(field.q**l - 1))
    return result


def alpha_decompose(field: FieldSpec, d: int, f: Function,
                    limit: float = DEFAULT_SIZE_LIMIT) -> list[RationalForm]:
    """Coefficients alpha_{d,i} with (-1)^d (L_d/D_d) P_d(f) = sum_{i<d} alpha_{d,i} e_i."""
    if d < 1:
        raise ValueError("alpha coefficients are defined for d >= 1")
    rem = p_approx(field, d, f, limit)
    if not rem.is_fq_linear():
        raise NotLinear(f"P_{d}(f) has exponents {rem.nonzero_exponents()}")
    q = field.q
    gammas: list[TPoly] = [TPoly.zero(field)] * d
    for i in range(d - 1, -1, -1):
        c = rem.coeff(q**i)
        gammas[i] = c
        if not c.is_zero():
            rem = rem - e_poly(field, i, limit) * c
    if not rem.is_zero():
        raise NotLinear(f"P_{d}(f) is not spanned by e_0..e_{d - 1}")
    fb = factorials(field, d)
    sign = -1 if d % 2 else 1
    return [rational_reduce(fb.L * g * sign, fb.D) for g in gammas]


def gen_series(field: FieldSpec, d: int, beta: int, count: int,
               limit: float = DEFAULT_SIZE_LIMIT) -> list[TPoly]:
    """Coefficients of 1/z^(k+1), k < count, in M_d(chi_t^beta)(z) / E(z).

    ``E`` is the product of ``z - a`` over A_+(d); the expansion is a power
    series division in 1/z against the reversed (constant term 1) polynomial.
    """
    num = carlitz_approx(field, d, chi_power(beta), limit)
    den = e_shift(field, d, limit)
    n = den.degree
    rev_den = [den.coeff(n - i) for i in range(n + 1)]
    rev_num = [num.coeff(n - 1 - i) for i in range(n)]
    out: list[TPoly] = []
    for k in range(count):
        s = rev_num[k] if k < n else TPoly.zero(field)
        for i in range(1, min(k, n) + 1):
            s = s - rev_den[i] * out[k - i]
        out.append(s)
    return out


def pellarin_degree_sum(field: FieldSpec, d: int, limit: float = DEFAULT_SIZE_LIMIT) -> RationalForm:
    """The degree-d part of L(chi_t, 1): sum of chi_t(a)/a over A_+(d), reduced."""
    monics = enumerate_monic(field, d, limit)
    num, common = _weighted_cofactor_sum([(chi_eval(a), a) for a in monics])
    return rational_reduce(num, common)


def wagner_truncated_eval(field: FieldSpec, d: int, a: APoly,
                          limit: float = DEFAULT_SIZE_LIMIT) -> RationalForm:
    """sum over j < d of (b_j / D_j) e_j(a), for a of degree below d."""
    if a.degree >= d:
        raise DegreeTooHigh(f"argument degree {a.degree} is not below {d}")
    total = rational_reduce(TPoly.zero(field), APoly.one(field))
    for j in range(d):
        ej = e_poly(field, j, limit)(a.embed(TPoly))
        total = total + rational_reduce(wagner_coeff(field, j, limit).b * ej, factorials(field, j).D)
    return total


def digit_product(field: FieldSpec, d: int, beta: int, limit: float = DEFAULT_SIZE_LIMIT) -> ZPoly:
    """prod_i M_d(chi_t^(q^i))^(beta_i) over the base-q digits beta_i of beta."""
    result = ZPoly.one(field)
    for i, digit in enumerate(DigitVector.of(beta, field.q).digits):
        if digit:
            factor = carlitz_approx(field, d, LinearMapSpec.chi_frobenius(field, i, d), limit)
            result = result * factor**digit
    return result


def digit_principle_holds(field: FieldSpec, d: int, beta: int, limit: float = DEFAULT_SIZE_LIMIT) -> bool:
    """M_d(chi^beta) * M_d(1)^(l(beta) - 1) == prod_i M_d(chi^(q^i))^(beta_i), cleared of the inverse."""
    lhs = carlitz_approx(field, d, chi_power(beta), limit)
    rhs = digit_product(field, d, beta, limit)
    length = q_length(beta, field.q) if beta else 0
    one = m_one(field, d)
    if length == 0:
        return lhs == one * rhs
    return lhs * one ** (length - 1) == rhs


def divide_by_t_minus_theta(b: TPoly) -> TPoly:
    """g with b = (t - theta) * g, by synthetic division in t."""
    field = b.field
    theta = APoly.theta(field)
    coeffs = b.coeffs
    if not coeffs:
        return TPoly.zero(field)
    out: list[APoly] = [APoly.zero(field)] * (len(coeffs) - 1)
    carry = APoly.zero(field)
    for j in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[j] + theta * carry
        out[j - 1] = carry
    if not (coeffs[0] + theta * carry).is_zero():
        raise NonExactDivision("t - theta does not divide the polynomial")
    return TPoly.from_coeffs(field, out)
