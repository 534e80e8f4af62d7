"""Special polynomials z(chi_t^beta, x, -k) and the values L(chi_t^beta, -k).

A special polynomial is stored as a :class:`UPoly` in ``u = 1/x``. Two routes
compute it: summing twisted power sums degree by degree up to a proven bound
(``z_brute``), and the recursion obtained by writing each monic ``a`` of
degree ``d`` as ``theta*h + b`` with ``h`` monic of degree ``d - 1``
(``z_recursive``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .algebra import FieldSpec, TPoly, UPoly, binom_mod_p
from .carlitz import DEFAULT_SIZE_LIMIT
from .errors import CutoffNotStabilized, UnexpectedHigherOrder
from .powersums import boeckle_degree, phi_degree, twisted_power_sum

GUARD = 2
MAX_RECURSION_WEIGHT = 64


@dataclass(frozen=True)
class SpecialPoly:
    beta: int
    k: int
    z: UPoly
    method: Literal["brute", "recursive"]

    @property
    def degree(self) -> int:
        return self.z.degree

    def to_json(self) -> dict:
        return {
            "beta": self.beta,
            "k": self.k,
            "degree": self.degree,
            "coeffs": [c.to_json() for c in self.z.coeffs],
            "method": self.method,
        }


def degree_bound(field: FieldSpec, beta: int, k: int) -> int:
    """Largest d for which S_d(chi_t^beta, k) can be nonzero."""
    if beta >= 1 and k >= 1:
        return phi_degree(field, beta, k)
    if k >= 1:
        return boeckle_degree(field, k)
    if beta >= 1:
        # S_d(chi_t^beta, 0) is S_d(beta) with theta renamed t
        return boeckle_degree(field, beta)
    return 0


def z_brute(field: FieldSpec, beta: int, k: int, limit: float = DEFAULT_SIZE_LIMIT) -> SpecialPoly:
    bound = degree_bound(field, beta, k)
    coeffs = [twisted_power_sum(field, d, beta, k, limit) for d in range(bound + GUARD + 1)]
    if any(not c.is_zero() for c in coeffs[bound + 1:]):
        raise CutoffNotStabilized(
            f"S_d(chi_t^{beta}, {k}) nonzero beyond the bound d = {bound}"
        )
    return SpecialPoly(beta, k, UPoly.from_coeffs(field, coeffs[: bound + 1]), "brute")


def z_recursive(field: FieldSpec, beta: int, k: int, memo: dict | None = None) -> SpecialPoly:
    """z(chi_t^beta, x, -k) from the recursion over pairs (alpha, l).

    ``memo`` maps (alpha, l) to UPoly and may be shared between calls over the
    same field; entries are only ever added.
    """
    if beta < 0 or k < 0:
        raise ValueError("beta and k must be non-negative")
    if beta + k > MAX_RECURSION_WEIGHT:
        raise ValueError(f"beta + k exceeds {MAX_RECURSION_WEIGHT}")
    if memo is None:
        memo = {}
    return SpecialPoly(beta, k, _z_rec(field, beta, k, memo), "recursive")


def _z_rec(field: FieldSpec, beta: int, k: int, memo: dict) -> UPoly:
    key = (beta, k)
    if key in memo:
        return memo[key]
    p, m = field.p, field.q - 1
    one = UPoly.one(field)
    if beta == 0 and k == 0:
        memo[key] = one
        return one
    acc = UPoly.zero(field)
    for alpha in range(beta + 1):
        ca = binom_mod_p(beta, alpha, p)
        if not ca:
            continue
        for l in range(k + 1):
            if (alpha, l) == (beta, k) or (beta + k - alpha - l) % m:
                continue
            c = ca * binom_mod_p(k, l, p) % p
            if not c:
                continue
            acc = acc + _z_rec(field, alpha, l, memo).shift(0, alpha, l).scale(c)
    result = one - acc.shift(1, 0, 0)
    memo[key] = result
    return result


def l_value(field: FieldSpec, beta: int, k: int, memo: dict | None = None) -> TPoly:
    """L(chi_t^beta, -k), the special polynomial evaluated at x = 1."""
    return z_recursive(field, beta, k, memo).z.value_at_one()


def trivial_zero_order(field: FieldSpec, beta: int, k: int, memo: dict | None = None) -> int:
    """Order of vanishing of z(chi_t^beta, x, -k) at x = 1, which is 0 or 1."""
    if k < 1:
        raise ValueError("trivial zeros are classified for k >= 1 only")
    z = z_recursive(field, beta, k, memo).z
    if not z.value_at_one().is_zero():
        return 0
    if not z.x_derivative_at_one().is_zero():
        return 1
    raise UnexpectedHigherOrder(f"beta={beta}, k={k}: value and x-derivative both vanish at x = 1")
