"""Reduced fractions with numerator in A[t] and monic denominator in A."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ZeroDenominator
from .poly import APoly, TPoly, exact_div, gcd


@dataclass(frozen=True, eq=True)
class RationalForm:
    """``num / den`` in lowest terms.

    ``den`` is monic and coprime to the A-content of ``num``; the zero
    fraction is ``0 / 1``. Build instances with :func:`rational_reduce`.
    """

    num: TPoly
    den: APoly

    @property
    def field(self):
        return self.num.field

    def is_integral(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        other = as_rational(other, self.field)
        return rational_reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalForm(-self.num, self.den)

    def __sub__(self, other):
        return self + (-as_rational(other, self.field))

    def __rsub__(self, other):
        return as_rational(other, self.field) - self

    def __mul__(self, other):
        other = as_rational(other, self.field)
        return rational_reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, field, data: dict) -> "RationalForm":
        return rational_reduce(TPoly.from_json(field, data["num"]), APoly.from_json(field, data["den"]))

    def __repr__(self) -> str:
        return f"({self.num!r}) / ({self.den!r})"


def as_rational(x, field=None) -> RationalForm:
    if isinstance(x, RationalForm):
        return x
    if isinstance(x, APoly):
        x = x.embed(TPoly)
    if isinstance(x, TPoly):
        return RationalForm(x, APoly.one(x.field))
    if field is None:
        raise TypeError(f"cannot interpret {x!r} as a fraction without a field")
    return RationalForm(TPoly.constant(field, x), APoly.one(field))


def rational_reduce(num, den: APoly) -> RationalForm:
    """Cancel the common A-factor of ``num`` and ``den`` and make ``den`` monic."""
    if isinstance(num, APoly):
        num = num.embed(TPoly)
    if den.is_zero():
        raise ZeroDenominator("fraction with zero denominator")
    field = den.field
    if num.is_zero():
        return RationalForm(TPoly.zero(field), APoly.one(field))
    g = gcd(den, num.content())
    if g.degree > 0:
        num = exact_div(num, g)
        den = den // g
    lead_inv = den.leading.inverse()
    return RationalForm(num.scale(lead_inv), den.scale(lead_inv))
