"""Exact arithmetic for F_q, polynomial rings over it, and reduced fractions."""

from .field import FieldSpec, FqElem, binom_mod_p, field_make, is_irreducible_fp, is_prime
from .poly import APoly, Poly, TPoly, UPoly, ZPoly, chi_eval, exact_div, gcd, lcm
from .rational import RationalForm, as_rational, rational_reduce

__all__ = [
    "APoly",
    "FieldSpec",
    "FqElem",
    "Poly",
    "RationalForm",
    "TPoly",
    "UPoly",
    "ZPoly",
    "as_rational",
    "binom_mod_p",
    "chi_eval",
    "exact_div",
    "field_make",
    "gcd",
    "is_irreducible_fp",
    "is_prime",
    "lcm",
    "rational_reduce",
]
