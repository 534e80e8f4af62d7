"""Finite fields F_q, q = p^e, on the power basis of an explicit modulus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from ..errors import DegreeMismatch, FieldMismatch, NotPrime, ReducibleModulus


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- tiny dense polynomials over F_p (lists, low-to-high); used only for moduli

def _trim_list(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    r = [c % p for c in a]
    _trim_list(r)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        c = r[-1] * inv % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        _trim_list(r)
    return r


def is_irreducible_fp(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    n = len(poly) - 1
    if n < 1:
        return False
    for m in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=m):
            if not _fp_polymod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e (low-to-high)."""
    # itertools.product varies the last slot fastest; reverse so c_0 is compared first
    for rev in itertools.product(range(p), repeat=e):
        cand = list(rev) + [1]
        if is_irreducible_fp(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible of degree {e} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The field F_p[w]/(modulus(w)).

    Elements are coordinate vectors of length ``e`` in the basis 1, w, ..., w^(e-1).
    Each element also has an integer index ``sum(coords[i] * p**i)``; that index
    fixes the enumeration order of F_q used throughout the package.
    """

    p: int
    e: int
    modulus: tuple[int, ...] = dc_field(compare=True)

    @property
    def q(self) -> int:
        return self.p**self.e

    # -- structure constants; cached per instance

    @cached_property
    def reduction(self) -> np.ndarray:
        """Coordinates of w^j for j < 2e-1, shape (2e-1, e)."""
        p, e = self.p, self.e
        rows = np.zeros((2 * e - 1, e), dtype=np.int64)
        cur = np.zeros(e, dtype=np.int64)
        cur[0] = 1
        tail = np.array(self.modulus[:e], dtype=np.int64)
        for j in range(2 * e - 1):
            rows[j] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1]))
            cur = (cur - top * tail) % p
        rows.setflags(write=False)
        return rows

    @cached_property
    def structure(self) -> np.ndarray:
        """S[u, v, c]: coordinate c of w^u * w^v."""
        e = self.e
        s = np.zeros((e, e, e), dtype=np.int64)
        for u in range(e):
            for v in range(e):
                s[u, v] = self.reduction[u + v]
        s.setflags(write=False)
        return s

    @cached_property
    def _coords_table(self) -> np.ndarray:
        idx = np.arange(self.q)
        return np.stack([(idx // self.p**i) % self.p for i in range(self.e)], axis=-1)

    @cached_property
    def _mul_table(self) -> np.ndarray:
        c = self._coords_table
        prod = np.einsum("au,bv,uvc->abc", c, c, self.structure) % self.p
        return self.index_of(prod)

    @cached_property
    def _inv_table(self) -> np.ndarray:
        mt = self._mul_table
        inv = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            inv[a] = int(np.nonzero(mt[a] == 1)[0][0])
        return inv

    def index_of(self, coords: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.e)
        return np.asarray(coords, dtype=np.int64) @ weights

    def coords_of(self, index) -> np.ndarray:
        return self._coords_table[np.asarray(index)]

    def mul_matrix(self, coords: np.ndarray) -> np.ndarray:
        """Matrix M with ``y @ M == coords * y`` (before reduction mod p)."""
        return np.einsum("u,uvc->vc", np.asarray(coords, dtype=np.int64), self.structure)

    def mul_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Elementwise product of broadcastable coordinate arrays, reduced mod p."""
        if self.e == 1:
            return (x * y) % self.p
        return np.einsum("...u,...v,uvc->...c", x, y, self.structure) % self.p

    # -- element helpers

    def element(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            coords = [0] * self.e
            coords[0] = int(value) % self.p
            return FqElem(self, tuple(coords))
        coords = tuple(int(c) % self.p for c in value)
        if len(coords) != self.e:
            raise DegreeMismatch(f"expected {self.e} coordinates, got {len(coords)}")
        return FqElem(self, coords)

    def from_index(self, n: int) -> "FqElem":
        return FqElem(self, tuple(int(c) for c in self._coords_table[n]))

    def elements(self) -> list["FqElem"]:
        return [self.from_index(n) for n in range(self.q)]

    def __iter__(self) -> Iterator["FqElem"]:
        return iter(self.elements())

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        return field_make(data["p"], data["e"], data.get("modulus"))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"


def field_make(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build a validated :class:`FieldSpec`.

    Without an explicit modulus the lexicographically smallest monic
    irreducible of degree ``e`` is used (coefficient tuples compared from the
    constant term upward). For ``e == 1`` the default modulus is ``w``.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if e < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {e}")
    if modulus is None:
        mod = (0, 1) if e == 1 else smallest_irreducible(p, e)
    else:
        mod = tuple(int(c) % p for c in modulus)
        mod = tuple(_trim_list(list(mod)))
        if len(mod) - 1 != e:
            raise DegreeMismatch(f"modulus has degree {len(mod) - 1}, expected {e}")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if e > 1 and not is_irreducible_fp(mod, p):
            raise ReducibleModulus(list(mod))
    return FieldSpec(p, e, mod)


@dataclass(frozen=True)
class FqElem:
    field: FieldSpec
    coords: tuple[int, ...]

    @property
    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coords))

    def _other(self, other) -> "FqElem":
        return self.field.element(other)

    def __add__(self, other):
        if not isinstance(other, (FqElem, int, np.integer)):
            return NotImplemented
        o = self._other(other)
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coords))

    def __sub__(self, other):
        if not isinstance(other, (FqElem, int, np.integer)):
            return NotImplemented
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, (FqElem, int, np.integer)):
            return NotImplemented
        o = self._other(other)
        f = self.field
        return f.from_index(int(f._mul_table[self.index, o.index]))

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        if not any(self.coords):
            raise ZeroDivisionError("zero has no inverse in F_q")
        f = self.field
        return f.from_index(int(f._inv_table[self.index]))

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.element(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.field.element(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        if self.field.e == 1:
            return str(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
                terms.append(f"{c}{mono}" if c != 1 or not mono else mono)
        return "+".join(terms) or "0"


def binom_mod_p(n: int, r: int, p: int) -> int:
    """C(n, r) mod p as a product of digit binomials in base p (Lucas)."""
    if r < 0 or r > n:
        return 0
    result = 1
    while n or r:
        ni, ri = n % p, r % p
        if ri > ni:
            return 0
        result = result * _small_binom(ni, ri) % p
        n //= p
        r //= p
    return result


def _small_binom(n: int, r: int) -> int:
    num = den = 1
    for i in range(r):
        num *= n - i
        den *= i + 1
    return num // den
