"""Dense exact polynomials over F_q in the nested variables theta, t, u and z.

Every polynomial stores one read-only ``int64`` array whose leading axes are
its variables (outermost first) and whose last axis holds the ``e``
coordinates of each F_q coefficient. The array is trimmed to the tight bounding
box of its nonzero coefficients, so the zero polynomial has shape
``(0, ..., 0, e)`` and structural equality is semantic equality.

==========  ======================  ==================
class       variables               coefficient type
==========  ======================  ==================
APoly       (theta,)                FqElem
TPoly       (t, theta)              APoly
UPoly       (u, t, theta)           TPoly
ZPoly       (z, t, theta)           TPoly
==========  ======================  ==================

Smaller classes embed into larger ones whenever their variables form a suffix
of the larger tuple, so ``APoly * ZPoly`` is a ZPoly.
"""

from __future__ import annotations

from typing import Any, ClassVar, Sequence

import numpy as np

from ..errors import FieldMismatch, NonExactDivision, ZeroDenominator
from .field import FieldSpec, FqElem

# positions in the smaller factor at or below which multiplication shifts-and-adds
_SHIFT_ADD_MAX_TERMS = 24


def _trim(arr: np.ndarray) -> np.ndarray:
    nvars = arr.ndim - 1
    nz = arr != 0
    if not nz.any():
        return np.zeros((0,) * nvars + (arr.shape[-1],), dtype=np.int64)
    slices = []
    for axis in range(nvars):
        other = tuple(i for i in range(arr.ndim) if i != axis)
        used = np.nonzero(nz.any(axis=other))[0]
        slices.append(slice(0, int(used[-1]) + 1))
    return arr[tuple(slices)]


def _pad_to(arr: np.ndarray, shape: Sequence[int]) -> np.ndarray:
    if tuple(arr.shape) == tuple(shape):
        return arr
    out = np.zeros(shape, dtype=np.int64)
    out[tuple(slice(0, s) for s in arr.shape)] = arr
    return out


def _kronecker_convolve(a: np.ndarray, b: np.ndarray, bound: int) -> np.ndarray:
    """Full integer convolution over every axis by packing into one big int."""
    out_shape = tuple(x + y - 1 for x, y in zip(a.shape, b.shape))
    width = 1
    while bound >= 256**width:
        width *= 2
    dtype = np.dtype(f"<u{width}")
    pa = np.zeros(out_shape, dtype=dtype)
    pa[tuple(slice(0, s) for s in a.shape)] = a
    pb = np.zeros(out_shape, dtype=dtype)
    pb[tuple(slice(0, s) for s in b.shape)] = b
    na = int.from_bytes(pa.tobytes(), "little")
    nb = int.from_bytes(pb.tobytes(), "little")
    size = int(np.prod(out_shape))
    raw = (na * nb).to_bytes(size * width, "little")
    return np.frombuffer(raw, dtype=dtype).astype(np.int64).reshape(out_shape)


def mul_arrays(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two canonical-layout arrays with the same number of axes."""
    p, e = field.p, field.e
    if a.size == 0 or b.size == 0:
        shape = tuple(0 for _ in range(a.ndim - 1)) + (e,)
        return np.zeros(shape, dtype=np.int64)
    na = int(np.count_nonzero(a.any(axis=-1)))
    nb = int(np.count_nonzero(b.any(axis=-1)))
    if nb > na:
        a, b, na, nb = b, a, nb, na
    out_shape = tuple(x + y - 1 for x, y in zip(a.shape[:-1], b.shape[:-1])) + (e,)
    if nb <= _SHIFT_ADD_MAX_TERMS:
        out = np.zeros(out_shape, dtype=np.int64)
        positions = np.argwhere(b.any(axis=-1))
        for pos in positions:
            coeff = b[tuple(pos)]
            target = tuple(slice(int(s), int(s) + n) for s, n in zip(pos, a.shape[:-1]))
            if e == 1:
                out[target] += a * int(coeff[0])
            else:
                out[target] += a @ field.mul_matrix(coeff)
        return out % p
    conv = _kronecker_convolve(a, b, (p - 1) ** 2 * min(na, nb) * e + 1)
    if e > 1:
        conv = np.tensordot(conv, field.reduction, axes=([-1], [0]))
    return conv % p


class Poly:
    """Shared implementation; use the concrete subclasses."""

    VARS: ClassVar[tuple[str, ...]] = ()
    __slots__ = ("field", "_a", "_hash")

    def __init__(self, field: FieldSpec, array: Any, *, _canonical: bool = False):
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != len(self.VARS) + 1 or arr.shape[-1] != field.e:
            raise ValueError(
                f"{type(self).__name__} needs an array with {len(self.VARS)} polynomial axes "
                f"and a trailing axis of length {field.e}, got shape {arr.shape}"
            )
        if not _canonical:
            arr = _trim(arr % field.p)
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        self.field = field
        self._a = arr
        self._hash = None

    # -- construction

    @classmethod
    def zero(cls, field: FieldSpec):
        return cls(field, np.zeros((0,) * len(cls.VARS) + (field.e,), dtype=np.int64), _canonical=True)

    @classmethod
    def constant(cls, field: FieldSpec, c=1):
        c = field.element(c)
        arr = np.zeros((1,) * len(cls.VARS) + (field.e,), dtype=np.int64)
        arr[(0,) * len(cls.VARS)] = c.coords
        return cls(field, arr)

    @classmethod
    def one(cls, field: FieldSpec):
        return cls.constant(field, 1)

    @classmethod
    def monomial(cls, field: FieldSpec, exponents: Sequence[int], c=1):
        """``c`` times the monomial with the given exponent per variable."""
        if len(exponents) != len(cls.VARS):
            raise ValueError(f"{cls.__name__} has variables {cls.VARS}")
        c = field.element(c)
        arr = np.zeros(tuple(n + 1 for n in exponents) + (field.e,), dtype=np.int64)
        arr[tuple(exponents)] = c.coords
        return cls(field, arr)

    @classmethod
    def gen(cls, field: FieldSpec):
        """The main (outermost) variable."""
        return cls.monomial(field, (1,) + (0,) * (len(cls.VARS) - 1))

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs: Sequence[Any]):
        """Build from coefficients of the main variable, lowest degree first."""
        sub = cls._SUB
        if sub is FqElem:
            items = [field.element(c) for c in coeffs]
        else:
            items = [sub._coerce_coeff(field, c) for c in coeffs]
        if not items:
            return cls.zero(field)
        if sub is FqElem:
            arr = np.array([c.coords for c in items], dtype=np.int64).reshape(len(items), field.e)
            return cls(field, arr)
        inner = tuple(max(c._a.shape[i] for c in items) for i in range(len(sub.VARS)))
        arr = np.zeros((len(items),) + inner + (field.e,), dtype=np.int64)
        for i, c in enumerate(items):
            arr[(i,) + tuple(slice(0, s) for s in c._a.shape[:-1])] = c._a
        return cls(field, arr)

    @classmethod
    def _coerce_coeff(cls, field: FieldSpec, c):
        if isinstance(c, Poly):
            if c.field != field:
                raise FieldMismatch("coefficient over a different field")
            return c.embed(cls)
        return cls.constant(field, c)

    # -- structure

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def degree(self) -> int:
        """Degree in the main variable; -1 for the zero polynomial."""
        return self._a.shape[0] - 1

    def is_zero(self) -> bool:
        return self._a.shape[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def coeff(self, i: int):
        sub = self._SUB
        if i < 0 or i >= self._a.shape[0]:
            return self.field.element(0) if sub is FqElem else sub.zero(self.field)
        if sub is FqElem:
            return FqElem(self.field, tuple(int(x) for x in self._a[i]))
        return sub(self.field, self._a[i])

    @property
    def coeffs(self) -> list:
        return [self.coeff(i) for i in range(self._a.shape[0])]

    @property
    def leading(self):
        return self.coeff(self.degree)

    def nonzero_exponents(self) -> list[int]:
        if self.is_zero():
            return []
        mask = self._a.reshape(self._a.shape[0], -1).any(axis=1)
        return [int(i) for i in np.nonzero(mask)[0]]

    def embed(self, cls):
        """View as an element of the larger ring ``cls``."""
        if cls is type(self):
            return self
        k = len(cls.VARS) - len(self.VARS)
        if k < 0 or cls.VARS[k:] != self.VARS:
            raise TypeError(f"cannot embed {type(self).__name__} into {cls.__name__}")
        if self.is_zero():
            return cls.zero(self.field)
        return cls(self.field, self._a.reshape((1,) * k + self._a.shape), _canonical=True)

    # -- arithmetic

    def _coerce_pair(self, other):
        if isinstance(other, (int, np.integer, FqElem)):
            return self, type(self).constant(self.field, other)
        if not isinstance(other, Poly):
            return None
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if type(other) is type(self):
            return self, other
        if len(other.VARS) < len(self.VARS) and self.VARS[-len(other.VARS):] == other.VARS:
            return self, other.embed(type(self))
        if len(self.VARS) < len(other.VARS) and other.VARS[-len(self.VARS):] == self.VARS:
            return self.embed(type(other)), other
        raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def _new(self, arr: np.ndarray):
        return type(self)(self.field, arr)

    def __add__(self, other):
        pair = self._coerce_pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        shape = tuple(max(s, t) for s, t in zip(x._a.shape, y._a.shape))
        return x._new(_pad_to(x._a, shape) + _pad_to(y._a, shape))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self._a)

    def __sub__(self, other):
        pair = self._coerce_pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x + (-y)

    def __rsub__(self, other):
        pair = self._coerce_pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y + (-x)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FqElem)):
            return self.scale(other)
        pair = self._coerce_pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x._new(mul_arrays(self.field, x._a, y._a))

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field.element(c)
        if self.field.e == 1:
            return self._new(self._a * c.coords[0])
        return self._new(self._a @ self.field.mul_matrix(np.array(c.coords)))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = type(self).one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, *offsets: int):
        """Multiply by the monomial with the given exponent per variable."""
        if len(offsets) != len(self.VARS):
            raise ValueError(f"{type(self).__name__} has variables {self.VARS}")
        if self.is_zero():
            return self
        pad = [(int(o), 0) for o in offsets] + [(0, 0)]
        return type(self)(self.field, np.pad(self._a, pad), _canonical=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer, FqElem)):
            other = type(self).constant(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            return False
        if type(other) is not type(self):
            try:
                x, y = self._coerce_pair(other)
            except TypeError:
                return False
            return x == y
        return self._a.shape == other._a.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.field, self._a.shape, self._a.tobytes()))
        return self._hash

    # -- calculus and evaluation in the main variable

    def derivative(self):
        """Formal derivative in the main variable."""
        if self.degree < 1:
            return type(self).zero(self.field)
        n = self._a.shape[0]
        factors = (np.arange(1, n) % self.field.p).reshape((n - 1,) + (1,) * (self._a.ndim - 1))
        return self._new(self._a[1:] * factors)

    def __call__(self, x):
        """Evaluate the main variable at ``x`` (a ring element of the coefficient ring)."""
        coeffs = self.coeffs
        sub = self._SUB
        if sub is FqElem:
            x = x if isinstance(x, Poly) else self.field.element(x)
        zero = self.field.element(0) if sub is FqElem else sub.zero(self.field)
        support = self.nonzero_exponents()
        if len(support) * 4 < len(coeffs):
            total = zero
            for j in support:
                total = coeffs[j] * (x**j) + total
            return total
        acc = zero
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    # -- serialization

    def to_json(self) -> list:
        return _to_nested(self._a)

    @classmethod
    def from_json(cls, field: FieldSpec, data: list):
        depth = len(cls.VARS)
        arr = _from_nested(data, depth, field.e)
        return cls(field, arr)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({_format(self)})"


def _to_nested(arr: np.ndarray) -> list:
    arr = _trim(arr)
    if arr.ndim == 2:
        return [[int(x) for x in row] for row in arr]
    return [_to_nested(arr[i]) for i in range(arr.shape[0])]


def _from_nested(data, depth: int, e: int) -> np.ndarray:
    if depth == 1:
        if not data:
            return np.zeros((0, e), dtype=np.int64)
        return np.array(data, dtype=np.int64).reshape(len(data), e)
    subs = [_from_nested(d, depth - 1, e) for d in data]
    if not subs:
        return np.zeros((0,) * depth + (e,), dtype=np.int64)
    inner = tuple(max(s.shape[i] for s in subs) for i in range(depth - 1))
    out = np.zeros((len(subs),) + inner + (e,), dtype=np.int64)
    for i, s in enumerate(subs):
        out[(i,) + tuple(slice(0, n) for n in s.shape[:-1])] = s
    return out


def _format(poly: Poly) -> str:
    names = {"theta": "θ", "t": "t", "u": "u", "z": "z"}
    arr = poly.array
    if poly.is_zero():
        return "0"
    terms = []
    for idx in np.argwhere(arr.any(axis=-1))[::-1]:
        c = FqElem(poly.field, tuple(int(x) for x in arr[tuple(idx)]))
        mono = "*".join(
            names[v] if n == 1 else f"{names[v]}^{n}" for v, n in zip(poly.VARS, idx) if n
        )
        cs = repr(c)
        if poly.field.e > 1 and "+" in cs:
            cs = f"({cs})"
        if mono:
            terms.append(mono if cs == "1" else f"{cs}*{mono}")
        else:
            terms.append(cs)
    return " + ".join(terms)


class APoly(Poly):
    """Element of A = F_q[theta]."""

    VARS = ("theta",)
    _SUB = FqElem

    @classmethod
    def theta(cls, field: FieldSpec) -> "APoly":
        return cls.gen(field)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == 1

    def monic(self) -> "APoly":
        if self.is_zero():
            return self
        return self.scale(self.leading.inverse())

    def __divmod__(self, other: "APoly"):
        num = self._a
        q, r = divmod_theta(self.field, num, _as_apoly(self.field, other)._a)
        return APoly(self.field, q), APoly(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def frobenius(self, m: int = 1) -> "APoly":
        """a(theta)^(q^m) = a(theta^(q^m)), coefficients being fixed by F_q."""
        return self ** (self.field.q**m)


class TPoly(Poly):
    """Element of A[t]; index in the main axis is the t-degree."""

    VARS = ("t", "theta")
    _SUB = APoly

    @classmethod
    def t(cls, field: FieldSpec) -> "TPoly":
        return cls.gen(field)

    def specialize_t(self, value: APoly) -> APoly:
        """Substitute t = value (an element of A)."""
        return self(value)

    def content(self) -> APoly:
        """Monic gcd over A of all t-coefficients (zero for the zero polynomial)."""
        g = APoly.zero(self.field)
        for c in self.coeffs:
            g = gcd(g, c)
            if g.degree == 0:
                break
        return g

    @property
    def theta_degree(self) -> int:
        return self._a.shape[1] - 1 if not self.is_zero() else -1

    def swap_variables(self) -> "TPoly":
        """Exchange the roles of t and theta."""
        return TPoly(self.field, np.swapaxes(self._a, 0, 1))


class UPoly(Poly):
    """Polynomial in u = 1/x with TPoly coefficients."""

    VARS = ("u", "t", "theta")
    _SUB = TPoly

    def value_at_one(self) -> TPoly:
        """Evaluation at x = 1, i.e. the sum of all coefficients."""
        if self.is_zero():
            return TPoly.zero(self.field)
        return TPoly(self.field, self._a.sum(axis=0))

    def x_derivative_at_one(self) -> TPoly:
        """d/dx of sum c_e x^(-e), evaluated at x = 1: sum (-e) c_e."""
        if self.is_zero():
            return TPoly.zero(self.field)
        n = self._a.shape[0]
        factors = (-np.arange(n)) % self.field.p
        return TPoly(self.field, np.tensordot(factors, self._a, axes=(0, 0)))


class ZPoly(Poly):
    """Polynomial in the interpolation variable z with TPoly coefficients."""

    VARS = ("z", "t", "theta")
    _SUB = TPoly

    @classmethod
    def z(cls, field: FieldSpec) -> "ZPoly":
        return cls.gen(field)

    def is_fq_linear(self) -> bool:
        q = self.field.q
        return all(_is_power_of(j, q) for j in self.nonzero_exponents())

    def is_affine(self) -> bool:
        q = self.field.q
        return all(j == 0 or _is_power_of(j, q) for j in self.nonzero_exponents())

    def constant_term(self) -> TPoly:
        return self.coeff(0)

    def compose_shift(self, c) -> "ZPoly":
        """The polynomial z -> self(z + c)."""
        zc = ZPoly.z(self.field) + c
        acc = ZPoly.zero(self.field)
        for coeff in reversed(self.coeffs):
            acc = acc * zc + coeff
        return acc


def _is_power_of(j: int, q: int) -> bool:
    if j < 1:
        return False
    while j % q == 0:
        j //= q
    return j == 1


def _as_apoly(field: FieldSpec, x) -> APoly:
    if isinstance(x, APoly):
        return x
    return APoly.constant(field, x)


def divmod_theta(field: FieldSpec, num: np.ndarray, den: np.ndarray):
    """Long division along the theta axis (axis -2) of ``num`` by the APoly array ``den``.

    Leading axes of ``num`` are batch axes, so a TPoly divides coefficientwise.
    """
    if den.shape[0] == 0:
        raise ZeroDenominator("division by the zero polynomial")
    p, e = field.p, field.e
    n = den.shape[0] - 1
    r = np.array(num, dtype=np.int64, copy=True)
    length = r.shape[-2]
    qshape = r.shape[:-2] + (max(length - n, 0), e)
    quot = np.zeros(qshape, dtype=np.int64)
    if length <= n:
        return quot, r
    inv_lead = field.coords_of(field._inv_table[int(field.index_of(den[-1]))])
    minv = field.mul_matrix(inv_lead)
    mden = np.stack([field.mul_matrix(c) for c in den])
    for k in range(length - 1, n - 1, -1):
        lead = r[..., k, :]
        if not lead.any():
            continue
        c = (lead @ minv) % p
        quot[..., k - n, :] = c
        r[..., k - n:k + 1, :] = (r[..., k - n:k + 1, :] - np.einsum("...u,iuc->...ic", c, mden)) % p
    return quot, r[..., :n, :]


def gcd(a: APoly, b: APoly) -> APoly:
    """Monic gcd in A; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def lcm(a: APoly, b: APoly) -> APoly:
    if a.is_zero() or b.is_zero():
        return APoly.zero(a.field)
    return (a * b // gcd(a, b)).monic()


def chi_eval(a: APoly) -> TPoly:
    """The F_q-algebra map A -> F_q[t] sending theta to t."""
    if a.is_zero():
        return TPoly.zero(a.field)
    return TPoly(a.field, a.array.reshape(a.array.shape[0], 1, a.field.e), _canonical=True)


def exact_div(num: TPoly, den: APoly) -> TPoly:
    """Quotient of ``num`` by ``den`` in A[t]; any remainder is an error."""
    if isinstance(num, APoly):
        num = num.embed(TPoly)
    if den.is_zero():
        raise ZeroDenominator("division by the zero polynomial")
    if num.is_zero():
        return num
    quot, rem = divmod_theta(num.field, num.array, den.array)
    if rem.any():
        raise NonExactDivision(f"{den!r} does not divide {num!r}")
    return TPoly(num.field, quot)
