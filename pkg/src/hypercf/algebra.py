"""Exact arithmetic over F_p and dense univariate polynomials in F_p[T].

Residues are plain machine integers in [0, p).  Polynomial coefficients
live in numpy int64 arrays (ascending powers, no trailing zeros) so the
convolution kernels run at C speed while every result stays exact.
"""
from __future__ import annotations

from typing import Iterable, Union

import numpy as np

__all__ = [
    "NEG_INFINITY",
    "KARATSUBA_THRESHOLD",
    "is_prime",
    "PrimeField",
    "FieldElement",
    "Poly",
]

#: degree sentinel for the zero polynomial; compares below every integer.
NEG_INFINITY = float("-inf")

#: operand length at or below which a product is a single convolution;
#: longer balanced products go through Karatsuba splitting.
KARATSUBA_THRESHOLD = 512

# witnesses making Miller-Rabin deterministic for n < 3.3 * 10**24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_EMPTY = np.zeros(0, dtype=np.int64)
_EMPTY.setflags(write=False)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The prime field F_p for an odd prime modulus p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p

    def __call__(self, value: Union[int, "FieldElement"]) -> "FieldElement":
        return FieldElement(self, value)

    def element(self, value: Union[int, "FieldElement"]) -> "FieldElement":
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def T(self) -> "Poly":
        return Poly(self, (0, 1))

    def poly(self, coeffs: Iterable[Union[int, "FieldElement"]]) -> "Poly":
        return Poly(self, coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class FieldElement:
    """A residue in F_p; arithmetic is closed and exact."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: Union[int, "FieldElement"]):
        if isinstance(value, FieldElement):
            if value.field != field:
                raise ValueError("field mismatch")
            value = value.value
        self.field = field
        self.value = int(value) % field.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(self.field, pow(self.value, k, self.field.p))

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via Fermat: a**(p-2) mod p."""
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return FieldElement(self.field, pow(self.value, self.field.p - 2, self.field.p))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * FieldElement(self.field, v).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, v) * self.inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __repr__(self) -> str:
        return f"F{self.field.p}({self.value})"


# ---------------------------------------------------------------------------
# coefficient-array kernels
# ---------------------------------------------------------------------------

def _trim(arr: np.ndarray) -> np.ndarray:
    nz = np.nonzero(arr)[0]
    if nz.size == 0:
        return _EMPTY
    return arr[: nz[-1] + 1]


def _add_arrays(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.size < b.size:
        a, b = b, a
    out = a.copy()
    out[: b.size] = (out[: b.size] + b) % p
    return _trim(out)


def _sub_arrays(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = max(a.size, b.size)
    out = np.zeros(n, dtype=np.int64)
    out[: a.size] = a
    out[: b.size] = (out[: b.size] - b) % p
    return _trim(out)


def _convolve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 accumulation is exact while (p-1)^2 * min(len) stays below 2^62
    if (p - 1) * (p - 1) * min(a.size, b.size) < (1 << 62):
        return np.convolve(a, b) % p
    full = np.convolve(a.astype(object), b.astype(object)) % p
    return full.astype(np.int64)


def _mul_arrays(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return _EMPTY
    if a.size == 1:
        return _trim(b * int(a[0]) % p)
    if b.size == 1:
        return _trim(a * int(b[0]) % p)
    if min(a.size, b.size) <= KARATSUBA_THRESHOLD:
        return _trim(_convolve(a, b, p))
    return _trim(_karatsuba(a, b, p))


def _karatsuba(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    m = (max(a.size, b.size) + 1) >> 1
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _mul_arrays(a0, b0, p)
    z2 = _mul_arrays(a1, b1, p)
    z1 = _mul_arrays(_add_arrays(a0, a1, p), _add_arrays(b0, b1, p), p)
    z1 = _sub_arrays(_sub_arrays(z1, z0, p), z2, p)
    out = np.zeros(a.size + b.size - 1, dtype=np.int64)
    out[: z0.size] += z0
    out[m : m + z1.size] += z1
    out[2 * m : 2 * m + z2.size] += z2
    return out % p


def _divmod_arrays(a: np.ndarray, b: np.ndarray, p: int):
    if b.size == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if a.size < b.size:
        return _EMPTY, a
    inv = pow(int(b[-1]), p - 2, p)
    r = a.copy()
    qlen = a.size - b.size + 1
    q = np.zeros(qlen, dtype=np.int64)
    for i in range(qlen - 1, -1, -1):
        c = int(r[i + b.size - 1]) * inv % p
        if c:
            q[i] = c
            r[i : i + b.size] = (r[i : i + b.size] - c * b) % p
    return _trim(q), _trim(r[: b.size - 1])


class Poly:
    """Dense polynomial in F_p[T], coefficients stored in ascending order.

    Canonical form: no trailing zero coefficient; the zero polynomial is
    the empty array and has degree NEG_INFINITY.  Instances are immutable.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable = ()):
        if isinstance(coeffs, np.ndarray):
            arr = coeffs.astype(np.int64) % field.p
        else:
            arr = np.array(
                [c.value if isinstance(c, FieldElement) else int(c) for c in coeffs],
                dtype=np.int64,
            )
            arr %= field.p
        arr = _trim(arr)
        if arr.base is not None:
            arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self.coeffs = arr

    @classmethod
    def _raw(cls, field: PrimeField, arr: np.ndarray) -> "Poly":
        # arr must already be trimmed and reduced mod p
        self = object.__new__(cls)
        if arr.base is not None:
            arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self.coeffs = arr
        return self

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        return self.coeffs.size - 1 if self.coeffs.size else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def leading_coefficient(self) -> FieldElement:
        if self.is_zero:
            return self.field.zero
        return FieldElement(self.field, int(self.coeffs[-1]))

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < self.coeffs.size:
            return FieldElement(self.field, int(self.coeffs[i]))
        return self.field.zero

    def __bool__(self) -> bool:
        return self.coeffs.size != 0

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return Poly(self.field, (other.value,))
        if isinstance(other, (int, np.integer)):
            return Poly(self.field, (int(other),))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._raw(self.field, _add_arrays(self.coeffs, o.coeffs, self.field.p))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._raw(self.field, _sub_arrays(self.coeffs, o.coeffs, self.field.p))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._raw(self.field, _sub_arrays(o.coeffs, self.coeffs, self.field.p))

    def __neg__(self):
        return Poly._raw(self.field, _trim((-self.coeffs) % self.field.p))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            v = other.value if isinstance(other, FieldElement) else int(other) % self.field.p
            return Poly._raw(self.field, _trim(self.coeffs * (v % self.field.p) % self.field.p))
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._raw(self.field, _mul_arrays(self.coeffs, o.coeffs, self.field.p))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        q, r = _divmod_arrays(self.coeffs, o.coeffs, self.field.p)
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, (int, np.integer)) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        k = int(k)
        if k == 0:
            return Poly(self.field, (1,))
        if self.is_zero:
            return self
        if k == self.field.p:
            return self.frobenius()
        p = self.field.p
        result = None
        base = self.coeffs
        while k:
            if k & 1:
                result = base if result is None else _mul_arrays(result, base, p)
            k >>= 1
            if k:
                base = _mul_arrays(base, base, p)
        return Poly._raw(self.field, result)

    def frobenius(self) -> "Poly":
        """self**p via the exponent map i -> p*i (coefficients are fixed)."""
        if self.is_zero:
            return self
        p = self.field.p
        out = np.zeros(p * (self.coeffs.size - 1) + 1, dtype=np.int64)
        out[::p] = self.coeffs
        return Poly._raw(self.field, out)

    def shift(self, k: int) -> "Poly":
        """Multiply by T**k."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero or k == 0:
            return self
        out = np.zeros(self.coeffs.size + k, dtype=np.int64)
        out[k:] = self.coeffs
        return Poly._raw(self.field, out)

    def __call__(self, value: Union[int, FieldElement]) -> FieldElement:
        v = value.value if isinstance(value, FieldElement) else int(value) % self.field.p
        acc = 0
        p = self.field.p
        for c in self.coeffs[::-1]:
            acc = (acc * v + int(c)) % p
        return FieldElement(self.field, acc)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs.tobytes()))

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        """Descending powers, `c*t^k` terms joined by ` + `; a unit
        coefficient is elided on monomials but printed for the constant."""
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self.coeffs.size - 1, -1, -1):
            c = int(self.coeffs[e])
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self} mod {self.field.p})"
