"""Truncated formal Laurent series in 1/T over F_p with tracked precision.

Every series carries a validity floor V (`valid_order`): all terms with
exponent >= V are exact, and nothing at all is claimed below V.  Arithmetic
propagates the weakest floor justified by its inputs, so "the residual is
zero down to order K" is a checkable statement, never an accident of
truncation.

Precision rules (window of a runs [V_a, top_a], similarly for b):

* add/sub:   V = max(V_a, V_b)
* mul:       V = max(V_a + top_b, V_b + top_a)
* div a/b:   V = max(V_a - top_b, V_b + top_a - 2*top_b)
             (the second term bounds the leakage of b's unknown tail
             through the quotient; for an exactly known divisor it is
             never the binding one)
* frobenius: V = p*(V - 1) + 1

A series that is zero everywhere above its floor is stored with an empty
coefficient window; for the precision rules its nominal top degree is
taken to be V - 1.
"""
from __future__ import annotations

from typing import Dict, Iterable

import numpy as np

from .algebra import FieldElement, Poly, PrimeField, _mul_arrays

__all__ = ["LaurentSeries", "series_from_rational", "InsufficientPrecisionError"]


class InsufficientPrecisionError(ValueError):
    """Raised when a requested order lies below what the data supports."""


class LaurentSeries:
    """A Laurent series in 1/T known exactly down to `valid_order`.

    `coeffs` is dense and descending: coeffs[0] is the coefficient of
    T**top_degree and coeffs[-1] the coefficient of T**valid_order.
    The leading stored coefficient is nonzero unless the series is
    (known-)zero to its floor, in which case the window is empty.
    """

    __slots__ = ("field", "valid_order", "coeffs")

    def __init__(
        self,
        field: PrimeField,
        top_degree: int,
        coeffs: Iterable,
        valid_order: int,
    ):
        if isinstance(coeffs, np.ndarray):
            arr = coeffs.astype(np.int64) % field.p
        else:
            arr = np.array(
                [c.value if isinstance(c, FieldElement) else int(c) for c in coeffs],
                dtype=np.int64,
            )
            arr %= field.p
        window = top_degree - valid_order + 1
        if window <= 0:
            arr = arr[:0]
        elif arr.size > window:
            arr = arr[:window]
        elif arr.size < window:
            # entries not covered by `coeffs` are asserted zero
            arr = np.concatenate([arr, np.zeros(window - arr.size, dtype=np.int64)])
        nz = np.nonzero(arr)[0]
        arr = arr[nz[0] :] if nz.size else arr[:0]
        if arr.base is not None:
            arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self.valid_order = valid_order
        self.coeffs = arr

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: PrimeField, valid_order: int) -> "LaurentSeries":
        return cls(field, valid_order - 1, (), valid_order)

    @classmethod
    def from_poly(cls, poly: Poly, valid_order: int) -> "LaurentSeries":
        return cls(poly.field, int(poly.degree) if not poly.is_zero else valid_order - 1,
                   poly.coeffs[::-1], valid_order)

    @classmethod
    def from_terms(
        cls, field: PrimeField, terms: Dict[int, int], valid_order: int
    ) -> "LaurentSeries":
        if not terms:
            return cls.zero(field, valid_order)
        top = max(terms)
        arr = np.zeros(top - valid_order + 1, dtype=np.int64)
        for e, c in terms.items():
            if e >= valid_order:
                arr[top - e] = c % field.p
        return cls(field, top, arr, valid_order)

    # -- structure -----------------------------------------------------------

    @property
    def top_degree(self):
        """Degree of the leading stored term, or None if zero to the floor."""
        if self.coeffs.size == 0:
            return None
        return self.valid_order + self.coeffs.size - 1

    @property
    def _nominal_top(self) -> int:
        return self.valid_order + self.coeffs.size - 1

    @property
    def is_zero_to_floor(self) -> bool:
        return self.coeffs.size == 0

    def term(self, k: int) -> FieldElement:
        if k < self.valid_order:
            raise ValueError(
                f"exponent {k} is below the validity floor {self.valid_order}"
            )
        top = self._nominal_top
        if k > top:
            return self.field.zero
        return FieldElement(self.field, int(self.coeffs[top - k]))

    def terms(self) -> Dict[int, int]:
        top = self._nominal_top
        return {
            top - i: int(c) for i, c in enumerate(self.coeffs) if c
        }

    def truncated(self, valid_order: int) -> "LaurentSeries":
        """Weaken the floor (valid_order may only move up)."""
        if valid_order < self.valid_order:
            raise ValueError("cannot deepen a validity floor by truncation")
        return LaurentSeries(self.field, self._nominal_top, self.coeffs, valid_order)

    def polynomial_part(self) -> Poly:
        """The terms with exponent >= 0 (the "integer part")."""
        if self.valid_order > 0:
            raise ValueError("floor above 0: constant term unknown")
        top = self._nominal_top
        if top < 0:
            return Poly(self.field, ())
        window = self.coeffs[: top + 1]
        return Poly(self.field, window[::-1])

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "LaurentSeries"):
        if not isinstance(other, LaurentSeries) or other.field != self.field:
            raise ValueError("operands must be series over the same field")

    def _addsub(self, other: "LaurentSeries", sign: int) -> "LaurentSeries":
        self._check(other)
        v = max(self.valid_order, other.valid_order)
        top = max(self._nominal_top, other._nominal_top, v - 1)
        n = top - v + 1
        out = np.zeros(n, dtype=np.int64)
        for s, sgn in ((self, 1), (other, sign)):
            stop = s._nominal_top
            lo = max(s.valid_order, v)
            if stop >= lo:
                out[top - stop : top - lo + 1] += sgn * s.coeffs[: stop - lo + 1]
        out %= self.field.p
        return LaurentSeries(self.field, top, out, v)

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)) and other == 0:
            return self
        return self._addsub(other, 1)

    def __sub__(self, other):
        return self._addsub(other, -1)

    def __neg__(self):
        return LaurentSeries(
            self.field, self._nominal_top, (-self.coeffs) % self.field.p, self.valid_order
        )

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            v = other.value if isinstance(other, FieldElement) else int(other)
            return LaurentSeries(
                self.field,
                self._nominal_top,
                self.coeffs * (v % self.field.p) % self.field.p,
                self.valid_order,
            )
        self._check(other)
        v = max(
            self.valid_order + other._nominal_top,
            other.valid_order + self._nominal_top,
        )
        if self.coeffs.size == 0 or other.coeffs.size == 0:
            return LaurentSeries.zero(self.field, v)
        full = _mul_arrays(self.coeffs[::-1], other.coeffs[::-1], self.field.p)[::-1]
        top = self._nominal_top + other._nominal_top
        return LaurentSeries(self.field, top, full, v)

    __rmul__ = __mul__

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        if isinstance(other, (int, np.integer, FieldElement)):
            inv = FieldElement(self.field, other).inverse()
            return self * inv
        self._check(other)
        if other.is_zero_to_floor:
            raise ZeroDivisionError(
                "division by a series that is zero to its validity floor"
            )
        p = self.field.p
        top_a, v_a = self._nominal_top, self.valid_order
        top_b, v_b = other._nominal_top, other.valid_order
        v_q = max(v_a - top_b, v_b + top_a - 2 * top_b)
        nq = top_a - top_b - v_q + 1
        if self.is_zero_to_floor or nq <= 0:
            return LaurentSeries.zero(self.field, v_q)
        b = other.coeffs
        r = np.zeros(nq + b.size - 1, dtype=np.int64)
        # entries of a below the working window feed only quotient terms
        # below v_q, which are discarded anyway
        keep = min(self.coeffs.size, r.size)
        r[:keep] = self.coeffs[:keep]
        q = np.zeros(nq, dtype=np.int64)
        inv = pow(int(b[0]), p - 2, p)
        for k in range(nq):
            c = int(r[k]) * inv % p
            if c:
                q[k] = c
                r[k : k + b.size] = (r[k : k + b.size] - c * b) % p
        return LaurentSeries(self.field, top_a - top_b, q, v_q)

    def frobenius(self) -> "LaurentSeries":
        """self**p: exponents map to p*k, coefficients are Frobenius-fixed."""
        p = self.field.p
        v = p * (self.valid_order - 1) + 1
        if self.coeffs.size == 0:
            return LaurentSeries.zero(self.field, v)
        top = p * self._nominal_top
        out = np.zeros(top - v + 1, dtype=np.int64)
        out[:: p][: self.coeffs.size] = self.coeffs
        return LaurentSeries(self.field, top, out, v)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentSeries)
            and other.field == self.field
            and other.valid_order == self.valid_order
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.valid_order, self.coeffs.tobytes()))

    def __str__(self) -> str:
        parts = []
        top = self._nominal_top
        for i, c in enumerate(self.coeffs):
            c = int(c)
            if c == 0:
                continue
            e = top - i
            if e == 0:
                parts.append(str(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        parts.append(f"O(t^{self.valid_order - 1})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentSeries({self} mod {self.field.p})"


def series_from_rational(num: Poly, den: Poly, order: int) -> LaurentSeries:
    """The series of num/den, exact for every term of degree >= order.

    Computed with one exact polynomial floor division of num*T**K by den,
    K = max(0, -order): the discarded part then has degree < order.
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    field = num.field
    if num.is_zero:
        return LaurentSeries.zero(field, order)
    k = max(0, -order)
    q, _ = divmod(num.shift(k), den)
    if q.is_zero:
        return LaurentSeries.zero(field, order)
    top = int(q.degree) - k
    return LaurentSeries(field, top, q.coeffs[::-1], order)
