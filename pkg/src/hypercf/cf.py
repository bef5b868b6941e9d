"""Continued fractions over F_p[T]: continuants, convergents, conversions.

Partial quotients are polynomials of degree >= 1 (the expansions handled
here never contain constant quotients, and the first quotient is held to
the same rule).  Positions are reported 1-based: a_1 is the first
quotient, matching the continuant initial conditions x_1 = a_1, y_1 = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional

from .algebra import Poly
from .series import InsufficientPrecisionError, LaurentSeries, series_from_rational

__all__ = [
    "PartialQuotients",
    "ConvergentPair",
    "continuants",
    "rational_to_cf",
    "cf_to_series",
    "convergent_validity_floor",
]


class PartialQuotients:
    """An ordered, immutable list of partial quotients a_1, a_2, ...

    May be empty (an expansion that terminated before its first
    quotient); the operations that need at least one quotient say so.
    """

    __slots__ = ("items",)

    def __init__(self, items: Iterable[Poly] = ()):
        items = tuple(items)
        for i, a in enumerate(items):
            if not isinstance(a, Poly) or a.is_zero or a.degree < 1:
                raise ValueError(
                    f"partial quotient a_{i + 1} must be a polynomial of degree >= 1"
                )
        self.items = items

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.items)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PartialQuotients(self.items[i])
        return self.items[i]

    def quotient(self, n: int) -> Poly:
        """1-based access: quotient(1) is a_1."""
        if not 1 <= n <= len(self.items):
            raise IndexError(f"no partial quotient a_{n}")
        return self.items[n - 1]

    def tail(self, start: int) -> "PartialQuotients":
        """The tail [a_start, a_start+1, ...] (1-based)."""
        if not 1 <= start <= len(self.items):
            raise IndexError(f"tail start {start} out of range")
        return PartialQuotients(self.items[start - 1 :])

    def degrees(self) -> List[int]:
        return [int(a.degree) for a in self.items]

    def leading_coefficients(self) -> List[int]:
        return [a.leading_coefficient().value for a in self.items]

    def first_difference(self, other: "PartialQuotients") -> Optional[int]:
        """1-based index of the first disagreement, or None if one list is
        a prefix of the other and they agree on the overlap."""
        for n, (a, b) in enumerate(zip(self.items, other.items), start=1):
            if a != b:
                return n
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialQuotients) and other.items == self.items

    def __hash__(self) -> int:
        return hash(self.items)

    def __repr__(self) -> str:
        inner = ", ".join(str(a) for a in self.items)
        return f"[{inner}]"


@dataclass(frozen=True)
class ConvergentPair:
    """Continuant pair (x_n, y_n) of the n-th convergent x_n/y_n."""

    x: Poly
    y: Poly
    n: int


def continuants(pqs: PartialQuotients) -> List[ConvergentPair]:
    """Convergent pairs for n = 1..len via K_n = a_n*K_{n-1} + K_{n-2},
    from (x_1, x_0) = (a_1, 1) and (y_1, y_0) = (1, 0).

    The determinant identity x_n*y_{n-1} - x_{n-1}*y_n = (-1)^n is
    verified for every pair produced.
    """
    if not pqs.items:
        raise ValueError("continuants need at least one partial quotient")
    field = pqs.items[0].field
    x_prev, y_prev = Poly(field, (1,)), Poly(field, ())
    x, y = pqs.items[0], Poly(field, (1,))
    out = [ConvergentPair(x, y, 1)]
    sign = -1
    for n, a in enumerate(pqs.items[1:], start=2):
        x, x_prev = a * x + x_prev, x
        y, y_prev = a * y + y_prev, y
        sign = -sign
        det = x * y_prev - x_prev * y
        if det != Poly(field, (sign,)):
            raise AssertionError(f"determinant identity failed at n={n}")
        out.append(ConvergentPair(x, y, n))
    return out


def rational_to_cf(num: Poly, den: Poly) -> PartialQuotients:
    """Euclidean-algorithm expansion of num/den.

    Requires deg num > deg den so that every quotient, including the
    first, has degree >= 1; the continuants of the result reproduce
    num/den in lowest terms.
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.degree <= den.degree:
        raise ValueError(
            "rational_to_cf requires deg(num) > deg(den) "
            "(the first partial quotient must be non-constant)"
        )
    quotients = []
    a, b = num, den
    while not b.is_zero:
        q, r = divmod(a, b)
        quotients.append(q)
        a, b = b, r
    return PartialQuotients(quotients)


def convergent_validity_floor(pqs: PartialQuotients) -> int:
    """Deepest order claimable for the infinite expansion from this prefix.

    The error of x_m/y_m has degree -deg(y_m) - deg(y_{m+1}); without
    a_{m+1} the bound deg(y_{m+1}) >= deg(y_m) + 1 leaves every term of
    exponent >= -2*deg(y_m) trustworthy.
    """
    deg_y = sum(int(a.degree) for a in pqs.items[1:])
    return -2 * deg_y


def cf_to_series(
    pqs: PartialQuotients, order: int, complete: bool = False
) -> LaurentSeries:
    """Series of the continued fraction, exact for terms of degree >= order.

    With complete=False (default) the quotients are a prefix of an
    infinite expansion and `order` must not pass the validity floor of
    the deepest convergent.  With complete=True the list is the whole
    (finite) expansion and any order is allowed.
    """
    conv = continuants(pqs)[-1]
    if not complete:
        floor = convergent_validity_floor(pqs)
        if order < floor:
            raise InsufficientPrecisionError(
                f"insufficient partial quotients for requested order {order} "
                f"(floor is {floor})"
            )
    return series_from_rational(conv.x, conv.y, order)
