"""Partial-quotient extraction from algebraic equations over F_p[T].

Given P with a power-series root alpha, one step emits the integer part
bar = -(P[n-1] // P[n]) of the root, then moves to the equation of the
tail 1/(alpha - bar) by a Taylor shift x -> x + bar followed by a
coefficient reversal.  Iterating yields the partial quotients one at a
time.  The step carries no correctness theorem here: outputs are meant
to be validated a posteriori through eval_at_series.

The Taylor shift runs as repeated synthetic division (Horner passes),
exact over F_p[T]; the first pass also delivers P(bar), which decides
rational termination before any further work.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import FieldElement, Poly, PrimeField
from .cf import PartialQuotients
from .series import LaurentSeries

__all__ = [
    "BiPoly",
    "ExpansionResult",
    "NoAdmissibleQuotientError",
    "next_step",
    "expand",
    "eval_at_series",
]


class NoAdmissibleQuotientError(RuntimeError):
    """The step produced a quotient of degree < 1: the input equation does
    not define an expansion with non-constant partial quotients."""

    def __init__(self, step: int, bar: Poly, emitted: Sequence[Poly]):
        super().__init__(
            f"no admissible partial quotient at step {step}: "
            f"extracted {bar!s} (degree < 1); {len(emitted)} quotients "
            "were safely emitted"
        )
        self.step = step
        self.bar = bar
        self.emitted = tuple(emitted)


class BiPoly:
    """A polynomial in x whose coefficients are polynomials in F_p[T]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Sequence[Union[Poly, int, FieldElement]]):
        items: List[Poly] = []
        for c in coeffs:
            if isinstance(c, Poly):
                if c.field != field:
                    raise ValueError("field mismatch")
                items.append(c)
            elif isinstance(c, FieldElement):
                items.append(Poly(field, (c.value,)))
            else:
                items.append(Poly(field, (int(c),)))
        while items and items[-1].is_zero:
            items.pop()
        if len(items) < 2:
            raise ValueError("degree in x must be at least 1")
        self.field = field
        self.coeffs = tuple(items)

    @property
    def degree_x(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly(self.field, ())

    def max_coeff_degree(self) -> int:
        return max(int(c.degree) for c in self.coeffs if not c.is_zero)

    def __call__(self, value: Poly) -> Poly:
        acc = self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            acc = acc * value + c
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiPoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __repr__(self) -> str:
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            xs = "" if i == 0 else ("*x" if i == 1 else f"*x^{i}")
            parts.append(f"({c}){xs}")
        return " + ".join(parts)


@dataclass
class ExpansionResult:
    """Outcome of an expansion run.

    `rational` marks that the equation turned out to have the last
    emitted quotient as an exact (rational) root, ending the expansion.
    `max_coeff_degree` is the largest T-degree seen among the working
    equation's coefficients; `coeff_degree_bound` is the a-priori bound
    it was checked against after every step.
    """

    quotients: PartialQuotients
    rational: bool
    rational_value: Optional[Poly]
    max_coeff_degree: int
    coeff_degree_bound: int


def _extract_bar(P: BiPoly) -> Poly:
    an = P.coeffs[-1]
    an1 = P.coeffs[-2]
    q, _ = divmod(an1, an)
    return -q


def _shift_pass(work: List[Poly], bar: Poly, start: int) -> None:
    # one synthetic-division pass: work[start] becomes the next shifted
    # coefficient, work[start+1:] the running quotient
    for j in range(len(work) - 2, start - 1, -1):
        work[j] = work[j] + bar * work[j + 1]


def next_step(P: BiPoly) -> Tuple[Poly, Optional[BiPoly]]:
    """One extraction step.

    Returns (bar, next_equation); next_equation is None when P(bar) = 0,
    i.e. the root is rational and bar is its final quotient.  Raises
    NoAdmissibleQuotientError when the extracted bar has degree < 1.
    """
    bar = _extract_bar(P)
    work = list(P.coeffs)
    _shift_pass(work, bar, 0)
    if work[0].is_zero:
        return bar, None
    if bar.degree < 1:
        raise NoAdmissibleQuotientError(1, bar, ())
    for i in range(1, len(work) - 1):
        _shift_pass(work, bar, i)
    return bar, BiPoly(P.field, work[::-1])


def expand(P: BiPoly, m: int) -> ExpansionResult:
    """First m partial quotients of the power-series root of P.

    Stops early if the root turns out rational.  A quotient of degree < 1
    aborts with NoAdmissibleQuotientError carrying the quotients emitted
    so far.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    field = P.field
    base_height = P.max_coeff_degree()
    emitted: List[Poly] = []
    degree_sum = 0
    max_seen = base_height
    rational = False
    rational_value: Optional[Poly] = None
    current = P
    for step in range(1, m + 1):
        bar = _extract_bar(current)
        work = list(current.coeffs)
        _shift_pass(work, bar, 0)
        if work[0].is_zero:
            rational = True
            rational_value = bar
            if bar.degree >= 1:
                emitted.append(bar)
                degree_sum += int(bar.degree)
            break
        if bar.degree < 1:
            raise NoAdmissibleQuotientError(step, bar, emitted)
        emitted.append(bar)
        degree_sum += int(bar.degree)
        if step == m:
            break
        for i in range(1, len(work) - 1):
            _shift_pass(work, bar, i)
        current = BiPoly(field, work[::-1])
        height = current.max_coeff_degree()
        max_seen = max(max_seen, height)
        bound = base_height + current.degree_x * degree_sum
        if height > bound:
            raise RuntimeError(
                f"coefficient degree {height} exceeded the bound {bound} "
                f"after step {step}"
            )
    return ExpansionResult(
        quotients=PartialQuotients(emitted),
        rational=rational,
        rational_value=rational_value,
        max_coeff_degree=max_seen,
        coeff_degree_bound=base_height + P.degree_x * degree_sum,
    )


def eval_at_series(P: BiPoly, s: LaurentSeries) -> LaurentSeries:
    """P(s) with propagated validity: the result being zero to its floor
    certifies s as a root of P down to that order."""
    n = P.degree_x
    # exact coefficients; a floor far below anything the products can
    # reach, so the precision of s is the only binding constraint
    coeff_floor = (min(s.valid_order, -1) - 1) * (n + 1) - P.max_coeff_degree()
    acc = LaurentSeries.from_poly(P.coeffs[-1], coeff_floor)
    for c in P.coeffs[-2::-1]:
        acc = acc * s + LaurentSeries.from_poly(c, coeff_floor)
    return acc
