"""Builders for the hyperquadratic continued-fraction family and its checks.

The family is parametrized by an odd prime p and a unit triple
(u1, u2, u3).  With F = (T^2+4)^((p-1)/2) and R = T^p - T*F (the
remainder of T^p by F), the predicted expansion is the concatenation of
blocks C_0, C_1, C_2, ... where, writing e_n = (p^n - 1) / 2,

    C_{2n}   = u1*T, u2*P_{2n}, u3*T,
               then ((2*u3)^-1*T, 2*u3*T) repeated e_{2n} times
    C_{2n+1} = (4*u3)^-1*T, 4*u1*u2*u3*P_{2n+1}, (4*u1)^-1*T,
               then (2*u1*T, (2*u1)^-1*T) repeated e_{2n+1} times

with P_0 = T and P_{n+1} = F * P_n^p.  The expansion's tail from index 4
satisfies the Frobenius relation alpha^p = 4*u1*u3*F*alpha_4 + u1*R,
which eliminates to a single equation of degree p+1 in alpha; the same
elimination at depth 2 produces the all-linear Mills-Robbins equations.
Everything here is checkable: verify_pattern compares the predicted
stream against the extraction engine and measures both residuals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import FieldElement, Poly, PrimeField
from .cf import (
    PartialQuotients,
    cf_to_series,
    continuants,
    convergent_validity_floor,
    rational_to_cf,
)
from .expansion import BiPoly, NoAdmissibleQuotientError, eval_at_series, expand
from .series import LaurentSeries

__all__ = [
    "Triple",
    "PatternSpec",
    "build_spec",
    "build_Pn",
    "pattern",
    "pattern_position",
    "pattern_equation",
    "mills_robbins_u2",
    "mills_robbins_equation",
    "fibonacci_poly",
    "IdentityReport",
    "check_identities",
    "ResidualSummary",
    "PatternVerification",
    "verify_pattern",
    "default_verification_order",
]


@dataclass(frozen=True)
class Triple:
    """A triple of units (u1, u2, u3) in F_p*."""

    u1: FieldElement
    u2: FieldElement
    u3: FieldElement

    def __post_init__(self):
        field = self.u1.field
        if self.u2.field != field or self.u3.field != field:
            raise ValueError("triple components must share one field")
        if not (self.u1 and self.u2 and self.u3):
            raise ValueError("u components must be nonzero residues mod p")

    @classmethod
    def from_ints(cls, field: PrimeField, values: Sequence[int]) -> "Triple":
        if len(values) != 3:
            raise ValueError("a triple needs exactly three components")
        return cls(field(values[0]), field(values[1]), field(values[2]))

    def as_ints(self) -> Tuple[int, int, int]:
        return (self.u1.value, self.u2.value, self.u3.value)

    @property
    def field(self) -> PrimeField:
        return self.u1.field


@dataclass(frozen=True)
class PatternSpec:
    """Frozen parameters of one family member: the field, the unit triple,
    and the polynomials F = (T^2+4)^((p-1)/2), R = T^p - T*F."""

    field: PrimeField
    u: Triple
    F: Poly
    R: Poly


def build_spec(field: PrimeField, u: Union[Triple, Sequence[int]]) -> PatternSpec:
    if not isinstance(u, Triple):
        u = Triple.from_ints(field, tuple(u))
    if u.field != field:
        raise ValueError("triple is over a different field")
    p = field.p
    T = field.T
    F = (T * T + 4) ** ((p - 1) // 2)
    R = T ** p - T * F
    assert F.degree == p - 1
    _, rem = divmod(T ** p, F)
    assert R == rem, "R must equal the remainder of T^p by F"
    assert R.degree <= p - 2
    assert R == fibonacci_poly(field, p - 2) * 2
    return PatternSpec(field=field, u=u, F=F, R=R)


def build_Pn(spec: PatternSpec, n: int) -> Poly:
    """P_0 = T, P_{k+1} = F * P_k^p; deg P_n = 2*p^n - 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = spec.field.p
    poly = spec.field.T
    for _ in range(n):
        poly = spec.F * poly ** p
    assert poly.degree == 2 * p ** n - 1
    return poly


def pattern_position(p: int, k: int) -> int:
    """1-based stream index of the k-th high-degree entry (k >= 1)."""
    return (p ** k - 1) // (p - 1) + 2 * k + 2


def pattern(spec: PatternSpec, count: int) -> PartialQuotients:
    """The first `count` entries of the predicted expansion C_0 C_1 C_2..."""
    if count < 1:
        raise ValueError("count must be >= 1")
    field = spec.field
    p = field.p
    T = field.T
    u1, u2, u3 = spec.u.u1, spec.u.u2, spec.u.u3
    four = field(4)
    two = field(2)
    even_outer = (u1 * T, u3 * T)
    odd_outer = ((four * u3).inverse() * T, (four * u1).inverse() * T)
    even_pair = ((two * u3).inverse() * T, (two * u3) * T)
    odd_pair = ((two * u1) * T, (two * u1).inverse() * T)
    even_scale = u2
    odd_scale = four * u1 * u2 * u3

    out: List[Poly] = []
    n = 0
    p_n = T
    while len(out) < count:
        repeats = (p ** n - 1) // 2
        if n % 2 == 0:
            head = (even_outer[0], even_scale * p_n, even_outer[1])
            pair = even_pair
        else:
            head = (odd_outer[0], odd_scale * p_n, odd_outer[1])
            pair = odd_pair
        if n >= 1:
            want = pattern_position(p, n)
            assert len(out) + 2 == want, "block bookkeeping drifted"
        out.extend(head)
        for _ in range(repeats):
            out.extend(pair)
            if len(out) >= count:
                break
        n += 1
        if len(out) < count:
            p_n = spec.F * p_n ** p
    return PartialQuotients(out[:count])


def _eliminate_tail(
    field: PrimeField,
    G: Poly,
    H: Poly,
    x_n: Poly,
    y_n: Poly,
    x_prev: Poly,
    y_prev: Poly,
) -> BiPoly:
    """Equation for alpha from alpha^p = G*alpha_tail + H and the
    convergent relation alpha_tail = (x_prev - y_prev*alpha)/(y_n*alpha - x_n):

        y_n*a^{p+1} - x_n*a^p + (G*y_prev - H*y_n)*a + (H*x_n - G*x_prev) = 0
    """
    p = field.p
    coeffs: List[Poly] = [Poly(field, ()) for _ in range(p + 2)]
    coeffs[p + 1] = y_n
    coeffs[p] = -x_n
    coeffs[1] = G * y_prev - H * y_n
    coeffs[0] = H * x_n - G * x_prev
    return BiPoly(field, coeffs)


def pattern_equation(spec: PatternSpec, r_override: Optional[Poly] = None) -> BiPoly:
    """The degree-(p+1) equation satisfied by the pattern's expansion.

    r_override swaps in an alternate R (the `verify` command uses it to
    demonstrate that only the remainder convention R = T^p - T*F is
    consistent with the emitted stream).
    """
    field = spec.field
    u1, u3 = spec.u.u1, spec.u.u3
    T = field.T
    pqs = PartialQuotients(
        (spec.u.u1 * T, spec.u.u2 * T, spec.u.u3 * T)
    )
    conv = continuants(pqs)
    x2, y2 = conv[1].x, conv[1].y
    x3, y3 = conv[2].x, conv[2].y
    R = spec.R if r_override is None else r_override
    G = spec.F * (field(4) * u1 * u3)
    H = R * u1
    return _eliminate_tail(field, G, H, x3, y3, x2, y2)


def mills_robbins_u2(field: PrimeField, u1: Union[int, FieldElement]) -> FieldElement:
    """u2 = -u1 * (1 + 2*u1)^-1; requires u1 not in {0, -1/2}."""
    u1 = field(u1)
    if not u1:
        raise ValueError("u1 must be nonzero")
    den = field(1) + field(2) * u1
    if not den:
        raise ValueError("u1 must differ from -1/2 mod p")
    return -u1 * den.inverse()


def mills_robbins_equation(field: PrimeField, u1: Union[int, FieldElement]) -> BiPoly:
    """Equation of the all-linear family: alpha = [u1*T, u2*T, tail] with
    alpha^p = F*tail - (1/2)*R, eliminated at depth 2.  Requires p >= 5."""
    if field.p < 5:
        raise ValueError("the all-linear family requires p >= 5")
    u1 = field(u1)
    u2 = mills_robbins_u2(field, u1)
    T = field.T
    spec = build_spec(field, Triple(u1, u2, field.one))
    pqs = PartialQuotients((u1 * T, u2 * T))
    conv = continuants(pqs)
    x1, y1 = conv[0].x, conv[0].y
    x2, y2 = conv[1].x, conv[1].y
    half = field(2).inverse()
    G = spec.F
    H = -(spec.R * half)
    return _eliminate_tail(field, G, H, x2, y2, x1, y1)


def fibonacci_poly(field: PrimeField, n: int) -> Poly:
    """f_0 = 1, f_1 = T, f_n = T*f_{n-1} + f_{n-2} over F_p."""
    if n < 0:
        raise ValueError("n must be >= 0")
    T = field.T
    prev, cur = Poly(field, (1,)), T
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, T * cur + prev
    return cur


@dataclass
class IdentityReport:
    p: int
    f_pm1_equals_F: bool
    f_p_plus_f_pm2_equals_Tp: bool
    R_equals_2_f_pm2: bool
    fibonacci_cf_all_T: bool
    fibonacci_cf_checked_through: int

    @property
    def all_ok(self) -> bool:
        return (
            self.f_pm1_equals_F
            and self.f_p_plus_f_pm2_equals_Tp
            and self.R_equals_2_f_pm2
            and self.fibonacci_cf_all_T
        )


def check_identities(field: PrimeField, fib_cf_limit: int = 12) -> IdentityReport:
    """The classical identities tying F and R to the formal Fibonacci
    polynomials, plus the all-T expansions of consecutive quotients."""
    p = field.p
    T = field.T
    F = (T * T + 4) ** ((p - 1) // 2)
    R = T ** p - T * F
    f = [fibonacci_poly(field, n) for n in range(max(p + 1, fib_cf_limit + 1))]
    cf_ok = True
    for n in range(1, fib_cf_limit + 1):
        expected = PartialQuotients([T] * n)
        if rational_to_cf(f[n], f[n - 1]) != expected:
            cf_ok = False
            break
    return IdentityReport(
        p=p,
        f_pm1_equals_F=(f[p - 1] == F),
        f_p_plus_f_pm2_equals_Tp=(f[p] + f[p - 2] == T ** p),
        R_equals_2_f_pm2=(R == f[p - 2] * 2),
        fibonacci_cf_all_T=cf_ok,
        fibonacci_cf_checked_through=fib_cf_limit,
    )


@dataclass
class ResidualSummary:
    """A residual series collapsed to what matters: its validity floor and
    whether anything nonzero survives above it."""

    floor: int
    zero_to_floor: bool
    top_nonzero: Optional[int]

    @classmethod
    def of(cls, s: LaurentSeries) -> "ResidualSummary":
        return cls(
            floor=s.valid_order,
            zero_to_floor=s.is_zero_to_floor,
            top_nonzero=s.top_degree,
        )


@dataclass
class PatternVerification:
    p: int
    u: Tuple[int, int, int]
    steps: int
    order_requested: int
    engine_quotients: int
    engine_aborted: bool
    match: bool
    first_mismatch: Optional[int]
    tail_relation_residual: Optional[ResidualSummary]
    equation_residual: Optional[ResidualSummary]

    @property
    def ok(self) -> bool:
        if not self.match:
            return False
        for res in (self.tail_relation_residual, self.equation_residual):
            if res is not None and not res.zero_to_floor:
                return False
        return True


def default_verification_order(pqs: PartialQuotients, p: int) -> int:
    """Nominal inspection depth -4*p*(sum of quotient degrees).  Deeper
    than the quotients can support, so in practice it clamps to the
    convergent validity floor."""
    return -4 * p * sum(pqs.degrees())


def verify_pattern(
    spec: PatternSpec,
    steps: int,
    order: Optional[int] = None,
    r_override: Optional[Poly] = None,
) -> PatternVerification:
    """Compare the predicted stream against the extraction engine and
    measure both residuals from truncated series.

    Any mismatch lands in the report (with the first differing index);
    nothing raises.  Requested orders deeper than the quotients support
    are clamped to the achievable floor.
    """
    field = spec.field
    p = field.p
    predicted = pattern(spec, steps)
    if order is None:
        order = default_verification_order(predicted, p)

    equation = pattern_equation(spec, r_override=r_override)
    try:
        run = expand(equation, steps)
        engine_quotients = run.quotients
        aborted = False
    except NoAdmissibleQuotientError as err:
        engine_quotients = PartialQuotients(err.emitted)
        aborted = True

    emitted_count = len(engine_quotients)
    diff = predicted.first_difference(engine_quotients)
    match = diff is None and emitted_count == steps
    first_mismatch = diff if diff is not None else (
        None if match else emitted_count + 1
    )

    tail_res = eq_res = None
    if steps >= 5:
        alpha_order = max(order, convergent_validity_floor(predicted))
        alpha = cf_to_series(predicted, alpha_order)
        tail = predicted.tail(4)
        tail_order = max(order, convergent_validity_floor(tail))
        alpha4 = cf_to_series(tail, tail_order)
        scale = field(4) * spec.u.u1 * spec.u.u3
        floor_hint = min(alpha_order, tail_order) - p
        residual = (
            alpha.frobenius()
            - LaurentSeries.from_poly(spec.F * scale, floor_hint) * alpha4
            - LaurentSeries.from_poly(spec.R * spec.u.u1, floor_hint)
        )
        tail_res = ResidualSummary.of(residual)
        eq_res = ResidualSummary.of(
            eval_at_series(pattern_equation(spec), alpha)
        )

    return PatternVerification(
        p=p,
        u=spec.u.as_ints(),
        steps=steps,
        order_requested=order,
        engine_quotients=emitted_count,
        engine_aborted=aborted,
        match=match,
        first_mismatch=first_mismatch,
        tail_relation_residual=tail_res,
        equation_residual=eq_res,
    )
