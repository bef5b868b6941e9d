"""Degree-sequence analytics and the irrationality measure.

Closed forms for the positions of the high-degree quotients and the
partial degree sums:

    n_k = (p^k - 1)/(p - 1) + 2k + 2        (position of degree 2*p^k - 1)
    s_k = 3*(p^k - 1)/(p - 1) + 1           (sum of degrees before n_k)

and the measure nu = 2 + lim_k (2*p^k - 1)/s_k = 2 + 2*(p - 1)/3, kept
as an exact rational throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import PrimeField
from .cf import PartialQuotients

__all__ = [
    "closed_forms",
    "nu",
    "DegreeProfile",
    "profile",
    "profile_from_degrees",
    "IrrationalityReport",
    "irrationality_report",
]


def _p_of(field_or_p: Union[PrimeField, int]) -> int:
    return field_or_p.p if isinstance(field_or_p, PrimeField) else int(field_or_p)


def closed_forms(field_or_p: Union[PrimeField, int], k: int) -> Tuple[int, int]:
    """(n_k, s_k) as exact integers, k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    p = _p_of(field_or_p)
    geom = (p ** k - 1) // (p - 1)
    return geom + 2 * k + 2, 3 * geom + 1


def nu(field_or_p: Union[PrimeField, int]) -> Fraction:
    """The irrationality measure 2 + 2*(p-1)/3 as an exact rational."""
    p = _p_of(field_or_p)
    value = Fraction(2) + Fraction(2 * (p - 1), 3)
    assert Fraction(2) < value <= Fraction(p + 1)
    return value


@dataclass
class DegreeProfile:
    """Empirical view of a degree sequence: where the non-linear entries
    sit, the degree sums in front of them, and how that squares with the
    closed forms."""

    p: int
    degrees: List[int]
    big_positions: List[Tuple[int, int, int]]  # (k, position, degree), 1-based
    partial_sums: List[Tuple[int, int]]        # (k, sum of degrees before position)
    mismatches: List[str] = dataclass_field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches


def profile_from_degrees(degrees: Sequence[int], field_or_p: Union[PrimeField, int]) -> DegreeProfile:
    p = _p_of(field_or_p)
    degrees = [int(d) for d in degrees]
    big: List[Tuple[int, int, int]] = []
    sums: List[Tuple[int, int]] = []
    mismatches: List[str] = []
    running = 0
    k = 0
    for pos, d in enumerate(degrees, start=1):
        if d > 1:
            k += 1
            big.append((k, pos, d))
            sums.append((k, running))
            n_k, s_k = closed_forms(p, k)
            if pos != n_k:
                mismatches.append(f"entry {k}: position {pos}, closed form {n_k}")
            if d != 2 * p ** k - 1:
                mismatches.append(f"entry {k}: degree {d}, closed form {2 * p ** k - 1}")
            if running != s_k:
                mismatches.append(f"entry {k}: partial sum {running}, closed form {s_k}")
        running += d
    return DegreeProfile(p=p, degrees=degrees, big_positions=big,
                         partial_sums=sums, mismatches=mismatches)


def profile(pqs: PartialQuotients, field_or_p: Union[PrimeField, int]) -> DegreeProfile:
    return profile_from_degrees(pqs.degrees(), field_or_p)


@dataclass
class IrrationalityReport:
    """nu and its Liouville-Mahler frame 2 < nu <= d <= p+1, with the
    finite ratio samples (2*p^k - 1)/s_k that approach nu - 2 from below.
    The samples are finite evidence, not the limit itself."""

    p: int
    nu: Fraction
    liouville_upper: int
    ratio_samples: List[Tuple[int, Fraction]]
    empirical_max_ratio: Optional[Fraction]

    @property
    def bounds_consistent(self) -> bool:
        return Fraction(2) < self.nu <= Fraction(self.liouville_upper)


def irrationality_report(
    field_or_p: Union[PrimeField, int],
    kmax: int = 6,
    degree_profile: Optional[DegreeProfile] = None,
) -> IrrationalityReport:
    p = _p_of(field_or_p)
    samples = []
    for k in range(1, kmax + 1):
        _, s_k = closed_forms(p, k)
        samples.append((k, Fraction(2 * p ** k - 1, s_k)))
    empirical = None
    if degree_profile is not None and degree_profile.big_positions:
        ratios = []
        for (k, pos, d), (_, s_obs) in zip(
            degree_profile.big_positions, degree_profile.partial_sums
        ):
            if s_obs > 0:
                ratios.append(Fraction(d, s_obs))
        empirical = max(ratios) if ratios else None
    return IrrationalityReport(
        p=p,
        nu=nu(p),
        liouville_upper=p + 1,
        ratio_samples=samples,
        empirical_max_ratio=empirical,
    )
