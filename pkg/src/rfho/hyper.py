"""Gamma and generalized hypergeometric machinery with the closed-form tables.

The x-space ground states for stability indices 1 and 3/2 admit finite
sums

    psi0(x) = sum_m a_{2m} x**(2m) f_{2m}(scale * x**power)

with pFq factors f_{2m}.  The parameter tables are transcribed verbatim
below, unreduced fractions included, so they can be audited symbol by
symbol; whether every printed coefficient is correct is checked elsewhere
(the validation suite compares term by term against an independent
moment-series oracle and itemizes mismatches rather than correcting
them).

Series evaluation runs in mpmath arbitrary precision: the index-3/2
table mixes large Gamma values with tiny rational prefactors, and the
series themselves alternate, so double precision would shed digits to
cancellation.  Public entry points return floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath as mp

from .kterms import _as_fraction


class PoleError(ValueError):
    """Gamma evaluated at a non-positive integer."""


class ConvergenceError(RuntimeError):
    """Series term cap reached before the stopping rule fired."""


class UnsupportedAlpha(ValueError):
    """No closed-form table exists for this stability index."""


def gamma(z) -> float:
    """Gamma function for real arguments, poles mapped to PoleError.

    Relative accuracy is that of the platform gamma (well under 1e-13 on
    (-5, 20), negative half-axis included via its internal reflection).
    """
    zf = float(z)
    if zf <= 0 and zf == int(zf):
        raise PoleError(f"gamma pole at {z}")
    return math.gamma(zf)


_TERM_CAP = 10_000
_QUIET_RUN = 30


@dataclass(frozen=True)
class PFQSpec:
    """A pFq series with rational parameters and argument scale * x**power."""

    numerator_params: tuple[Fraction, ...]
    denominator_params: tuple[Fraction, ...]
    argument_scale: Fraction
    argument_power: int

    def __post_init__(self) -> None:
        for b in self.denominator_params:
            if b.denominator == 1 and b <= 0:
                raise ValueError(f"denominator parameter {b} is a non-positive integer")
        if self.argument_power < 1:
            raise ValueError("argument power must be a positive integer")
        if len(self.numerator_params) > len(self.denominator_params) + 1:
            raise ValueError("series diverges: p > q + 1")

    def argument(self, x) -> mp.mpf:
        scale = mp.mpf(self.argument_scale.numerator) / self.argument_scale.denominator
        return scale * mp.mpf(x) ** self.argument_power


def _fr(v: Fraction) -> mp.mpf:
    return mp.mpf(v.numerator) / v.denominator


def pfq_mp(spec: PFQSpec, x, dps: int = 40) -> mp.mpf:
    """Series evaluation by term recurrence at the given working precision.

    term_{n+1} = term_n * prod(a+n)/prod(b+n) * z/(n+1); stops once the
    term stays below 1e-16 of the partial sum for 30 consecutive terms,
    raises ConvergenceError at the 10,000-term cap.
    """
    with mp.workdps(dps):
        z = spec.argument(x)
        if len(spec.numerator_params) == len(spec.denominator_params) + 1 and abs(z) >= 1:
            raise ValueError("argument outside the convergence disk for p = q + 1")
        nums = [_fr(a) for a in spec.numerator_params]
        dens = [_fr(b) for b in spec.denominator_params]
        rel = mp.mpf("1e-16")
        term = mp.mpf(1)
        total = mp.mpf(1)
        quiet = 0
        for n in range(_TERM_CAP):
            ratio = z / (n + 1)
            for a in nums:
                ratio *= a + n
            for b in dens:
                ratio /= b + n
            term = term * ratio
            total += term
            if abs(term) <= rel * abs(total):
                quiet += 1
                if quiet >= _QUIET_RUN:
                    return total
            else:
                quiet = 0
        raise ConvergenceError(
            f"no convergence within {_TERM_CAP} terms (|z| = {float(abs(z)):.3g})"
        )


def pfq(spec: PFQSpec, x) -> float:
    return float(pfq_mp(spec, x))


def _spec(nums: Sequence[Fraction], dens: Sequence[Fraction], scale: Fraction, power: int) -> PFQSpec:
    return PFQSpec(tuple(nums), tuple(dens), scale, power)


@dataclass(frozen=True)
class ClosedFormTerm:
    """One summand a * x**power * f(...); ``a_recipe`` documents the exact symbolic form."""

    power: int
    f: PFQSpec
    a_recipe: str


@dataclass(frozen=True)
class ClosedFormPsi0:
    """Closed-form table for psi0 at one stability index."""

    alpha: Fraction
    terms: tuple[ClosedFormTerm, ...]

    def a_values(self, dps: int = 50) -> list[mp.mpf]:
        return [_a_value(self.alpha, t.power, dps) for t in self.terms]


# ---------------------------------------------------------------------------
# index 1 table: psi0 = sum_{m=0}^{2} a_{2m} x^{2m} f_{2m}(-x^6 / 6^2)

_SCALE_1 = Fraction(-1, 6**2)

_TABLE_1 = (
    ClosedFormTerm(
        0,
        _spec(
            [Fraction(5, 12), Fraction(11, 12)],
            [Fraction(2, 6), Fraction(3, 6), Fraction(5, 6)],
            _SCALE_1, 6,
        ),
        "2^(1/3) * 3^(2/3) * Gamma(5/3)",
    ),
    ClosedFormTerm(
        2,
        _spec(
            [Fraction(3, 4), Fraction(4, 4), Fraction(5, 4)],
            [Fraction(4, 6), Fraction(5, 6), Fraction(7, 6), Fraction(8, 6)],
            _SCALE_1, 6,
        ),
        "-3/2",
    ),
    ClosedFormTerm(
        4,
        _spec(
            [Fraction(13, 12), Fraction(19, 12)],
            [Fraction(7, 6), Fraction(9, 6), Fraction(10, 6)],
            _SCALE_1, 6,
        ),
        "(7/16) * (3/2)^(1/3) * Gamma(7/3)",
    ),
)

# ---------------------------------------------------------------------------
# index 3/2 table: psi0 = sum_{m=0}^{6} a_{2m} x^{2m} f_{2m}(-x^14 / 14^6)

_SCALE_32 = Fraction(-1, 14**6)


def _f56(nums: Sequence[int], dens: Sequence[int]) -> PFQSpec:
    return _spec(
        [Fraction(v, 56) for v in nums],
        [Fraction(v, 14) for v in dens],
        _SCALE_32, 14,
    )


_TABLE_32 = (
    ClosedFormTerm(
        0,
        _f56([11, 18, 25, 39, 46, 53], [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13]),
        "7^3 * 7^(4/7) / (11 * 2 * 2^(1/7) * 3^2 * 5^2) * Gamma(32/7)",
    ),
    ClosedFormTerm(
        2,
        _f56([19, 26, 33, 47, 54, 61], [4, 5, 6, 7, 8, 9, 11, 12, 13, 15, 16]),
        "5 * 2^(4/7) / (2^3 * 7^(11/14)) * Gamma(-2/7)/sin(pi/7)^2 * sin(pi/14)/cos(3pi/14)",
    ),
    ClosedFormTerm(
        4,
        _f56([27, 34, 41, 55, 62, 69], [6, 7, 8, 9, 10, 11, 13, 15, 16, 17, 18]),
        "13 * 2^(2/7) * 7^(5/14) / 2^7 * Gamma(6/7)/sin(pi/7)^2 * sin(pi/14)/cos(3pi/14)",
    ),
    ClosedFormTerm(
        6,
        _f56([35, 42, 49, 56, 63, 70, 77], [8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20]),
        "-7^3 * 7^(1/7) / (2^8 * 3 * 5) * cot(pi/7) * tan(pi/14) * tan(3pi/14)",
    ),
    ClosedFormTerm(
        8,
        _f56([43, 50, 57, 71, 78, 85], [10, 11, 12, 13, 15, 17, 18, 19, 20, 21, 22]),
        "7^7 * 7^(1/7) / (19 * 43 * 3^5 * 5^3 * 2^14 * 2^(2/7)) * Gamma(64/7)",
    ),
    ClosedFormTerm(
        10,
        _f56([51, 58, 65, 79, 86, 93], [12, 13, 15, 16, 17, 19, 20, 21, 22, 23, 24]),
        "-7^8 * 7^(2/7) / (11 * 13 * 17 * 29 * 3^5 * 5^3 * 2^17 * 2^(4/7)) * Gamma(72/7)",
    ),
    ClosedFormTerm(
        12,
        _f56([59, 66, 73, 87, 94, 101], [15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26]),
        "7^9 * 7^(3/7) / (11^2 * 13 * 59 * 73 * 3^5 * 5^2 * 2^24 * 2^(6/7)) * Gamma(80/7)",
    ),
)


def _a_value(alpha: Fraction, power: int, dps: int) -> mp.mpf:
    """The a coefficient for one (alpha, power) slot, from its symbolic recipe."""
    with mp.workdps(dps):
        pi = mp.pi
        if alpha == 1:
            if power == 0:
                return mp.power(2, mp.mpf(1) / 3) * mp.power(3, mp.mpf(2) / 3) * mp.gamma(mp.mpf(5) / 3)
            if power == 2:
                return mp.mpf(-3) / 2
            if power == 4:
                return mp.mpf(7) / 16 * mp.power(mp.mpf(3) / 2, mp.mpf(1) / 3) * mp.gamma(mp.mpf(7) / 3)
        elif alpha == Fraction(3, 2):
            odd_ratio = mp.sin(pi / 14) / mp.cos(3 * pi / 14)
            if power == 0:
                return (
                    7**3 * mp.power(7, mp.mpf(4) / 7)
                    / (11 * 2 * mp.power(2, mp.mpf(1) / 7) * 3**2 * 5**2)
                    * mp.gamma(mp.mpf(32) / 7)
                )
            if power == 2:
                return (
                    5 * mp.power(2, mp.mpf(4) / 7) / (2**3 * mp.power(7, mp.mpf(11) / 14))
                    * mp.gamma(mp.mpf(-2) / 7) / mp.sin(pi / 7) ** 2
                    * odd_ratio
                )
            if power == 4:
                return (
                    13 * mp.power(2, mp.mpf(2) / 7) * mp.power(7, mp.mpf(5) / 14) / 2**7
                    * mp.gamma(mp.mpf(6) / 7) / mp.sin(pi / 7) ** 2
                    * odd_ratio
                )
            if power == 6:
                return (
                    -(7**3) * mp.power(7, mp.mpf(1) / 7) / (2**8 * 3 * 5)
                    * (mp.cos(pi / 7) / mp.sin(pi / 7))
                    * mp.tan(pi / 14) * mp.tan(3 * pi / 14)
                )
            if power == 8:
                return (
                    mp.mpf(7**7) * mp.power(7, mp.mpf(1) / 7)
                    / (19 * 43 * 3**5 * 5**3 * 2**14 * mp.power(2, mp.mpf(2) / 7))
                    * mp.gamma(mp.mpf(64) / 7)
                )
            if power == 10:
                return (
                    -mp.mpf(7**8) * mp.power(7, mp.mpf(2) / 7)
                    / (11 * 13 * 17 * 29 * 3**5 * 5**3 * 2**17 * mp.power(2, mp.mpf(4) / 7))
                    * mp.gamma(mp.mpf(72) / 7)
                )
            if power == 12:
                return (
                    mp.mpf(7**9) * mp.power(7, mp.mpf(3) / 7)
                    / (11**2 * 13 * 59 * 73 * 3**5 * 5**2 * 2**24 * mp.power(2, mp.mpf(6) / 7))
                    * mp.gamma(mp.mpf(80) / 7)
                )
        raise UnsupportedAlpha(f"no coefficient recipe for alpha={alpha}, power={power}")


def closed_form_psi0(alpha) -> ClosedFormPsi0:
    """The transcribed closed-form table; only indices 1 and 3/2 exist."""
    a = _as_fraction(alpha)
    if a == 1:
        return ClosedFormPsi0(a, _TABLE_1)
    if a == Fraction(3, 2):
        return ClosedFormPsi0(a, _TABLE_32)
    raise UnsupportedAlpha(f"no closed-form table for alpha = {alpha}")


def closed_form_term_values(c: ClosedFormPsi0, x, dps: int = 40) -> list[float]:
    """Each a * x**power * f value separately (for per-term auditing)."""
    out = []
    with mp.workdps(dps):
        xm = mp.mpf(x)
        for t in c.terms:
            a = _a_value(c.alpha, t.power, dps + 10)
            out.append(float(a * xm**t.power * pfq_mp(t.f, x, dps)))
    return out


def eval_closed_form(c: ClosedFormPsi0, x, dps: int = 40) -> float:
    """sum_m a_{2m} x**(2m) f_{2m}(x), summed at working precision."""
    with mp.workdps(dps):
        xm = mp.mpf(x)
        total = mp.mpf(0)
        for t in c.terms:
            a = _a_value(c.alpha, t.power, dps + 10)
            total += a * xm**t.power * pfq_mp(t.f, x, dps)
        return float(total)


# confluent pieces of the Gaussian identity, argument -x^2/2
_GAUSS_A = _spec([Fraction(1, 2)], [Fraction(3, 2)], Fraction(-1, 2), 2)
_GAUSS_B = _spec([Fraction(3, 2)], [Fraction(5, 2)], Fraction(-1, 2), 2)

#: erf in confluent form: (sqrt(pi)/2) erf(x) = x * 1F1(1/2, 3/2; -x^2)
ERF_CONFLUENT = _spec([Fraction(1, 2)], [Fraction(3, 2)], Fraction(-1), 2)


def gaussian_via_pfq(x) -> float:
    """exp(-x**2/2) rebuilt from two confluent series: 1F1(1/2,3/2;-x^2/2) - (x^2/3) 1F1(3/2,5/2;-x^2/2)."""
    xf = float(x)
    return pfq(_GAUSS_A, xf) - xf**2 / 3 * pfq(_GAUSS_B, xf)


__all__ = [
    "ClosedFormPsi0",
    "ClosedFormTerm",
    "ConvergenceError",
    "ERF_CONFLUENT",
    "PFQSpec",
    "PoleError",
    "UnsupportedAlpha",
    "closed_form_psi0",
    "closed_form_term_values",
    "eval_closed_form",
    "gamma",
    "gaussian_via_pfq",
    "pfq",
    "pfq_mp",
]
