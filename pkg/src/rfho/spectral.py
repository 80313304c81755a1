"""Fourier-space eigenstates and local eigenvalues of the fractional oscillator.

The momentum-space Hamiltonian acts as multiplication by the asymmetric
power symbol |k|**a * exp(i sgn(k) theta pi/2) plus -d^2/dk^2.  Its
factorization uses the half-order symbol with unit asymmetry, whose kernel
is the stretched-exponential ground state

    phi0(k) = exp(-|k|**(a/2+1) / (a/2+1)),

and the n-th eigenstate is phi_n = i**n H_n(k) phi0(k) with H_n from
:mod:`rfho.hermite`.  These states are eigenfunctions of the full operator
only locally: applying the operator and dividing back by phi_n yields a
k-dependent "local eigenvalue"

    lam_n(k) = [ S_theta(k) H_n - H_n'' + 2 s H_n' - (s**2 - s') H_n ] / (a H_n)

where s = sgn(k)|k|**(a/2) is minus the log-derivative of phi0 and
S_theta(k) = |k|**a exp(i sgn(k) theta pi/2).  The numerator and
denominator are exact expressions in the signed-power algebra; the 1/a
scaling is carried by the denominator polynomial so everything stays
polynomial in ``a``.

Exact symbolic eigenvalues require the half-angle cosine and sine of
theta*pi/2 to be rational, which restricts theta to integers (0 gives the
symmetric operator, 1 the fully skewed one).  Arbitrary rational theta is
supported numerically through ``sample_local_eigenvalue``, which adds the
exact correction (exp(i sgn(k) theta pi/2) - 1) |k|**a / a to the
symmetric eigenvalue.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hermite import RFHermite, rf_hermite
from .kterms import AlphaPoly, FracExponent, KExpr, _as_fraction


@dataclass(frozen=True)
class SymbolSpec:
    """Power symbol |k|**order * exp(i sgn(k) * asymmetry * pi/2)."""

    order: Fraction
    asymmetry: Fraction = Fraction(0)

    @property
    def in_diamond(self) -> bool:
        """Whether |asymmetry| <= min(order, 2 - order), the admissible-symbol region.

        Outside it the symbol no longer corresponds to a stable process;
        construction is still allowed and callers may warn.
        """
        return abs(self.asymmetry) <= min(self.order, 2 - self.order)

    def eval(self, k: float) -> complex:
        kf = float(k)
        if kf == 0.0:
            if self.order < 0:
                raise ValueError("negative-order symbol diverges at k = 0")
            return 0j if self.order > 0 else complex(1.0)
        sign = 1.0 if kf > 0 else -1.0
        mag = abs(kf) ** float(self.order)
        phase = sign * float(self.asymmetry) * math.pi / 2
        return mag * cmath.exp(1j * phase)


def symbol_eval(order, asymmetry, k: float) -> complex:
    """Convenience wrapper: value of the power symbol at one point."""
    return SymbolSpec(_as_fraction(order), _as_fraction(asymmetry)).eval(k)


def symbol_derivative(spec: SymbolSpec) -> tuple[Fraction, SymbolSpec]:
    """d/dk of the symbol: returns (prefactor, lower-order symbol) with an extra sgn(k).

    d/dk [ |k|**q e^{i sgn theta pi/2} ] = q sgn(k) |k|**(q-1) e^{i sgn theta pi/2},
    so the result is (q, symbol of order q-1) and the caller must attach
    one sgn(k) factor.
    """
    return spec.order, SymbolSpec(spec.order - 1, spec.asymmetry)


#: sgn(k)|k|**(a/2), minus the log-derivative of the ground state
S_EXPR = KExpr.monomial(1, 1, 1, 0)


@dataclass(frozen=True)
class KState:
    """Fourier-space eigenstate phi_n = i**n H_n(k) phi0(k)."""

    n: int
    alpha: Fraction
    hermite: RFHermite

    def __post_init__(self) -> None:
        if not (0 < self.alpha <= 2):
            raise ValueError("stability index must lie in (0, 2]")
        if self.hermite.n != self.n:
            raise ValueError("hermite index does not match state index")

    @property
    def phase_power(self) -> int:
        """Power of i in phi_n = i**n H_n phi0."""
        return self.n

    @property
    def ground_exponent(self) -> Fraction:
        """Exponent e = a/2 + 1 in phi0 = exp(-|k|**e / e)."""
        return self.alpha / 2 + 1

    def ground_value(self, k: float) -> float:
        e = float(self.ground_exponent)
        return math.exp(-abs(float(k)) ** e / e)

    def amplitude_parts(self):
        """(real, imaginary) FixedKExpr factors of i**n H_n at this alpha.

        Exactly one of the two is nonzero: i**n is real for even n and
        imaginary for odd n.
        """
        h = self.hermite.expr.at_alpha(self.alpha)
        r = self.n % 4
        if r == 0:
            return h, h.scale(0)
        if r == 1:
            return h.scale(0), h
        if r == 2:
            return -h, h.scale(0)
        return h.scale(0), -h

    def eval(self, k: float) -> complex:
        re, im = self.amplitude_parts()
        g = self.ground_value(k)
        return complex(re.eval(k) * g, im.eval(k) * g)

    @property
    def singular_at_origin(self) -> bool:
        """True when the amplitude carries a negative power of |k| (n >= 2, a < 2)."""
        m = self.hermite.expr.at_alpha(self.alpha).min_exponent
        return m is not None and m < 0


def ground_state(alpha) -> KState:
    return KState(0, _as_fraction(alpha), rf_hermite(0))


def excited_state(n: int, alpha) -> KState:
    return KState(n, _as_fraction(alpha), rf_hermite(n))


def ground_kernel_residual() -> KExpr:
    """Symbolic lowering residue on the ground state, exactly zero.

    Applying (half-order unit-asymmetry symbol) + i d/dk to phi0 and
    stripping i*phi0 leaves sgn|k|**(a/2) + (log phi0)', which cancels
    term by term in the exact algebra.
    """
    dlog_phi0 = KExpr.monomial(-1, 1, 1, 0)
    return S_EXPR + dlog_phi0


def kernel_residual_at(alpha, k: float) -> complex:
    """Numeric lowering residue [S_{a/2,1} phi0 + i phi0'](k), zero up to rounding."""
    a = _as_fraction(alpha)
    state = ground_state(a)
    g = state.ground_value(k)
    sym = symbol_eval(a / 2, 1, k)
    dphi = -S_EXPR.at_alpha(a).eval(k) * g
    return sym * g + 1j * dphi


@dataclass(frozen=True)
class LocalEigenvalue:
    """Exact rational form lam_n(k) = (re_num + i im_num) / den, generic in ``a``.

    den = a * H_n, so lam_n has poles exactly at the amplitude zeros of
    phi_n (and possibly at k = 0 through negative powers in the numerator).
    """

    n: int
    alpha: Fraction
    theta: Fraction
    re_num: KExpr
    im_num: KExpr
    den: KExpr

    def eval(self, k: float) -> complex:
        d = self.den.eval(self.alpha, k)
        if d == 0.0:
            raise ZeroDivisionError(f"local eigenvalue pole at k = {k}")
        return complex(
            self.re_num.eval(self.alpha, k) / d,
            self.im_num.eval(self.alpha, k) / d,
        )


_HALF_TURN_COS = (1, 0, -1, 0)
_HALF_TURN_SIN = (0, 1, 0, -1)


def local_eigenvalue(n: int, alpha, theta=0) -> LocalEigenvalue:
    """Exact local eigenvalue of the n-th state for integer asymmetry theta.

    cos(theta pi/2) and sin(theta pi/2) are rational only when theta is an
    integer (the only rational points of the cosine at rational angles),
    so the exact form is restricted to integer theta; use
    ``sample_local_eigenvalue`` for other rational values.
    """
    a = _as_fraction(alpha)
    th = _as_fraction(theta)
    if th.denominator != 1:
        raise ValueError(
            "exact symbolic eigenvalues require integer asymmetry; "
            "use sample_local_eigenvalue for general rational theta"
        )
    r = int(th) % 4
    cos_half, sin_half = _HALF_TURN_COS[r], _HALF_TURN_SIN[r]

    h = rf_hermite(n).expr
    h1 = h.differentiate()
    h2 = h1.differentiate()
    s2 = S_EXPR * S_EXPR                      # |k|**a
    sp = S_EXPR.differentiate()               # (a/2)|k|**(a/2-1)
    # -phi''/phi with the ground factor stripped:
    bracket = h2 - (S_EXPR * h1).scale(2) + (s2 - sp) * h
    abs_sym_h = KExpr.monomial(1, 0, 2, 0) * h    # |k|**a H_n
    sgn_sym_h = KExpr.monomial(1, 1, 2, 0) * h    # sgn|k|**a H_n
    re_num = abs_sym_h.scale(cos_half) - bracket
    im_num = sgn_sym_h.scale(sin_half)
    den = h.scale(AlphaPoly.of(0, 1))
    return LocalEigenvalue(n, a, th, re_num, im_num, den)


def sample_local_eigenvalue(n: int, alpha, theta, ks: Sequence[float]) -> list[complex]:
    """Local eigenvalue at sample points for arbitrary rational asymmetry.

    Evaluates the exact symmetric (theta = 0) form and adds the closed
    asymmetry correction (exp(i sgn(k) theta pi/2) - 1) |k|**a / a, which
    is how theta enters the multiplication symbol.
    """
    a = _as_fraction(alpha)
    th = _as_fraction(theta)
    base = local_eigenvalue(n, a, 0)
    out = []
    for k in ks:
        lam = base.eval(k)
        kf = float(k)
        if kf != 0.0 and th != 0:
            sign = 1.0 if kf > 0 else -1.0
            corr = (
                (cmath.exp(1j * sign * float(th) * math.pi / 2) - 1.0)
                * abs(kf) ** float(a)
                / float(a)
            )
            lam = lam + corr
        out.append(lam)
    return out


__all__ = [
    "KState",
    "LocalEigenvalue",
    "S_EXPR",
    "SymbolSpec",
    "excited_state",
    "ground_kernel_residual",
    "ground_state",
    "kernel_residual_at",
    "local_eigenvalue",
    "sample_local_eigenvalue",
    "symbol_derivative",
    "symbol_eval",
]
