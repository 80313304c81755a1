"""Formal algebra of x-space operator words and the factorization remainders.

Words are monomials c * x**a * D**b where D**b is a fractional derivative
of exact rational order b (negative b denotes an antiderivative order).
The only structural axiom is the commutation rule

    D**b x = x D**b + b D**(b-1)

applied repeatedly to push derivative factors to the right of x factors
(normal order).  Everything downstream is exact rational bookkeeping.

The oscillator factorizes through the first-order pair

    lowering(d) = D**(d/2) + x        raising(g) = -D**(g/2) + x

with mixed orders d (delta) and g (gamma).  Normal-ordering the products
against H = -D**a + x**2, a = (d+g)/2, isolates the remainders:

    raising(g)*lowering(d) = H - remainder_forward(g, d)
    lowering(d)*raising(g) = H + remainder_reverted(d, g)

For d = g = a both collapse to (a/2) D**(a/2-1), whose 1/a-scaled form
(1/2) D**(a/2-1) is the factorization constant generalizing the 1/2 of
the ordinary oscillator.

``fourier_remainder`` gives the k-space image of the forward remainder as
a first-order operator in d/dk with complex symbol coefficients; see its
docstring for the sign/scaling conventions it fixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .kterms import FixedKExpr, _as_fraction
from .spectral import KState


@dataclass(frozen=True)
class OpWord:
    """Monomial coeff * x**xpow * D**dorder in normal order."""

    coeff: Fraction
    xpow: int
    dorder: Fraction

    def __post_init__(self) -> None:
        if self.xpow < 0:
            raise ValueError("x power must be nonnegative")

    def __str__(self) -> str:
        factors = []
        if self.xpow:
            factors.append("x" if self.xpow == 1 else f"x^{self.xpow}")
        if self.dorder != 0:
            factors.append(f"D^({self.dorder})")
        if not factors:
            return str(self.coeff)
        body = "*".join(factors)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return f"-{body}"
        return f"{self.coeff}*{body}"


@dataclass(frozen=True)
class OpExpr:
    """Normal-ordered sum of OpWord, merged on (xpow, dorder), sorted ascending."""

    words: tuple[OpWord, ...]

    @staticmethod
    def from_words(words: Iterable[OpWord]) -> OpExpr:
        acc: dict[tuple[int, Fraction], Fraction] = {}
        for w in words:
            key = (w.xpow, w.dorder)
            acc[key] = acc.get(key, Fraction(0)) + w.coeff
        out = [OpWord(c, k[0], k[1]) for k, c in acc.items() if c != 0]
        out.sort(key=lambda w: (w.xpow, w.dorder))
        return OpExpr(tuple(out))

    @staticmethod
    def zero() -> OpExpr:
        return OpExpr(())

    @staticmethod
    def word(coeff, xpow: int, dorder) -> OpExpr:
        return OpExpr.from_words([OpWord(_as_fraction(coeff), xpow, _as_fraction(dorder))])

    @property
    def is_zero(self) -> bool:
        return not self.words

    def __add__(self, other: OpExpr) -> OpExpr:
        return OpExpr.from_words(self.words + other.words)

    def __neg__(self) -> OpExpr:
        return OpExpr(tuple(OpWord(-w.coeff, w.xpow, w.dorder) for w in self.words))

    def __sub__(self, other: OpExpr) -> OpExpr:
        return self + (-other)

    def scale(self, factor) -> OpExpr:
        f = _as_fraction(factor)
        return OpExpr.from_words(OpWord(w.coeff * f, w.xpow, w.dorder) for w in self.words)

    def __mul__(self, other: OpExpr) -> OpExpr:
        out: list[OpWord] = []
        for left in self.words:
            for right in other.words:
                c = left.coeff * right.coeff
                # push left.dorder through right.xpow, then exponents of D add
                for mc, mx, md in _push_through(left.dorder, right.xpow):
                    out.append(
                        OpWord(c * mc, left.xpow + mx, md + right.dorder)
                    )
        return OpExpr.from_words(out)

    def to_json_obj(self) -> list[dict]:
        return [
            {"coeff": str(w.coeff), "xpow": w.xpow, "dorder": str(w.dorder)}
            for w in self.words
        ]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [str(w) for w in self.words]
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


@lru_cache(maxsize=None)
def _push_through(dorder: Fraction, xpow: int) -> tuple[tuple[Fraction, int, Fraction], ...]:
    """Normal-order D**dorder x**xpow as a sum of (coeff, xpow, dorder) triples.

    Single axiom D**b x = x D**b + b D**(b-1), recursed over xpow; each
    application strictly reduces the number of x factors to the right of
    the D factor, so this terminates.
    """
    if xpow == 0:
        return ((Fraction(1), 0, dorder),)
    if dorder == 0:
        return ((Fraction(1), xpow, Fraction(0)),)
    out: list[tuple[Fraction, int, Fraction]] = []
    for c, a, b in _push_through(dorder, xpow - 1):
        out.append((c, a + 1, b))                       # x * (D**b x**(xpow-1) term)
    for c, a, b in _push_through(dorder - 1, xpow - 1):
        out.append((c * dorder, a, b))                  # b * D**(b-1) x**(xpow-1) term
    acc: dict[tuple[int, Fraction], Fraction] = {}
    for c, a, b in out:
        acc[(a, b)] = acc.get((a, b), Fraction(0)) + c
    return tuple((c, a, b) for (a, b), c in sorted(acc.items()) if c != 0)


def normal_order(product: Sequence[OpWord]) -> OpExpr:
    """Normal-order a left-to-right product of words into a canonical OpExpr."""
    result = OpExpr.word(1, 0, 0)
    for w in product:
        result = result * OpExpr.from_words([w])
    return result


def _positive_order(value) -> Fraction:
    v = _as_fraction(value)
    if v <= 0:
        raise ValueError("fractional orders must be positive")
    return v


def lowering_op(delta) -> OpExpr:
    """D**(delta/2) + x."""
    d = _positive_order(delta)
    return OpExpr.word(1, 0, d / 2) + OpExpr.word(1, 1, 0)


def raising_op(gamma) -> OpExpr:
    """-D**(gamma/2) + x."""
    g = _positive_order(gamma)
    return OpExpr.word(-1, 0, g / 2) + OpExpr.word(1, 1, 0)


def oscillator_op(alpha) -> OpExpr:
    """-D**alpha + x**2 (unscaled)."""
    a = _positive_order(alpha)
    return OpExpr.word(-1, 0, a) + OpExpr.word(1, 2, 0)


def remainder_forward_closed(gamma, delta) -> OpExpr:
    """Closed form (g/2) D**(g/2-1) + x (D**(g/2) - D**(d/2))."""
    g, d = _as_fraction(gamma), _as_fraction(delta)
    return (
        OpExpr.word(g / 2, 0, g / 2 - 1)
        + OpExpr.word(1, 1, g / 2)
        - OpExpr.word(1, 1, d / 2)
    )


def remainder_reverted_closed(delta, gamma) -> OpExpr:
    """Closed form (d/2) D**(d/2-1) + x (D**(d/2) - D**(g/2))."""
    g, d = _as_fraction(gamma), _as_fraction(delta)
    return (
        OpExpr.word(d / 2, 0, d / 2 - 1)
        + OpExpr.word(1, 1, d / 2)
        - OpExpr.word(1, 1, g / 2)
    )


def compose_factorization(delta, gamma) -> tuple[OpExpr, OpExpr]:
    """(hamiltonian, remainder) with raising(g)*lowering(d) = H - remainder.

    The product is normal-ordered from the factor pair; the remainder is
    recovered as H - product with a = (d+g)/2, so its closed form is a
    derived result here, not an input.
    """
    g, d = _as_fraction(gamma), _as_fraction(delta)
    if g <= 0 or d <= 0:
        raise ValueError("fractional orders must be positive")
    h = oscillator_op((d + g) / 2)
    product = raising_op(g) * lowering_op(d)
    return h, h - product


def reverted_factorization(delta, gamma) -> OpExpr:
    """Remainder of the reverted product: lowering(d)*raising(g) - H."""
    g, d = _as_fraction(gamma), _as_fraction(delta)
    if g <= 0 or d <= 0:
        raise ValueError("fractional orders must be positive")
    h = oscillator_op((d + g) / 2)
    return lowering_op(d) * raising_op(g) - h


def scaled_remainder(alpha) -> OpExpr:
    """Equal-order remainder with the 1/alpha scaling: (1/2) D**(alpha/2 - 1)."""
    a = _as_fraction(alpha)
    _, rem = compose_factorization(a, a)
    return rem.scale(1 / a)


@dataclass(frozen=True)
class ComplexFixed:
    """Complex-valued expression as a (real, imaginary) FixedKExpr pair."""

    re: FixedKExpr
    im: FixedKExpr

    @staticmethod
    def zero() -> ComplexFixed:
        return ComplexFixed(FixedKExpr.zero(), FixedKExpr.zero())

    @staticmethod
    def real(expr: FixedKExpr) -> ComplexFixed:
        return ComplexFixed(expr, FixedKExpr.zero())

    @staticmethod
    def imaginary(expr: FixedKExpr) -> ComplexFixed:
        return ComplexFixed(FixedKExpr.zero(), expr)

    @property
    def is_zero(self) -> bool:
        return self.re.is_zero and self.im.is_zero

    def __add__(self, other: ComplexFixed) -> ComplexFixed:
        return ComplexFixed(self.re + other.re, self.im + other.im)

    def __sub__(self, other: ComplexFixed) -> ComplexFixed:
        return ComplexFixed(self.re - other.re, self.im - other.im)

    def __mul__(self, other: ComplexFixed) -> ComplexFixed:
        return ComplexFixed(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def times_i(self) -> ComplexFixed:
        return ComplexFixed(-self.im, self.re)

    def scale(self, factor) -> ComplexFixed:
        return ComplexFixed(self.re.scale(factor), self.im.scale(factor))

    def eval(self, k: float) -> complex:
        return complex(self.re.eval(k), self.im.eval(k))


def _symbol_pair(order: Fraction, theta: int) -> ComplexFixed:
    """|k|**order * exp(i sgn(k) theta pi/2) as an exact pair, integer theta only.

    For integer theta the phase collapses to cos + i sgn sin with
    cos, sin in {-1, 0, 1}, so the pair stays exact.
    """
    cos = (1, 0, -1, 0)[theta % 4]
    sin = (0, 1, 0, -1)[theta % 4]
    re = FixedKExpr.monomial(cos, 0, order) if cos else FixedKExpr.zero()
    im = FixedKExpr.monomial(sin, 1, order) if sin else FixedKExpr.zero()
    return ComplexFixed(re, im)


def _times_sgn(c: ComplexFixed) -> ComplexFixed:
    flip = FixedKExpr.monomial(1, 1, 0)
    return ComplexFixed(c.re * flip, c.im * flip)


@dataclass(frozen=True)
class FourierRemainder:
    """k-space image of the forward remainder, as c0 + c1 * d/dk.

    Built from the symbol calculus d/dk S_q = q sgn(k) S_{q-1} (S_q the
    power symbol of order q) and the transform of x into i d/dk:

        c0 = -(g/2) S_{g/2-1}
             + i [ (g/2) sgn S_{g/2-1} - (d/2) sgn S_{d/2-1} ]
        c1 = i [ S_{g/2} - S_{d/2} ]

    Two conventions are inherited as-is from the x-space display this
    mirrors: the overall sign of c0's first term (opposite to the x-space
    forward remainder's constant term), and the absence of the 1/a
    scaling that turns the equal-order remainder into the factorization
    constant; apply ``.scale(1/alpha)`` for the scaled form.
    """

    gamma: Fraction
    delta: Fraction
    theta: int
    c0: ComplexFixed
    c1: ComplexFixed

    def scale(self, factor) -> FourierRemainder:
        return FourierRemainder(
            self.gamma, self.delta, self.theta,
            self.c0.scale(factor), self.c1.scale(factor),
        )

    def apply(self, state: KState) -> ComplexFixed:
        """Amplitude pair A with (remainder phi_n)(k) = A(k) * phi0(k).

        phi_n = i**n H phi0 gives d phi_n/dk = i**n (H' - s H) phi0 with
        s = sgn(k)|k|**(a/2), so the result is c0 * i**n H plus
        c1 * i**n (H' - s H), all exact at the state's alpha.
        """
        a = state.alpha
        h = state.hermite.expr.at_alpha(a)
        s = FixedKExpr.monomial(1, 1, a / 2)
        base = _phase_pair(state.n, h)
        deriv = _phase_pair(state.n, h.differentiate() - s * h)
        return self.c0 * base + self.c1 * deriv

    def eval_applied(self, state: KState, k: float) -> complex:
        return self.apply(state).eval(k) * state.ground_value(k)


def _phase_pair(n: int, expr: FixedKExpr) -> ComplexFixed:
    r = n % 4
    if r == 0:
        return ComplexFixed.real(expr)
    if r == 1:
        return ComplexFixed.imaginary(expr)
    if r == 2:
        return ComplexFixed.real(-expr)
    return ComplexFixed.imaginary(-expr)


def fourier_remainder(gamma, delta, theta=0) -> FourierRemainder:
    """Exact k-space forward remainder for integer asymmetry theta."""
    g, d = _as_fraction(gamma), _as_fraction(delta)
    if g <= 0 or d <= 0:
        raise ValueError("fractional orders must be positive")
    th = _as_fraction(theta)
    if th.denominator != 1:
        raise ValueError("exact k-space coefficients require integer asymmetry")
    t = int(th)
    sym_g1 = _symbol_pair(g / 2 - 1, t)
    sym_d1 = _symbol_pair(d / 2 - 1, t)
    sym_g = _symbol_pair(g / 2, t)
    sym_d = _symbol_pair(d / 2, t)
    c0 = sym_g1.scale(-g / 2) + (
        _times_sgn(sym_g1).scale(g / 2) - _times_sgn(sym_d1).scale(d / 2)
    ).times_i()
    c1 = (sym_g - sym_d).times_i()
    return FourierRemainder(g, d, t, c0, c1)


__all__ = [
    "ComplexFixed",
    "FourierRemainder",
    "OpExpr",
    "OpWord",
    "compose_factorization",
    "fourier_remainder",
    "lowering_op",
    "normal_order",
    "oscillator_op",
    "raising_op",
    "remainder_forward_closed",
    "remainder_reverted_closed",
    "reverted_factorization",
    "scaled_remainder",
]
