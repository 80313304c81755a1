"""Polynomial family: ladder vs weight-derivative build, reductions, structure."""

from fractions import Fraction as F

import pytest

from rfho.hermite import (
    RFHermite,
    StructureError,
    extract_p_coefficients,
    ladder_next,
    leading_term_checks,
    rf_hermite,
    rodrigues,
    standard_reduction,
)
from rfho.kterms import AlphaPoly, KExpr


def test_member_zero_is_one():
    assert rf_hermite(0).expr == KExpr.one()


def test_first_three_members():
    h1 = KExpr.monomial(2, 1, 1, 0)
    h2 = KExpr.monomial(4, 0, 2, 0) + KExpr.monomial(AlphaPoly.of(0, -1), 0, 1, -1)
    h3 = (
        KExpr.monomial(8, 1, 3, 0)
        + KExpr.monomial(AlphaPoly.of(0, -6), 1, 2, -1)
        + KExpr.monomial(AlphaPoly.of(0, -1, F(1, 2)), 1, 1, -2)
    )
    assert rf_hermite(1).expr == h1
    assert rf_hermite(2).expr == h2
    assert rf_hermite(3).expr == h3


def test_ladder_equals_rodrigues():
    for n in range(11):
        assert rf_hermite(n).expr == rodrigues(n).expr


def test_ladder_next_increments_index():
    h = ladder_next(rf_hermite(4))
    assert h.n == 5
    assert h.expr == rf_hermite(5).expr


def test_structure_invariants():
    for n in range(13):
        leading_term_checks(rf_hermite(n))


def test_term_count_bound():
    for n in range(1, 13):
        assert len(rf_hermite(n).expr.terms) <= n


def test_extract_coefficients_n1():
    assert extract_p_coefficients(rf_hermite(1)) == [AlphaPoly.of(2)]


def test_extract_coefficients_n3():
    # alternating-sign convention: term i carries (-1)^i p_i
    p = extract_p_coefficients(rf_hermite(3))
    assert p == [AlphaPoly.of(8), AlphaPoly.of(0, 6), AlphaPoly.of(0, -1, F(1, 2))]


def test_extract_rejects_wrong_index():
    with pytest.raises(StructureError):
        extract_p_coefficients(RFHermite(2, rf_hermite(3).expr))


def _classical(n: int) -> list[int]:
    h = [1]
    for _ in range(n):
        shifted = [0, *(2 * c for c in h)]
        deriv = [i * c for i, c in enumerate(h)][1:]
        h = [a - b for a, b in zip(shifted, deriv + [0] * (len(shifted) - len(deriv)))]
    return h


def test_standard_reduction_matches_classical():
    for n in range(11):
        reduced = standard_reduction(rf_hermite(n))
        coeffs = {t.exponent.m: t.coeff.eval(F(0)) for t in reduced.terms}
        want = _classical(n)
        got = [int(coeffs.get(q, 0)) for q in range(len(want))]
        assert got == want
        assert max(coeffs) == n


def test_index_32_exponents():
    fixed = rf_hermite(4).expr.at_alpha(F(3, 2))
    assert {t.exponent for t in fixed.terms} == {F(3), F(5, 4), F(-1, 2), F(-9, 4)}


def test_most_negative_exponent():
    # lattice floor sits at a/2 - (n-1)
    for n in range(2, 8):
        fixed = rf_hermite(n).expr.at_alpha(F(1))
        assert min(t.exponent for t in fixed.terms) == F(1, 2) - (n - 1)
