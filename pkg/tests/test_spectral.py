"""States and local eigenvalues in k space."""

import math
from fractions import Fraction as F

import pytest

from rfho.kterms import DomainError, KExpr
from rfho.spectral import (
    SymbolSpec,
    excited_state,
    ground_kernel_residual,
    ground_state,
    kernel_residual_at,
    local_eigenvalue,
    sample_local_eigenvalue,
    symbol_eval,
)


class TestSymbol:
    def test_symmetric_is_power(self):
        assert symbol_eval(F(2), 0, 3.0) == pytest.approx(9.0)
        assert symbol_eval(F(1), 0, -2.0) == pytest.approx(2.0)

    def test_skewed_phase(self):
        v = symbol_eval(F(3, 2), 1, -2.0)
        want = 2.0 ** 1.5 * complex(math.cos(math.pi / 2), -math.sin(math.pi / 2))
        assert v == pytest.approx(want)

    def test_origin(self):
        assert symbol_eval(F(1), 1, 0.0) == 0
        with pytest.raises(ValueError):
            symbol_eval(F(-1, 2), 0, 0.0)

    def test_admissibility_diamond(self):
        assert SymbolSpec(F(3, 2), F(1, 2)).in_diamond
        assert not SymbolSpec(F(3, 2), F(3, 4)).in_diamond
        assert SymbolSpec(F(1), F(1)).in_diamond  # boundary included


class TestStates:
    def test_ground_value(self):
        v = ground_state(F(1)).eval(1.0)
        assert v.real == pytest.approx(math.exp(-2 / 3), abs=1e-15)
        assert v.imag == 0.0

    def test_first_excited_index2(self):
        v = excited_state(1, F(2)).eval(1.0)
        assert v.real == 0.0
        assert v.imag == pytest.approx(2 * math.exp(-0.5), abs=1e-15)

    def test_parity_under_reflection(self):
        for n in range(5):
            st = excited_state(n, F(3, 2))
            a, b = st.eval(1.3), st.eval(-1.3)
            if n % 2 == 0:
                assert a == pytest.approx(b)
            else:
                assert a == pytest.approx(-b)

    def test_amplitude_parts_exclusive(self):
        for n in range(7):
            re_amp, im_amp = excited_state(n, F(1)).amplitude_parts()
            if n % 2 == 0:
                assert im_amp.is_zero
            else:
                assert re_amp.is_zero

    def test_singular_flag(self):
        assert excited_state(2, F(1)).singular_at_origin
        assert not excited_state(2, F(2)).singular_at_origin
        assert not ground_state(F(1)).singular_at_origin

    def test_index_range(self):
        with pytest.raises(ValueError):
            ground_state(F(5, 2))
        with pytest.raises(ValueError):
            ground_state(0)


class TestKernel:
    def test_symbolic_residual_vanishes(self):
        assert ground_kernel_residual().is_zero

    def test_numeric_residual(self):
        for a in (F(1), F(3, 2), F(2)):
            for k in (0.3, -0.3, 1.0, -1.0, 2.5, -2.5):
                assert abs(kernel_residual_at(a, k)) < 1e-12


class TestEigenvalues:
    def test_lambda0_values(self):
        lam = local_eigenvalue(0, F(1), 0)
        assert lam.eval(4.0) == pytest.approx(0.25)

    def test_index2_is_classical(self):
        for n in range(4):
            lam = local_eigenvalue(n, F(2), 0)
            for k in (0.7, 1.0, 2.3, -1.9):
                assert lam.eval(k) == pytest.approx(n + 0.5, abs=1e-12)

    def test_lambda1_against_transcribed_form(self):
        # (3/2)|k|^(a/2-1) - (1/2)(a/2-1)|k|^(-2) at a=1, k=2
        want = 1.5 * 2 ** -0.5 + 0.0625
        assert local_eigenvalue(1, F(1), 0).eval(2.0) == pytest.approx(want, abs=1e-14)

    def test_lambda2_against_transcribed_form(self):
        a, k = 1.0, 1.5
        num = (11 * a / 2 - 6) * k ** (a / 2 - 1) - 10 * k ** a \
            - (a / 2 - 1) * (a / 2 - 2) * k ** -2
        den = a - 4 * k ** (a / 2 + 1)
        lam = local_eigenvalue(2, F(1), 0)
        assert lam.eval(k) == pytest.approx(num / den, rel=1e-13)

    def test_even_in_k(self):
        lam = local_eigenvalue(2, F(3, 2), 0)
        assert lam.eval(1.3) == pytest.approx(lam.eval(-1.3))

    def test_pole_and_origin(self):
        with pytest.raises(ZeroDivisionError):
            local_eigenvalue(1, F(2), 0).eval(0.0)
        with pytest.raises(DomainError):
            local_eigenvalue(2, F(1), 0).eval(0.0)

    def test_integer_asymmetry_required(self):
        with pytest.raises(ValueError):
            local_eigenvalue(0, F(1), F(1, 2))

    def test_skewed_sample_value(self):
        # symmetric 1/2 at k=1 plus the (i sgn - 1)|k|^a / a correction
        got = sample_local_eigenvalue(0, F(1), 1, [1.0])[0]
        assert got == pytest.approx(complex(-0.5, 1.0), abs=1e-14)
        mirrored = sample_local_eigenvalue(0, F(1), 1, [-1.0])[0]
        assert mirrored == pytest.approx(complex(-0.5, -1.0), abs=1e-14)

    def test_fractional_asymmetry_sampling(self):
        got = sample_local_eigenvalue(0, F(2), F(1, 2), [1.0])[0]
        corr = (complex(math.cos(math.pi / 4), math.sin(math.pi / 4)) - 1) / 2
        assert got == pytest.approx(0.5 + corr, abs=1e-14)

    def test_skew_shift_is_symbolically_exact(self):
        # fully skewed numerator loses the |k|^a part, gains the sgn|k|^a part
        from rfho.hermite import rf_hermite

        for n in range(3):
            skew = local_eigenvalue(n, F(1), 1)
            base = local_eigenvalue(n, F(1), 0)
            hn = rf_hermite(n).expr
            assert skew.den == base.den
            assert skew.re_num - base.re_num == -(KExpr.monomial(1, 0, 2, 0) * hn)
            assert skew.im_num - base.im_num == KExpr.monomial(1, 1, 2, 0) * hn
