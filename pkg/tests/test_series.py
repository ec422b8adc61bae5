"""Truncated Laurent series over Q(q): precision windows, ring ops, twists."""

import math

import pytest

from qeuler import (
    IndeterminateValuation,
    InsufficientPrecision,
    LaurentSeries,
    PoleAtSpecialization,
    QRational,
    expand_rational,
)
from qeuler.qfield import QQ, QPolynomial, QR_ONE, QR_ZERO

from conftest import rand_qrational, rand_series, rand_unit_series, seeded


def qr(n, d=1):
    return QRational.from_rational(QQ(n, d))


class TestNormalization:
    def test_leading_zero_coefficients_raise_valuation(self):
        s = LaurentSeries(-1, [QR_ZERO, QR_ONE, QR_ZERO], prec=10)
        assert s.val == 0
        assert s.coeffs == (QR_ONE,)

    def test_window_clipped_to_prec(self):
        s = LaurentSeries(0, [QR_ONE] * 10, prec=4)
        assert len(s.coeffs) == 4

    def test_exact_zero_vs_zero_mod(self):
        z = LaurentSeries.zero()
        zm = LaurentSeries.zero_mod(8)
        assert z.is_exact_zero() and not zm.is_exact_zero()
        assert z.valuation() == math.inf
        with pytest.raises(IndeterminateValuation):
            zm.valuation()

    def test_coeff_beyond_window_raises(self):
        s = LaurentSeries.constant(QR_ONE, prec=5)
        assert s.coeff(4) == QR_ZERO
        with pytest.raises(InsufficientPrecision):
            s.coeff(5)

    def test_coeff_below_valuation_is_zero(self):
        s = LaurentSeries.monomial(3, prec=8)
        assert s.coeff(-2) == QR_ZERO
        assert s.coeff(3) == QR_ONE


class TestRingOperations:
    def test_addition_precision_is_min(self):
        a = rand_series(seeded(1), prec=10)
        b = rand_series(seeded(2), prec=14)
        assert (a + b).prec == 10
        assert (a - b).prec == 10

    def test_multiplication_precision_rule(self):
        # prec(fg) = min(prec_f + val_g, prec_g + val_f)
        f = LaurentSeries(2, [QR_ONE, QR_ONE], prec=9)
        g = LaurentSeries(-1, [QR_ONE], prec=20)
        assert (f * g).prec == 8
        assert (g * f).prec == 8

    def test_ring_axioms_randomized(self):
        rng = seeded(201)
        for _ in range(120):
            a = rand_series(rng)
            b = rand_series(rng)
            c = rand_series(rng)
            assert (a + b).agrees_with(b + a)
            assert ((a + b) + c).agrees_with(a + (b + c))
            assert (a * b).agrees_with(b * a)
            assert ((a * b) * c).agrees_with(a * (b * c))
            assert (a * (b + c)).agrees_with(a * b + a * c)

    def test_mul_exact_zero_annihilates(self):
        a = rand_series(seeded(3))
        assert (a * LaurentSeries.zero()).is_exact_zero()

    def test_pow(self):
        rng = seeded(202)
        s = rand_series(rng, prec=10)
        prod = LaurentSeries.constant(QR_ONE)
        for k in range(4):
            assert (s**k).agrees_with(prod)
            prod = prod * s

    def test_scale(self):
        s = LaurentSeries.from_x_poly([qr(1), qr(2)], prec=6)
        t = s.scale(qr(3))
        assert t.coeff(0) == qr(3) and t.coeff(1) == qr(6)
        assert s.scale(QR_ZERO).is_zero_window()


class TestInversion:
    def test_inverse_roundtrip(self):
        rng = seeded(203)
        for _ in range(60):
            u = rand_unit_series(rng, prec=12)
            inv = u.invert()
            one = u * inv
            assert one.coeff(0) == QR_ONE
            assert one.agrees_with(LaurentSeries.constant(QR_ONE, prec=one.prec))

    def test_precision_shrinks_by_twice_valuation(self):
        u = LaurentSeries(3, [QR_ONE, QR_ONE], prec=12)
        assert u.invert().prec == 12 - 2 * 3
        assert u.invert().val == -3

    def test_monomial_inverse_is_exact(self):
        m = LaurentSeries.monomial(2, qr(3))
        inv = m.invert()
        assert inv.prec is None
        assert inv.val == -2 and inv.coeffs[0] == qr(1, 3)

    def test_exact_series_needs_target(self):
        u = LaurentSeries.from_x_poly([qr(1), qr(1)])
        with pytest.raises(InsufficientPrecision):
            u.invert()
        inv = u.invert(prec=5)
        assert [inv.coeff(m) for m in range(5)] == [qr(1), qr(-1), qr(1), qr(-1), qr(1)]

    def test_zero_window_rejected(self):
        with pytest.raises(ZeroDivisionError):
            LaurentSeries.zero().invert()
        with pytest.raises(IndeterminateValuation):
            LaurentSeries.zero_mod(5).invert()


class TestSigmaTwists:
    def test_sigma_multiplies_coefficients_by_q_powers(self):
        s = LaurentSeries.from_x_poly([qr(1), qr(1), qr(1)], prec=6)
        t = s.sigma(1)
        for m in range(3):
            assert t.coeff(m) == QRational.q_power(m)

    def test_sigma_is_ring_automorphism(self):
        rng = seeded(204)
        for _ in range(100):
            a = rand_series(rng)
            b = rand_series(rng)
            assert (a + b).sigma(1).agrees_with(a.sigma(1) + b.sigma(1))
            assert (a * b).sigma(1).agrees_with(a.sigma(1) * b.sigma(1))

    def test_sigma_powers_compose(self):
        rng = seeded(205)
        for _ in range(40):
            a = rand_series(rng)
            assert a.sigma(2).agrees_with(a.sigma(1).sigma(1))
            assert a.sigma(3).agrees_with(a.sigma(2).sigma(1))

    def test_shift_moves_window(self):
        s = LaurentSeries.monomial(1, prec=5)
        t = s.shift(2)
        assert t.val == 3 and t.prec == 7

    def test_negative_sigma_on_laurent_part(self):
        s = LaurentSeries.monomial(-2, prec=5)
        t = s.sigma(1)
        assert t.coeff(-2) == QRational.q_power(-2)


class TestSpecialization:
    def test_specialize_constants(self):
        s = LaurentSeries.from_x_poly([QR_ONE, QRational.q_power(2)], prec=4)
        t = s.specialize_q(QQ(3))
        assert t.coeff(1) == qr(9)

    def test_pole_carries_exponent(self):
        bad = QRational(QPolynomial([1]), QPolynomial([-1, 1]))  # 1/(q-1)
        s = LaurentSeries.from_x_poly([QR_ONE, bad], prec=4)
        with pytest.raises(PoleAtSpecialization) as exc:
            s.specialize_q(1)
        assert exc.value.exponent == 1


class TestComparisons:
    def test_agrees_with_respects_windows(self):
        a = LaurentSeries.from_x_poly([qr(1), qr(2)], prec=2)
        b = LaurentSeries.from_x_poly([qr(1), qr(2), qr(99)], prec=8)
        assert a.agrees_with(b)  # x^2 term is outside a's window
        c = LaurentSeries.from_x_poly([qr(1), qr(3)], prec=8)
        assert not a.agrees_with(c)

    def test_truncate(self):
        s = LaurentSeries.from_x_poly([qr(1)] * 8, prec=8)
        t = s.truncate(3)
        assert t.prec == 3 and len(t.coeffs) == 3
        assert s.truncate(20).prec == 8  # cannot gain precision

    def test_leading_term(self):
        s = LaurentSeries(2, [qr(7)], prec=5)
        assert s.leading_term() == (2, qr(7))
        assert LaurentSeries.zero().leading_term() is None


class TestJson:
    def test_roundtrip(self):
        rng = seeded(206)
        for _ in range(40):
            s = rand_series(rng)
            assert LaurentSeries.from_json(s.to_json()) == s
        e = LaurentSeries.from_x_poly([qr(1), qr(-1)])
        assert e.to_json()["prec"] == "inf"
        assert LaurentSeries.from_json(e.to_json()) == e


class TestExpandRational:
    def test_geometric_series(self):
        # 1/(1-x) = 1 + x + x^2 + ...
        s = expand_rational([QR_ONE], [QR_ONE, -QR_ONE], 8)
        for m in range(8):
            assert s.coeff(m) == QR_ONE

    def test_pole_at_origin(self):
        # 1/(x - x^2) = x^-1 + 1 + x + ...
        s = expand_rational([QR_ONE], [QR_ZERO, QR_ONE, -QR_ONE], 4)
        assert s.val == -1
        for m in range(-1, 4):
            assert s.coeff(m) == QR_ONE

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            expand_rational([QR_ONE], [], 4)
