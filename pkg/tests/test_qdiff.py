"""The non-commutative operator ring: composition, action, delta conversion."""

import pytest

from qeuler import LaurentSeries, QDiffOperator, QRational
from qeuler.qfield import QR_ONE, QR_QM1, QR_ZERO

from conftest import rand_qrational, rand_series, seeded


def rand_operator(rng, max_order=2, prec=14):
    terms = {}
    for k in range(rng.randint(1, max_order + 1)):
        terms[k] = rand_series(rng, prec=prec, min_val=0, max_len=3)
    return QDiffOperator(terms)


class TestStructure:
    def test_zero_coefficients_dropped(self):
        op = QDiffOperator({0: LaurentSeries.zero(), 2: LaurentSeries.monomial(1)})
        assert list(op.terms) == [2]
        assert op.order == 2

    def test_negative_shift_rejected(self):
        with pytest.raises(ValueError):
            QDiffOperator({-1: LaurentSeries.monomial(0)})

    def test_identity_and_scalar(self):
        f = rand_series(seeded(301))
        assert QDiffOperator.identity().apply(f).agrees_with(f)
        c = QRational.from_rational(3)
        assert QDiffOperator.scalar(c).apply(f).agrees_with(f.scale(c))

    def test_sigma_power_action(self):
        f = rand_series(seeded(302))
        assert QDiffOperator.sigma_power(2).apply(f).agrees_with(f.sigma(2))


class TestComposition:
    def test_compose_matches_apply_chain(self):
        rng = seeded(303)
        for _ in range(80):
            L = rand_operator(rng)
            M = rand_operator(rng)
            f = rand_series(rng, min_val=0)
            assert L.compose(M).apply(f).agrees_with(L.apply(M.apply(f)))

    def test_twist_rule(self):
        # (a sigma) (b sigma) = a*sigma(b) sigma^2
        a = rand_series(seeded(304), min_val=0)
        b = rand_series(seeded(305), min_val=0)
        L = QDiffOperator({1: a})
        M = QDiffOperator({1: b})
        composed = L.compose(M)
        assert list(composed.terms) == [2]
        assert composed.coeff(2).agrees_with(a * b.sigma(1))

    def test_composition_is_associative(self):
        rng = seeded(306)
        for _ in range(30):
            A = rand_operator(rng)
            B = rand_operator(rng)
            C = rand_operator(rng)
            assert A.compose(B).compose(C).agrees_with(A.compose(B.compose(C)))

    def test_linearity_of_apply(self):
        rng = seeded(307)
        for _ in range(50):
            L = rand_operator(rng)
            f = rand_series(rng, min_val=0)
            g = rand_series(rng, min_val=0)
            assert L.apply(f + g).agrees_with(L.apply(f) + L.apply(g))

    def test_add_and_scale(self):
        rng = seeded(308)
        L = rand_operator(rng)
        M = rand_operator(rng)
        f = rand_series(rng, min_val=0)
        assert (L + M).apply(f).agrees_with(L.apply(f) + M.apply(f))
        c = QRational.from_rational(-2)
        assert L.scale(c).apply(f).agrees_with(L.apply(f).scale(c))
        assert (L - L).apply(f).is_zero_window()


class TestDeltaForm:
    def test_delta_action_is_divided_difference(self):
        # delta(x^m) = [m]_q x^m with [m]_q = (q^m - 1)/(q - 1)
        delta = QDiffOperator.from_delta([LaurentSeries.zero(), LaurentSeries.constant(QR_ONE)])
        for m in range(5):
            out = delta.apply(LaurentSeries.monomial(m, prec=10))
            bracket = (QRational.q_power(m) - QR_ONE) / QR_QM1
            if m == 0:
                assert out.is_zero_window()
            else:
                assert out.coeff(m) == bracket

    def test_from_delta_to_delta_roundtrip(self):
        rng = seeded(309)
        for _ in range(40):
            coeffs = [rand_series(rng, prec=12, min_val=0, max_len=3) for _ in range(3)]
            op = QDiffOperator.from_delta(coeffs)
            back = op.to_delta_coeffs()
            assert len(back) <= 3
            for orig, rec in zip(coeffs, back + [LaurentSeries.zero()] * 3):
                assert orig.agrees_with(rec)

    def test_delta_square_normal_form(self):
        # delta^2 = (sigma - 1)^2 / (q-1)^2: the constant 1/(q-1) commutes
        # with sigma, so the normal form is c^2 (sigma^2 - 2 sigma + 1)
        d2 = QDiffOperator.from_delta(
            [LaurentSeries.zero(), LaurentSeries.zero(), LaurentSeries.constant(QR_ONE)]
        )
        c2 = (QR_ONE / QR_QM1) ** 2
        assert d2.coeff(2).coeff(0) == c2
        assert d2.coeff(1).coeff(0) == -(c2 + c2)
        assert d2.coeff(0).coeff(0) == c2


class TestComparisons:
    def test_agrees_with_missing_term(self):
        L = QDiffOperator({0: LaurentSeries.constant(QR_ONE), 1: LaurentSeries.zero_mod(6)})
        M = QDiffOperator({0: LaurentSeries.constant(QR_ONE)})
        assert L.agrees_with(M)
        N = QDiffOperator({0: LaurentSeries.constant(QR_ONE), 1: LaurentSeries.monomial(0)})
        assert not N.agrees_with(M)

    def test_json_roundtrip(self):
        rng = seeded(310)
        for _ in range(25):
            op = rand_operator(rng)
            back = QDiffOperator.from_json(op.to_json())
            assert back == op
