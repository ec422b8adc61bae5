"""Shared generators for randomized property tests (all seeded)."""

import random

from qeuler import LaurentSeries, QPolynomial, QRational


def rand_poly(rng, max_deg=3, span=9):
    """Random QPolynomial in q with small integer coefficients."""
    deg = rng.randint(0, max_deg)
    return QPolynomial([rng.randint(-span, span) for _ in range(deg + 1)])


def rand_nonzero_poly(rng, max_deg=3, span=9):
    while True:
        p = rand_poly(rng, max_deg, span)
        if not p.is_zero():
            return p


def rand_qrational(rng, max_deg=2, span=5):
    """Random element of Q(q)."""
    return QRational(rand_poly(rng, max_deg, span), rand_nonzero_poly(rng, max_deg, span))


def rand_nonzero_qrational(rng, max_deg=2, span=5):
    while True:
        r = rand_qrational(rng, max_deg, span)
        if not r.is_zero():
            return r


def rand_series(rng, prec=12, min_val=-2, max_len=6):
    """Random truncated Laurent series with small Q(q) coefficients."""
    val = rng.randint(min_val, 2)
    n = rng.randint(1, max_len)
    coeffs = [rand_nonzero_qrational(rng, max_deg=1, span=4)]
    coeffs += [rand_qrational(rng, max_deg=1, span=4) for _ in range(n - 1)]
    return LaurentSeries(val, coeffs, prec)


def rand_unit_series(rng, prec=12, max_len=6):
    """Random series with nonzero constant term (invertible at valuation 0)."""
    coeffs = [rand_nonzero_qrational(rng, max_deg=1, span=4)]
    coeffs += [rand_qrational(rng, max_deg=1, span=4) for _ in range(rng.randint(0, max_len))]
    return LaurentSeries(0, coeffs, prec)


def seeded(seed):
    return random.Random(seed)
