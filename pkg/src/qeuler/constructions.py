"""Builders for the objects the operator calculus is made of.

The iterated sequences P_n / beta_n, the sign epsilon(n, k), the products
A_{k;j}, the recursive operator towers whose top stage annihilates the n-th
power of a first-order solution up to a constant, both q-analogs of the Euler
series, and the first-order equation solver itself.
"""

from dataclasses import dataclass, field

from .errors import DegenerateSequence, UnsupportedValuation
from .qfield import POLY_ONE, QPolynomial, QR_ONE, QR_QM1, QRational
from .series import LaurentSeries, expand_rational

X = LaurentSeries.monomial(1)


def build_beta(alpha, beta, n):
    """beta_n = sum_{k=0}^{n-1} (-alpha sigma)^k beta; beta_0 = 0."""
    if n == 0:
        return LaurentSeries.zero()
    acc = LaurentSeries.zero()
    term = beta
    for _ in range(n):
        acc = acc + term
        term = -(alpha * term.sigma(1))
    return acc


def build_Pn(P, n):
    """P_n = sum_{k=0}^{n-1} (-x sigma)^k P; P_0 = 0."""
    if n >= 1 and P.is_exact_zero():
        raise DegenerateSequence("base series P must be nonzero")
    return build_beta(X, P, n)


@dataclass(frozen=True)
class SignEpsilon:
    n: int
    k: int
    value: int

    @classmethod
    def of(cls, n, k):
        if not 1 <= k <= n:
            raise ValueError(f"epsilon(n, k) needs 1 <= k <= n, got ({n}, {k})")
        e = (k * (2 * n - k + 1)) // 2
        return cls(n, k, -1 if e % 2 else 1)


def epsilon(n, k):
    return SignEpsilon.of(n, k)


def build_Akj(seq, k, j):
    """Product over l != j of (seq[j] - seq[l]), 0 <= l <= k."""
    if not 0 <= j <= k:
        raise ValueError(f"need 0 <= j <= k, got j={j}, k={k}")
    acc = LaurentSeries.constant(QR_ONE)
    for ell in range(k + 1):
        if ell == j:
            continue
        diff = seq[j] - seq[ell]
        if diff.is_zero_window():
            raise DegenerateSequence(
                f"sequence members {j} and {ell} coincide within precision"
            )
        acc = acc * diff
    return acc


@dataclass
class OperatorTower:
    """All stages of the recursive operator family, in sigma-normal form.

    ``base`` records how the tower was built: {"P": series} for the
    power-of-x family, {"alpha": ..., "beta": ...} for the general one.
    ``seq`` holds the denominators P_0..P_n (resp. beta_0..beta_n).
    """

    base: dict
    n: int
    stages: list = field(default_factory=list)
    seq: list = field(default_factory=list)

    def stage(self, k):
        """The k-th operator, 1 <= k <= n."""
        return self.stages[k - 1]

    def top(self):
        return self.stages[-1]


def _sigma_factor(coeff, m):
    """The operator coeff * sigma - (-1)^m."""
    from .qdiff import QDiffOperator

    sign = QR_ONE if m % 2 == 0 else -QR_ONE
    return QDiffOperator(
        {1: coeff, 0: LaurentSeries.constant(-sign)}
    )


def _build_tower(base, seq_raw, factor_coeffs, n, prec, what):
    from .qdiff import QDiffOperator

    stages = []
    seq = [s.truncate(prec) for s in seq_raw]
    current = None
    for k in range(1, n + 1):
        denom = seq[k]
        if denom.is_zero_window():
            raise DegenerateSequence(
                f"{what}_{k} vanishes within precision; tower undefined"
            )
        inv = denom.invert(prec=prec)
        factor = _sigma_factor(factor_coeffs[n - k + 1], n - k + 1)
        step = QDiffOperator.scalar(inv).compose(factor)
        current = step if current is None else step.compose(current)
        stages.append(current)
    return OperatorTower(base=base, n=n, stages=stages, seq=seq)


def build_tower(P, n, prec):
    """Stages L_{n,1} .. L_{n,n} for the x-power family attached to P."""
    if n < 1:
        raise ValueError("tower needs n >= 1")
    if P.is_exact_zero():
        raise DegenerateSequence("base series P must be nonzero")
    seq = [build_Pn(P, j) for j in range(n + 1)]
    factor_coeffs = {m: LaurentSeries.monomial(m) for m in range(1, n + 1)}
    return _build_tower({"P": P}, seq, factor_coeffs, n, prec, "P")


def build_tower_general(alpha, beta, n, prec):
    """Stages for the general first-order family (alpha sigma + 1) y = beta."""
    if n < 1:
        raise ValueError("tower needs n >= 1")
    seq = [build_beta(alpha, beta, j) for j in range(n + 1)]
    powers = {1: alpha.truncate(prec)}
    for m in range(2, n + 1):
        powers[m] = (powers[m - 1] * alpha).truncate(prec)
    return _build_tower(
        {"alpha": alpha, "beta": beta}, seq, powers, n, prec, "beta"
    )


def euler_hat_q(prec):
    """The q-analog with monomial coefficients: sum (-1)^n q^(n(n-1)/2) x^n."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    coeffs = []
    for m in range(prec):
        c = QRational.q_power(m * (m - 1) // 2)
        coeffs.append(c if m % 2 == 0 else -c)
    return LaurentSeries(0, coeffs, prec)


def euler_hat_xq(prec):
    """The q-factorial analog: x + sum (-1)^n [n]_q! x^(n+1) with
    [n]_q! = prod_{i<=n} (1 + q + ... + q^(i-1))."""
    if prec < 2:
        raise ValueError("prec must be >= 2")
    coeffs = [QRational.from_rational(0), QR_ONE]
    fact = POLY_ONE
    for m in range(1, prec - 1):
        fact = fact * QPolynomial([1] * m)
        c = QRational(fact)
        coeffs.append(c if m % 2 == 0 else -c)
    return LaurentSeries(0, coeffs, prec)


def euler_xq_pair(prec):
    """The coefficient pair (alpha, beta) of the first-order equation solved
    by euler_hat_xq: alpha = x/(q-1-x), beta = (q-1)*alpha."""
    den = [QR_QM1, -QR_ONE]
    alpha = expand_rational([QRational.from_rational(0), QR_ONE], den, prec)
    return alpha, alpha.scale(QR_QM1)


def solve_first_order(alpha, beta, prec):
    """Unique formal solution of alpha*sigma(y) + y = beta when the leading
    coefficient has valuation >= 1 (Neumann iteration converges degreewise)."""
    if not alpha.is_zero_window() and alpha.valuation() < 1:
        raise UnsupportedValuation(
            f"solver needs valuation(alpha) >= 1, got {alpha.valuation()}"
        )
    if beta.is_exact_zero():
        return LaurentSeries.zero()
    acc = LaurentSeries.zero_mod(prec)
    term = beta.truncate(prec)
    while term.coeffs:
        acc = acc + term
        term = -(alpha * term.sigma(1))
        term = term.truncate(prec)
    return acc
