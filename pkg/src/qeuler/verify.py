"""Exact verification of the operator-calculus identities.

Every check computes both sides over Q(q) to a requested truncation order and
compares coefficients with strict equality on the guaranteed precision
window.  A failing check always carries the first nonzero residual
coefficient as a witness.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .constructions import (
    X,
    build_beta,
    build_tower,
    build_tower_general,
    epsilon,
    euler_hat_q,
    euler_hat_xq,
    euler_xq_pair,
    solve_first_order,
)
from .errors import DuplicateNode, UnknownIdentity
from .qfield import QPolynomial, QR_ONE, QR_QM1, QR_ZERO, QRational
from .series import LaurentSeries, expand_rational
from .qdiff import QDiffOperator


@dataclass
class VerificationReport:
    identity_id: str
    params: dict
    status: str  # "pass" | "fail" | "error"
    guaranteed_window: tuple  # (lo, hi); hi None when exact
    residual_witness: object = None  # (exponent, QRational) | None
    detail: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self):
        lo, hi = self.guaranteed_window
        witness = None
        if self.residual_witness is not None:
            e, v = self.residual_witness
            witness = {"exp": e, "value": v.to_json()}
        obj = {
            "id": self.identity_id,
            "params": dict(self.params),
            "status": self.status,
            "window": [lo, "inf" if hi is None else hi],
            "witness": witness,
        }
        if self.detail:
            obj["detail"] = self.detail
        return obj


def _series_report(identity_id, params, lhs, rhs):
    residual = lhs - rhs
    hi = residual.prec
    lo = min((s.val for s in (lhs, rhs) if s.coeffs), default=0)
    if residual.coeffs:
        return VerificationReport(
            identity_id,
            params,
            "fail",
            (lo, hi),
            residual_witness=residual.leading_term(),
        )
    return VerificationReport(identity_id, params, "pass", (lo, hi))


def _bool_report(identity_id, params, ok, detail=""):
    return VerificationReport(
        identity_id, params, "pass" if ok else "fail", (0, None), detail=detail
    )


def _sign_constant(e):
    return -QR_ONE if e % 2 else QR_ONE


class TPolynomial:
    """Dense polynomial in an auxiliary indeterminate T over Q(q)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def linear(cls, c0, c1):
        return cls([c0, c1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, v in enumerate(b):
            a[i] = a[i] + v
        return TPolynomial(a)

    def __sub__(self, other):
        return self + other.scale(-QR_ONE)

    def __mul__(self, other):
        return TPolynomial(
            kernels.poly_mul_generic(list(self.coeffs), list(other.coeffs))
        )

    def __pow__(self, n):
        result = TPolynomial.constant(QR_ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return TPolynomial([c * v for v in self.coeffs])

    def __eq__(self, other):
        return self.coeffs == other.coeffs

    def leading_nonzero(self):
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return (i, c)
        return None


# ---------------------------------------------------------------------------
# theorem-level checks
# ---------------------------------------------------------------------------


def _solve_for_power(P, prec):
    return solve_first_order(X, P.truncate(prec), prec)


def verify_thm_fn(P, n, prec, perturb=None):
    """Top tower stage applied to f^n equals (-1)^(n(n-1)/2), where f solves
    x*sigma(f) + f = P.  ``perturb=(exponent, delta)`` corrupts f for
    fail-path testing."""
    params = {"n": n, "prec": prec}
    f = _solve_for_power(P, prec)
    if perturb is not None:
        e, delta = perturb
        f = f + LaurentSeries.monomial(e, delta, prec)
    tower = build_tower(P, n, prec)
    lhs = tower.top().apply(f**n)
    rhs = LaurentSeries.constant(_sign_constant(n * (n - 1) // 2))
    return _series_report("fn", params, lhs, rhs)


def verify_lemma_akj(P, n, k, prec):
    """Intermediate stage k applied to f^n equals the signed interpolation
    sum over the shifted powers (f - P_j)^n."""
    params = {"n": n, "k": k, "prec": prec}
    f = _solve_for_power(P, prec)
    tower = build_tower(P, n, prec)
    lhs = tower.stage(k).apply(f**n)
    seq = tower.seq
    rhs = LaurentSeries.zero()
    from .constructions import build_Akj

    for j in range(k + 1):
        akj = build_Akj(seq, k, j)
        rhs = rhs + akj.invert(prec=prec) * ((f - seq[j]) ** n)
    rhs = rhs.scale(QRational.from_rational(epsilon(n, k).value))
    return _series_report("Lnkf", params, lhs, rhs)


def verify_lagrange(alphas):
    """Signed Lagrange sum: sum_j (T - alpha_j)^n / prod_{l!=j}(alpha_j -
    alpha_l) collapses to the constant (-1)^n."""
    n = len(alphas) - 1
    params = {"n": n}
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if alphas[i] == alphas[j]:
                raise DuplicateNode(f"nodes {i} and {j} coincide")
    total = TPolynomial([])
    for j, aj in enumerate(alphas):
        denom = QR_ONE
        for ell, al in enumerate(alphas):
            if ell != j:
                denom = denom * (aj - al)
        total = total + (TPolynomial.linear(-aj, QR_ONE) ** n).scale(
            denom.inverse()
        )
    residual = total - TPolynomial.constant(_sign_constant(n))
    witness = residual.leading_nonzero()
    status = "pass" if witness is None else "fail"
    return VerificationReport("Faj", params, status, (0, None), witness)


def verify_thm_gen(alpha, beta, n, prec):
    """General tower: top stage applied to f^n equals (-1)^(n(n-1)/2) where
    alpha*sigma(f) + f = beta."""
    params = {"n": n, "prec": prec}
    f = solve_first_order(alpha, beta, prec)
    tower = build_tower_general(alpha, beta, n, prec)
    lhs = tower.top().apply(f**n)
    rhs = LaurentSeries.constant(_sign_constant(n * (n - 1) // 2))
    return _series_report("abfn", params, lhs, rhs)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

BASE_SERIES = {
    "one": lambda: LaurentSeries.constant(QR_ONE),
    "one-plus-x": lambda: LaurentSeries.from_x_poly([QR_ONE, QR_ONE]),
    "one-minus-x": lambda: LaurentSeries.from_x_poly([QR_ONE, -QR_ONE]),
    "one-minus-x-plus-x2": lambda: LaurentSeries.from_x_poly(
        [QR_ONE, -QR_ONE, QR_ONE]
    ),
}


def resolve_base_series(name):
    try:
        return BASE_SERIES[name]()
    except KeyError:
        raise UnknownIdentity(f"unknown base series name: {name}") from None


def resolve_alpha_beta(name, prec):
    if name == "eq-ab1":
        return euler_xq_pair(prec)
    raise UnknownIdentity(f"unknown coefficient pair name: {name}")


def _euler_operator():
    return QDiffOperator({1: X, 0: LaurentSeries.constant(QR_ONE)})


def _check_euler(params, prec):
    lhs = _euler_operator().apply(euler_hat_q(prec))
    return _series_report("Euler", params, lhs, LaurentSeries.constant(QR_ONE))


def _check_e2(params, prec):
    second = QDiffOperator(
        {1: LaurentSeries.monomial(2), 0: LaurentSeries.constant(-QR_ONE)}
    )
    L = _euler_operator().compose(second)
    lhs = L.apply(euler_hat_q(prec) ** 2)
    rhs = LaurentSeries.from_x_poly([-QR_ONE, QR_ONE])
    return _series_report("E2", params, lhs, rhs)


def _check_fn(params, prec):
    P = resolve_base_series(params.get("P", "one"))
    n = int(params.get("n", 2))
    rep = verify_thm_fn(P, n, prec)
    rep.params["P"] = params.get("P", "one")
    return rep


def _check_lnkf(params, prec):
    P = resolve_base_series(params.get("P", "one"))
    n = int(params.get("n", 2))
    k = int(params.get("k", n))
    rep = verify_lemma_akj(P, n, k, prec)
    rep.params["P"] = params.get("P", "one")
    return rep


def _default_nodes(n):
    nodes = [QR_ZERO]
    for i in range(n):
        nodes.append(QRational.q_power(i))
    return nodes


def _check_faj(params, prec):
    n = int(params.get("n", 3))
    return verify_lagrange(_default_nodes(n)[: n + 1])


def _check_abfn(params, prec):
    name = params.get("ab", "eq-ab1")
    alpha, beta = resolve_alpha_beta(name, prec)
    n = int(params.get("n", 2))
    rep = verify_thm_gen(alpha, beta, n, prec)
    rep.params["ab"] = name
    return rep


def _check_eulerq(params, prec):
    alpha, beta = euler_xq_pair(prec)
    L = QDiffOperator({1: alpha, 0: LaurentSeries.constant(QR_ONE)})
    lhs = L.apply(euler_hat_xq(prec))
    return _series_report("Eulerq", params, lhs, beta)


def _check_eulern(params, prec):
    n = int(params.get("n", 2))
    P = LaurentSeries.constant(QR_ONE)
    tower = build_tower(P, n, prec)
    # clear the outermost 1/P_n factor: compare P_n * (top stage) applied to
    # the n-th power against the signed P_n
    cleared = QDiffOperator.scalar(tower.seq[n]).compose(tower.top())
    lhs = cleared.apply(euler_hat_q(prec) ** n)
    rhs = tower.seq[n].scale(_sign_constant(n * (n - 1) // 2))
    return _series_report("Eulern", params, lhs, rhs)


def _qeuler2a_operator(prec):
    """The second-order delta-form operator annihilating the square of the
    q-factorial Euler analog up to alpha*(sigma(alpha) - 1)."""
    alpha, _ = euler_xq_pair(prec)
    inv_den = expand_rational(
        [QR_ONE], [QR_QM1, -QR_ONE], prec
    )  # 1/(q-1-x)
    left = QDiffOperator.from_delta([inv_den, alpha])
    right = QDiffOperator.from_delta(
        [inv_den - LaurentSeries.monomial(-1), alpha]
    )
    return left.compose(right)


def _qeuler2a_rhs(prec):
    alpha, _ = euler_xq_pair(prec)
    return alpha * (alpha.sigma(1) - LaurentSeries.constant(QR_ONE))


def _check_qeuler2a(params, prec):
    # delta-form factors need one extra order: 1/x in a factor coefficient
    # costs a unit of window after composition and application
    wp = prec + 4
    M = _qeuler2a_operator(wp)
    lhs = M.apply(euler_hat_xq(wp) ** 2)
    return _series_report(
        "qEuler2a", params, lhs.truncate(prec), _qeuler2a_rhs(prec)
    )


def _check_euler2l(params, prec):
    """Normal-form equality of the delta-form operator with the cleared
    sigma-form 1/(q-1)^2 (alpha sigma + 1)(alpha sigma - 1/alpha)."""
    wp = prec + 4
    M = _qeuler2a_operator(wp)
    alpha, _ = euler_xq_pair(wp)
    first = QDiffOperator({1: alpha, 0: LaurentSeries.constant(QR_ONE)})
    second = QDiffOperator({1: alpha, 0: -alpha.invert(prec=wp)})
    L = first.compose(second).scale((QR_ONE / QR_QM1) ** 2)
    for k in sorted(set(M.terms) | set(L.terms)):
        a = M.coeff(k)
        b = L.coeff(k)
        residual = a - b
        if residual.coeffs:
            return VerificationReport(
                "Euler2L",
                dict(params, shift=k),
                "fail",
                (residual.val, residual.prec),
                residual_witness=residual.leading_term(),
            )
    return VerificationReport("Euler2L", params, "pass", (0, prec))


def _check_q1_product(params, prec):
    """q = 1 collapse: the cleared tower factors reduce to an elementary
    rational-function identity, checked exactly in Q[x]."""
    n = int(params.get("n", 3))
    # QPolynomial is a dense rational-coefficient polynomial; the variable is
    # x here rather than q
    num = QPolynomial([1])
    den = QPolynomial([1])
    for k in range(1, n + 1):
        sign = 1 if k % 2 == 0 else -1
        num = num * QPolynomial([-sign] + [0] * (k - 1) + [1])  # x^k - (-1)^k
        den = den * QPolynomial([(-1) ** j for j in range(k)])  # alternating sum
    target = QPolynomial([1, 1]) ** n
    if (n * (n - 1) // 2) % 2:
        target = -target
    ok = num == den * target
    return _bool_report(
        "q1-product", {"n": n}, ok, detail="exact identity in Q[x]"
    )


def _check_eq_euler2a_limit(params, prec):
    """Classical limit: apply (delta + 1/x)(delta + 2/x) to the square of the
    factorially divergent series and get the constant 2; also check the q = 1
    specialization of the q-factorial analog term by term."""
    terms = int(params.get("terms", 12))
    pad = terms + 4
    # classical series sum (-1)^n n! x^(n+1), coefficients indexed by exponent
    e = [Fraction(0)] * (pad + 1)
    fact = 1
    for m in range(pad):
        if m:
            fact *= m
        e[m + 1] = Fraction(fact if m % 2 == 0 else -fact)
    y = [Fraction(0)] * (pad + 1)
    for i in range(1, pad + 1):
        if not e[i]:
            continue
        for j in range(1, pad + 1 - i):
            y[i + j] += e[i] * e[j]
    # g = delta(y) + 2*y/x, then h = delta(g) + g/x; y has valuation 2
    g = [Fraction(0)] * (pad + 1)
    for m in range(2, pad + 1):
        g[m] += m * y[m]
        if m - 1 <= pad:
            g[m - 1] += 2 * y[m]
    h = [Fraction(0)] * (pad + 1)
    for m in range(pad + 1):
        if g[m]:
            h[m] += m * g[m]
            if m - 1 >= 0:
                h[m - 1] += g[m]
    ok = h[0] == 2 and all(h[m] == 0 for m in range(1, terms))
    # the q-factorial analog specializes cleanly at q = 1 to the classical one
    spec = euler_hat_xq(terms + 1).specialize_q(1)
    classical = LaurentSeries.from_x_poly(
        [QRational.from_rational(c) for c in e[: terms + 1]], prec=terms + 1
    )
    ok = ok and spec.agrees_with(classical)
    return _bool_report(
        "eqEuler2a-limit",
        {"terms": terms},
        ok,
        detail="classical operator check and q=1 specialization",
    )


def _check_prop_ab(params, prec):
    """Equivalence of 'no vanishing member' and 'pairwise distinct members'
    for the iterated sequence attached to (alpha, beta)."""
    name = params.get("ab", "eq-ab1")
    alpha, beta = resolve_alpha_beta(name, prec)
    n = int(params.get("n", 4))
    betas = [build_beta(alpha, beta, j) for j in range(n + 1)]
    cond_nonzero = all(not betas[j].is_zero_window() for j in range(1, n + 1))
    cond_distinct = True
    for ell in range(n + 1):
        for j in range(ell + 1, n + 1):
            if not betas[j].coeffs and not betas[ell].coeffs:
                cond_distinct = False
            elif (betas[j] - betas[ell]).is_zero_window():
                cond_distinct = False
    ok = cond_nonzero == cond_distinct
    return _bool_report(
        "prop-ab",
        {"ab": name, "n": n},
        ok,
        detail=f"nonzero={cond_nonzero}, distinct={cond_distinct}",
    )


def _check_betajk(params, prec):
    """Telescoping of the iterated sequence: beta_j - beta_l equals the l-th
    twist of beta_(j-l)."""
    name = params.get("ab", "eq-ab1")
    alpha, beta = resolve_alpha_beta(name, prec)
    jmax = int(params.get("n", 5))
    betas = [build_beta(alpha, beta, j) for j in range(jmax + 1)]
    for ell in range(jmax):
        for j in range(ell + 1, jmax + 1):
            lhs = betas[j] - betas[ell]
            rhs = betas[j - ell]
            for _ in range(ell):
                rhs = -(alpha * rhs.sigma(1))
            residual = lhs - rhs
            if residual.coeffs:
                return VerificationReport(
                    "betajk",
                    {"ab": name, "j": j, "l": ell},
                    "fail",
                    (residual.val, residual.prec),
                    residual_witness=residual.leading_term(),
                )
    return _bool_report("betajk", {"ab": name, "n": jmax}, True)


CATALOG = {
    "Euler": _check_euler,
    "E2": _check_e2,
    "fn": _check_fn,
    "Lnkf": _check_lnkf,
    "Faj": _check_faj,
    "abfn": _check_abfn,
    "Eulerq": _check_eulerq,
    "Eulern": _check_eulern,
    "qEuler2a": _check_qeuler2a,
    "Euler2L": _check_euler2l,
    "q1-product": _check_q1_product,
    "eqEuler2a-limit": _check_eq_euler2a_limit,
    "prop-ab": _check_prop_ab,
    "betajk": _check_betajk,
}


def verify_catalog(identity_id, params=None, prec=32):
    if identity_id not in CATALOG:
        raise UnknownIdentity(f"unknown identity id: {identity_id}")
    return CATALOG[identity_id](dict(params or {}), prec)


DEFAULT_GRID = [
    ("Euler", {}),
    ("E2", {}),
    ("fn", {"P": "one", "n": 2}),
    ("fn", {"P": "one", "n": 4}),
    ("fn", {"P": "one-plus-x", "n": 3}),
    ("Lnkf", {"P": "one", "n": 3, "k": 1}),
    ("Lnkf", {"P": "one", "n": 3, "k": 2}),
    ("Lnkf", {"P": "one", "n": 3, "k": 3}),
    ("Faj", {"n": 4}),
    ("abfn", {"n": 1}),
    ("abfn", {"n": 2}),
    ("Eulerq", {}),
    ("Eulern", {"n": 3}),
    ("qEuler2a", {}),
    ("Euler2L", {}),
    ("q1-product", {"n": 5}),
    ("eqEuler2a-limit", {}),
    ("prop-ab", {"n": 4}),
    ("betajk", {"n": 5}),
]


def verify_all(prec=32, grid=None):
    """Run the catalog on its default parameter grid; reports are returned in
    deterministic (id, params) order."""
    reports = []
    for identity_id, params in grid or DEFAULT_GRID:
        reports.append(verify_catalog(identity_id, params, prec))
    return reports
