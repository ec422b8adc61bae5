"""Truncated Laurent series in x over Q(q), with explicit precision tracking.

A series stores the exponent of its first coefficient (``val``), a coefficient
window, and ``prec``: the series is known modulo x^prec (``prec=None`` means
exact).  The leading stored coefficient is nonzero, so ``val`` witnesses the
valuation.  The empty window comes in two flavours: the canonical zero
(prec=None) and "zero modulo x^prec", whose valuation is indeterminate.
"""

import math

from .errors import (
    IndeterminateValuation,
    InsufficientPrecision,
    PoleAtSpecialization,
)
from .qfield import QR_ONE, QR_ZERO, QRational, _coerce_qr


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val, coeffs, prec=None):
        cs = [_as_qr(c) for c in coeffs]
        if prec is not None:
            keep = prec - val
            if keep < len(cs):
                cs = cs[: max(keep, 0)]
        while cs and cs[0].is_zero():
            cs.pop(0)
            val += 1
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            val = 0
        self.val = val
        self.coeffs = tuple(cs)
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(0, (), None)

    @classmethod
    def zero_mod(cls, prec):
        return cls(0, (), prec)

    @classmethod
    def constant(cls, c, prec=None):
        return cls(0, (c,), prec)

    @classmethod
    def monomial(cls, exp, coeff=QR_ONE, prec=None):
        return cls(exp, (coeff,), prec)

    @classmethod
    def from_x_poly(cls, coeffs, val=0, prec=None):
        """Polynomial in x: coeffs[i] is the coefficient of x^(val+i)."""
        return cls(val, coeffs, prec)

    one = None  # set below

    # -- queries -----------------------------------------------------------

    def is_exact_zero(self):
        return not self.coeffs and self.prec is None

    def is_zero_window(self):
        """True when every known coefficient vanishes (exact zero included)."""
        return not self.coeffs

    def valuation(self):
        if self.coeffs:
            return self.val
        if self.prec is None:
            return math.inf
        raise IndeterminateValuation(
            f"series vanishes on its whole window (zero mod x^{self.prec})"
        )

    def coeff(self, m):
        if self.prec is not None and m >= self.prec:
            raise InsufficientPrecision(
                f"coefficient of x^{m} not guaranteed (prec {self.prec})"
            )
        i = m - self.val
        if self.coeffs and 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return QR_ZERO

    def leading_term(self):
        """(exponent, coefficient) of the first nonzero known coefficient."""
        if not self.coeffs:
            return None
        return (self.val, self.coeffs[0])

    def truncate(self, prec):
        return LaurentSeries(self.val, self.coeffs, _min_prec(self.prec, prec))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = _min_prec(self.prec, other.prec)
        if not self.coeffs:
            return LaurentSeries(other.val, other.coeffs, prec)
        if not other.coeffs:
            return LaurentSeries(self.val, self.coeffs, prec)
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        if prec is not None:
            hi = min(hi, prec)
        out = [QR_ZERO] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            m = self.val + i
            if m >= hi:
                break
            out[m - lo] = c
        for i, c in enumerate(other.coeffs):
            m = other.val + i
            if m >= hi:
                break
            out[m - lo] = out[m - lo] + c
        return LaurentSeries(lo, out, prec)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentSeries(self.val, [-c for c in self.coeffs], self.prec)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentSeries.zero()
        va = self._required_valuation("multiplication")
        vb = other._required_valuation("multiplication")
        prec = None
        if self.prec is not None:
            prec = self.prec + vb
        if other.prec is not None:
            prec = _min_prec(prec, other.prec + va)
        v = va + vb
        full = len(self.coeffs) + len(other.coeffs) - 1
        n_out = full if prec is None else min(full, prec - v)
        if n_out <= 0:
            return LaurentSeries(0, (), prec)
        out = [QR_ZERO] * n_out
        fa, ga = self.coeffs, other.coeffs
        for i, fi in enumerate(fa):
            if i >= n_out:
                break
            if fi.is_zero():
                continue
            jmax = min(len(ga), n_out - i)
            for j in range(jmax):
                gj = ga[j]
                if not gj.is_zero():
                    out[i + j] = out[i + j] + fi * gj
        return LaurentSeries(v, out, prec)

    def scale(self, c):
        c = _as_qr(c)
        if c.is_zero():
            return LaurentSeries(0, (), self.prec)
        return LaurentSeries(self.val, [c * v for v in self.coeffs], self.prec)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use invert() for negative powers")
        result = LaurentSeries.constant(QR_ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self, prec=None):
        """Multiplicative inverse; the guaranteed window shrinks by twice the
        valuation.  ``prec`` sets the target precision when self is exact."""
        if self.is_exact_zero():
            raise ZeroDivisionError("inverse of the zero series")
        v = self._required_valuation("inversion")
        if self.prec is not None:
            out_prec = self.prec - 2 * v
            if prec is not None:
                out_prec = min(out_prec, prec)
        else:
            out_prec = prec
        if len(self.coeffs) == 1 and out_prec is None:
            return LaurentSeries.monomial(-v, self.coeffs[0].inverse())
        if out_prec is None:
            raise InsufficientPrecision(
                "inverting an exact non-monomial series needs a target precision"
            )
        count = out_prec + v
        if count <= 0:
            raise InsufficientPrecision(
                f"inverse window is empty (prec {out_prec}, valuation {v})"
            )
        u = self.coeffs
        inv0 = u[0].inverse()
        g = [inv0]
        for m in range(1, count):
            s = QR_ZERO
            for i in range(1, min(m, len(u) - 1) + 1):
                ui = u[i]
                if not ui.is_zero():
                    s = s + ui * g[m - i]
            g.append(-(inv0 * s) if not s.is_zero() else QR_ZERO)
        return LaurentSeries(-v, g, out_prec)

    # -- q-difference structure --------------------------------------------

    def shift_sigma(self, k_x=0, k_sigma=0):
        """x^{k_x} * sigma_q^{k_sigma} applied to the series: the coefficient
        of x^m picks up a factor q^(k_sigma*m) and moves to x^(m+k_x)."""
        prec = None if self.prec is None else self.prec + k_x
        if not self.coeffs:
            return LaurentSeries(0, (), prec)
        if k_sigma == 0:
            return LaurentSeries(self.val + k_x, self.coeffs, prec)
        out = []
        for i, c in enumerate(self.coeffs):
            m = self.val + i
            out.append(c * QRational.q_power(k_sigma * m) if not c.is_zero() else c)
        return LaurentSeries(self.val + k_x, out, prec)

    def sigma(self, k=1):
        return self.shift_sigma(0, k)

    def shift(self, k):
        return self.shift_sigma(k, 0)

    # -- specialization ----------------------------------------------------

    def specialize_q(self, r):
        """Coefficient-wise evaluation at q = r; the result is a Laurent
        series with constant coefficients."""
        out = []
        for i, c in enumerate(self.coeffs):
            try:
                out.append(QRational.from_rational(c.evaluate(r)))
            except PoleAtSpecialization:
                raise PoleAtSpecialization(
                    f"coefficient of x^{self.val + i} has a pole at q = {r}",
                    exponent=self.val + i,
                ) from None
        return LaurentSeries(self.val, out, self.prec)

    # -- internals ---------------------------------------------------------

    def _required_valuation(self, what):
        if self.coeffs:
            return self.val
        if self.prec is None:
            return 0  # unused: exact-zero cases are handled by callers
        raise IndeterminateValuation(
            f"{what} needs the valuation of a series that vanishes on its "
            f"whole window (zero mod x^{self.prec})"
        )

    # -- comparisons -------------------------------------------------------

    def agrees_with(self, other):
        """Exact equality of all coefficients on the shared guaranteed window."""
        prec = _min_prec(self.prec, other.prec)
        los = [s.val for s in (self, other) if s.coeffs]
        if not los:
            return True
        lo = min(los)
        hi = prec
        if hi is None:
            hi = max(s.val + len(s.coeffs) for s in (self, other))
        for m in range(lo, hi):
            if self.coeff(m) != other.coeff(m):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.val == other.val
            and self.coeffs == other.coeffs
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for i, c in enumerate(self.coeffs[:6]):
                m = self.val + i
                if c.is_zero():
                    continue
                term = "1" if m == 0 else ("x" if m == 1 else f"x^{m}")
                parts.append(f"({c})*{term}" if m != 0 else f"({c})")
            if len(self.coeffs) > 6:
                parts.append("...")
            body = " + ".join(parts) or "0"
        tail = "" if self.prec is None else f" + O(x^{self.prec})"
        return f"<series {body}{tail}>"

    # -- JSON --------------------------------------------------------------

    def to_json(self):
        return {
            "val": self.val,
            "prec": "inf" if self.prec is None else self.prec,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj):
        prec = obj["prec"]
        prec = None if prec == "inf" else int(prec)
        coeffs = [QRational.from_json(c) for c in obj["coeffs"]]
        return cls(int(obj["val"]), coeffs, prec)


LaurentSeries.one = classmethod(lambda cls: cls.constant(QR_ONE))


def _as_qr(c):
    if isinstance(c, QRational):
        return c
    r = _coerce_qr(c)
    if r is NotImplemented:
        raise TypeError(f"cannot use {type(c).__name__} as a series coefficient")
    return r


def expand_rational(num, den, prec):
    """Laurent expansion at x = 0 of num/den to absolute precision ``prec``.

    ``num`` and ``den`` are polynomials in x given as coefficient sequences
    (index = exponent) over Q(q), or ready-made exact series.
    """
    if not isinstance(num, LaurentSeries):
        num = LaurentSeries.from_x_poly(num)
    if not isinstance(den, LaurentSeries):
        den = LaurentSeries.from_x_poly(den)
    if den.is_zero_window():
        raise ZeroDivisionError("zero denominator")
    v_num = num.valuation() if num.coeffs else 0
    inv = den.invert(prec=prec - v_num)
    return (num * inv).truncate(prec)
