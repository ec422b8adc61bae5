"""The non-commutative ring of linear q-difference operators.

An operator is a finite sum of terms a_k * sigma^k with Laurent-series
coefficients and shifts k >= 0, kept in sigma-expanded normal form.
Composition uses the twist (a sigma^j)(b sigma^k) = a * sigma^j(b) sigma^(j+k).
"""

from .qfield import QR_ONE, QR_QM1, QRational
from .series import LaurentSeries


class QDiffOperator:
    __slots__ = ("terms",)

    def __init__(self, terms):
        """terms: mapping shift -> LaurentSeries coefficient."""
        clean = {}
        for k, a in terms.items():
            if k < 0:
                raise ValueError("negative shifts are not supported")
            if a.is_exact_zero():
                continue
            clean[int(k)] = a
        self.terms = dict(sorted(clean.items()))

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls):
        return cls({0: LaurentSeries.constant(QR_ONE)})

    @classmethod
    def scalar(cls, s):
        """Multiplication-by-s operator (order 0)."""
        if isinstance(s, QRational):
            s = LaurentSeries.constant(s)
        return cls({0: s})

    @classmethod
    def sigma_power(cls, k, coeff=None):
        if coeff is None:
            coeff = LaurentSeries.constant(QR_ONE)
        return cls({k: coeff})

    @classmethod
    def from_delta(cls, coeffs):
        """Expand sum_j b_j * delta^j into sigma-normal form, where
        delta = (sigma - 1)/(q - 1) and b_j are series coefficients."""
        c = QR_ONE / QR_QM1
        delta = cls(
            {
                1: LaurentSeries.constant(c),
                0: LaurentSeries.constant(-c),
            }
        )
        total = cls({})
        power = cls.identity()
        for j, b in enumerate(coeffs):
            if j > 0:
                power = delta.compose(power)
            if isinstance(b, QRational):
                b = LaurentSeries.constant(b)
            if not b.is_exact_zero():
                total = total + cls.scalar(b).compose(power)
        return total

    # -- structure ---------------------------------------------------------

    @property
    def order(self):
        if not self.terms:
            return 0
        return max(self.terms)

    def coeff(self, k):
        return self.terms.get(k, LaurentSeries.zero())

    def __add__(self, other):
        terms = dict(self.terms)
        for k, b in other.terms.items():
            terms[k] = terms[k] + b if k in terms else b
        return QDiffOperator(terms)

    def __sub__(self, other):
        return self + other.scale(-QR_ONE)

    def scale(self, c):
        if isinstance(c, QRational):
            return QDiffOperator({k: a.scale(c) for k, a in self.terms.items()})
        return QDiffOperator({k: c * a for k, a in self.terms.items()})

    # -- action and composition --------------------------------------------

    def apply(self, f):
        out = LaurentSeries.zero()
        for k, a in self.terms.items():
            if not a.coeffs and a.prec is not None:
                # a vanishes on its whole window: the product is zero up to
                # the window bound shifted by (a lower bound on) f's valuation
                if f.is_exact_zero():
                    continue
                val_f = f.prec if f.is_zero_window() else f.val
                out = out + LaurentSeries.zero_mod(a.prec + val_f)
                continue
            out = out + a * f.sigma(k)
        return out

    def compose(self, other):
        terms = {}
        for j, a in self.terms.items():
            for k, b in other.terms.items():
                t = a * b.sigma(j)
                s = j + k
                terms[s] = terms[s] + t if s in terms else t
        return QDiffOperator(terms)

    def to_delta_coeffs(self):
        """Inverse of from_delta: coefficients b_j with sum b_j delta^j = self.

        Solved top-down: delta^j has sigma-leading coefficient (q-1)^(-j)."""
        residual = self
        n = residual.order
        out = [LaurentSeries.zero()] * (n + 1)
        c = QR_ONE / QR_QM1
        delta = QDiffOperator(
            {
                1: LaurentSeries.constant(c),
                0: LaurentSeries.constant(-c),
            }
        )
        powers = [QDiffOperator.identity()]
        for _ in range(n):
            powers.append(delta.compose(powers[-1]))
        for j in range(n, -1, -1):
            top = residual.coeff(j)
            if top.is_zero_window() and top.prec is None:
                continue
            b = top.scale(QR_QM1**j)
            out[j] = b
            residual = residual - QDiffOperator.scalar(b).compose(powers[j])
        return out

    # -- comparisons -------------------------------------------------------

    def agrees_with(self, other):
        """Coefficient-wise series agreement on shared windows."""
        shifts = set(self.terms) | set(other.terms)
        for k in shifts:
            a = self.terms.get(k)
            b = other.terms.get(k)
            if a is None or b is None:
                present = a if a is not None else b
                if present.coeffs:
                    return False
                continue
            if not a.agrees_with(b):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "<operator 0>"
        parts = [f"[{a!r}]*s^{k}" for k, a in self.terms.items()]
        return "<operator " + " + ".join(parts) + ">"

    # -- JSON --------------------------------------------------------------

    def to_json(self):
        return {
            "terms": [
                {"shift": k, "coeff": a.to_json()} for k, a in self.terms.items()
            ]
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            {
                int(t["shift"]): LaurentSeries.from_json(t["coeff"])
                for t in obj["terms"]
            }
        )
