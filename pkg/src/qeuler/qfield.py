"""Exact arithmetic in the rational function field Q(q).

``QPolynomial`` is a dense polynomial in q with arbitrary-precision rational
coefficients; ``QRational`` is a reduced ratio of two of them with a monic
denominator, so equality is structural.  These are the coefficients of every
series in the package.
"""

import math

from . import kernels
from .errors import PoleAtSpecialization

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ


def _fmt_rat(c):
    return f"{c.numerator}/{c.denominator}"


def _parse_rat(s):
    if "/" in s:
        a, b = s.split("/")
        return QQ(int(a), int(b))
    return QQ(int(s))


class QPolynomial:
    """Dense polynomial in q over Q; index = degree, trailing zeros stripped."""

    __slots__ = ("coeffs", "_ints", "_prim")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, type(QQ(0))) else QQ(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._ints = None
        self._prim = None

    @classmethod
    def _raw(cls, cs):
        """Wrap a fresh kernel result without per-coefficient conversion.

        The coefficients may stay plain ints; every consumer only relies on
        the rational-number protocol (numerator/denominator, comparisons),
        except division, which converts explicitly.
        """
        while cs and not cs[-1]:
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        p._ints = None
        p._prim = None
        return p

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def _int_coeffs(self):
        """Coefficient list as ints, or None if some denominator is not 1."""
        if self._ints is None:
            if all(c.denominator == 1 for c in self.coeffs):
                self._ints = [int(c) for c in self.coeffs]
            else:
                self._ints = False
        return self._ints if self._ints is not False else None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return QPolynomial._raw(
            kernels.poly_add(list(self.coeffs), list(other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return QPolynomial._raw(
            kernels.poly_sub(list(self.coeffs), list(other.coeffs))
        )

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QPolynomial._raw([-c for c in self.coeffs])

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        ia = self._int_coeffs()
        ib = other._int_coeffs()
        if ia is not None and ib is not None:
            return QPolynomial._raw(kernels.poly_mul_int(ia, ib))
        return QPolynomial._raw(
            kernels.poly_mul_generic(list(self.coeffs), list(other.coeffs))
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        q, r = kernels.poly_divmod(
            [QQ(c) for c in self.coeffs], [QQ(c) for c in other.coeffs]
        )
        return QPolynomial._raw(q), QPolynomial._raw(r)

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def scale(self, c):
        c = QQ(c)
        return QPolynomial._raw([v * c for v in self.coeffs])

    # -- misc --------------------------------------------------------------

    def evaluate(self, r):
        r = QQ(r)
        acc = QQ(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({self!s})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*q" if c != 1 else "q")
            else:
                parts.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce_poly(v):
    if isinstance(v, QPolynomial):
        return v
    if isinstance(v, (int, type(QQ(0)))):
        return QPolynomial([v])
    return NotImplemented


POLY_ZERO = QPolynomial()
POLY_ONE = QPolynomial([1])
POLY_Q = QPolynomial([0, 1])


def poly_gcd(a, b):
    """Primitive gcd over Q, computed on integer primitive parts."""
    ia = _primitive_ints(a)
    ib = _primitive_ints(b)
    return QPolynomial._raw(kernels.poly_gcd_int(ia, ib))


def _primitive_ints(p):
    """Integer primitive part of a rational-coefficient polynomial (cached)."""
    if p._prim is not None:
        return p._prim
    if p.is_zero():
        p._prim = []
        return p._prim
    ints = p._int_coeffs()
    if ints is None:
        den_lcm = 1
        for c in p.coeffs:
            den_lcm = math.lcm(den_lcm, int(c.denominator))
        ints = [int(c * den_lcm) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    p._prim = ints
    return ints


class QRational:
    """Reduced element of Q(q): gcd(num, den) = 1, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE, _reduced=False):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den is NotImplemented or num is NotImplemented:
            raise TypeError("QRational components must be polynomials in q")
        if _reduced:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(q)")
        if num.is_zero():
            self.num = POLY_ZERO
            self.den = POLY_ONE
            return
        if den.degree == 0:
            c = den.coeffs[0]
            self.num = num if c == 1 else num.scale(QQ(1) / c)
            self.den = POLY_ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = _field_exact_div(num, g)
            den = _field_exact_div(den, g)
        lc = den.leading
        if lc != 1:
            inv = QQ(1) / lc
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, r):
        return cls(QPolynomial([QQ(r)]), POLY_ONE, _reduced=True)

    @classmethod
    def q_power(cls, k):
        """q^k for any integer k (negative k gives monomial denominator)."""
        if k >= 0:
            return cls(QPolynomial([0] * k + [1]), POLY_ONE, _reduced=True)
        return cls(POLY_ONE, QPolynomial([0] * (-k) + [1]), _reduced=True)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return _qr_add(self, other, False)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return _qr_add(self, other, True)

    def __rsub__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QRational(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return _qr_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return _qr_mul(self, other.inverse())

    def __rtruediv__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        # already coprime; only the monic normalization is redone
        return _qr_finish(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        # powers of a reduced fraction stay reduced, monic stays monic
        return QRational(self.num**n, self.den**n, _reduced=True)

    # -- specialization ----------------------------------------------------

    def evaluate(self, r):
        """Exact value at q = r; raises at poles of the reduced form."""
        d = self.den.evaluate(r)
        if not d:
            raise PoleAtSpecialization(f"pole of Q(q) element at q = {r}")
        return self.num.evaluate(r) / d

    # -- misc --------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_qr(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"QRational({self!s})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    # -- JSON --------------------------------------------------------------

    def to_json(self):
        return {
            "num": [_fmt_rat(c) for c in self.num.coeffs],
            "den": [_fmt_rat(c) for c in self.den.coeffs],
        }

    @classmethod
    def from_json(cls, obj):
        num = QPolynomial([_parse_rat(s) for s in obj["num"]])
        den = QPolynomial([_parse_rat(s) for s in obj["den"]])
        return cls(num, den)


def _qr_finish(num, den):
    """Build a QRational from a coprime num/den pair, normalizing the
    denominator to be monic."""
    if num.is_zero():
        return QRational(POLY_ZERO, POLY_ONE, _reduced=True)
    if den.degree == 0:
        c = den.coeffs[0]
        return QRational(
            num if c == 1 else num.scale(QQ(1) / c), POLY_ONE, _reduced=True
        )
    lc = den.leading
    if lc != 1:
        inv = QQ(1) / lc
        num = num.scale(inv)
        den = den.scale(inv)
    return QRational(num, den, _reduced=True)


def _qr_add(a, b, sub):
    n1, d1 = a.num, a.den
    n2, d2 = b.num, b.den
    if sub:
        n2 = -n2
    if d1.is_one():
        if d2.is_one():
            return QRational(n1 + n2, POLY_ONE, _reduced=True)
        return _qr_finish(n1 * d2 + n2, d2)
    if d2.is_one():
        return _qr_finish(n1 + n2 * d1, d1)
    if d1 == d2:
        num = n1 + n2
        g = poly_gcd(num, d1)
        if g.degree > 0:
            return _qr_finish(_field_exact_div(num, g), _field_exact_div(d1, g))
        return _qr_finish(num, d1)
    g = poly_gcd(d1, d2)
    if g.degree == 0:
        # coprime denominators: the sum is automatically reduced
        return _qr_finish(n1 * d2 + n2 * d1, d1 * d2)
    d2g = _field_exact_div(d2, g)
    num = n1 * d2g + n2 * _field_exact_div(d1, g)
    den = d1 * d2g
    # any surviving common factor divides g
    h = poly_gcd(num, g)
    if h.degree > 0:
        num = _field_exact_div(num, h)
        den = _field_exact_div(den, h)
    return _qr_finish(num, den)


def _qr_mul(a, b):
    n1, d1 = a.num, a.den
    n2, d2 = b.num, b.den
    if n1.is_zero() or n2.is_zero():
        return QRational(POLY_ZERO, POLY_ONE, _reduced=True)
    if d1.is_one() and d2.is_one():
        return QRational(n1 * n2, POLY_ONE, _reduced=True)
    # cross-reduction keeps the gcd operands small and the result reduced
    if not d2.is_one():
        g1 = poly_gcd(n1, d2)
        if g1.degree > 0:
            n1 = _field_exact_div(n1, g1)
            d2 = _field_exact_div(d2, g1)
    if not d1.is_one():
        g2 = poly_gcd(n2, d1)
        if g2.degree > 0:
            n2 = _field_exact_div(n2, g2)
            d1 = _field_exact_div(d1, g2)
    return _qr_finish(n1 * n2, d1 * d2)


def _field_exact_div(p, g):
    q, r = divmod(p, g)
    if not r.is_zero():
        raise ValueError("gcd does not divide its argument")
    return q


def _coerce_qr(v):
    if isinstance(v, QRational):
        return v
    if isinstance(v, QPolynomial):
        return QRational(v, POLY_ONE, _reduced=True)
    if isinstance(v, (int, type(QQ(0)))):
        return QRational.from_rational(v)
    return NotImplemented


QR_ZERO = QRational.from_rational(0)
QR_ONE = QRational.from_rational(1)
QR_Q = QRational(POLY_Q, POLY_ONE, _reduced=True)
# q - 1 shows up in every delta-form computation
QR_QM1 = QRational(QPolynomial([-1, 1]), POLY_ONE, _reduced=True)
