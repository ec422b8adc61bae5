"""Pure-Python polynomial kernels.

Dense univariate polynomials are plain lists, coefficient of degree i at
index i, trailing zeros stripped.  These routines are the hot inner loops of
the whole package (every series coefficient is a ratio of polynomials in q);
``qeuler.kernels._speedups`` provides a Cython build of the same API and is
preferred at import time when present.

Integer polynomial products use Kronecker substitution (pack into one big
integer, multiply, unpack) once the operands are large enough; big-integer
multiplication is delegated to GMP when gmpy2 is importable.
"""

import math

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

# Below this many nonzero-term pairs, schoolbook convolution beats packing.
SCHOOLBOOK_CUTOFF = 4096


def poly_trim(c):
    """Strip trailing zeros in place; return the list."""
    while c and not c[-1]:
        c.pop()
    return c


def _pack(coeffs, nbytes):
    buf = bytearray(len(coeffs) * nbytes)
    for i, v in enumerate(coeffs):
        if v:
            buf[i * nbytes : i * nbytes + nbytes] = v.to_bytes(nbytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(n, count, nbytes):
    buf = int(n).to_bytes(count * nbytes, "little")
    return [
        int.from_bytes(buf[i * nbytes : i * nbytes + nbytes], "little")
        for i in range(count)
    ]


def _kronecker_mul(a, b):
    """Signed integer polynomial product via four nonnegative packed products."""
    la, lb = len(a), len(b)
    amax = max(abs(v) for v in a)
    bmax = max(abs(v) for v in b)
    bits = (
        amax.bit_length()
        + bmax.bit_length()
        + min(la, lb).bit_length()
        + 2
    )
    nbytes = (bits + 7) // 8
    ap = _pack([v if v > 0 else 0 for v in a], nbytes)
    an = _pack([-v if v < 0 else 0 for v in a], nbytes)
    bp = _pack([v if v > 0 else 0 for v in b], nbytes)
    bn = _pack([-v if v < 0 else 0 for v in b], nbytes)
    ap, an, bp, bn = _bigint(ap), _bigint(an), _bigint(bp), _bigint(bn)
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    count = la + lb - 1
    pc = _unpack(pos, count, nbytes)
    nc = _unpack(neg, count, nbytes)
    return poly_trim([p - n for p, n in zip(pc, nc)])


def poly_mul_int(a, b):
    """Product of two integer polynomials (lists of int)."""
    nza = [(i, v) for i, v in enumerate(a) if v]
    nzb = [(i, v) for i, v in enumerate(b) if v]
    if not nza or not nzb:
        return []
    if len(nza) * len(nzb) <= SCHOOLBOOK_CUTOFF:
        res = [0] * (len(a) + len(b) - 1)
        for i, u in nza:
            for j, v in nzb:
                res[i + j] += u * v
        return poly_trim(res)
    return _kronecker_mul(a, b)


def poly_mul_generic(a, b):
    """Product with arbitrary exact-number coefficients (sparse schoolbook)."""
    nza = [(i, v) for i, v in enumerate(a) if v]
    nzb = [(i, v) for i, v in enumerate(b) if v]
    if not nza or not nzb:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, u in nza:
        for j, v in nzb:
            res[i + j] += u * v
    return poly_trim(res)


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, v in enumerate(b):
        res[i] = res[i] + v
    return poly_trim(res)


def poly_sub(a, b):
    res = list(a)
    if len(b) > len(res):
        res.extend([0] * (len(b) - len(res)))
    for i, v in enumerate(b):
        res[i] = res[i] - v
    return poly_trim(res)


def poly_divmod(a, b):
    """Quotient and remainder over a field (coefficients support true division)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[db + k]
        if c:
            c = c / lead
            quot[k] = c
            for i in range(db):
                rem[i + k] = rem[i + k] - c * b[i]
            rem[db + k] = 0
    return poly_trim(quot), poly_trim(rem)


def _content(a):
    g = 0
    for v in a:
        g = math.gcd(g, int(v))
        if g == 1:
            break
    return g


def _primitive(a):
    g = _content(a)
    if g in (0, 1):
        return list(a)
    return [v // g for v in a]


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials, deg(a) >= deg(b)."""
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    while len(rem) >= len(b):
        c = rem[-1]
        k = len(rem) - len(b)
        rem = [lead * v for v in rem]
        for i in range(db):
            rem[i + k] -= c * b[i]
        rem.pop()
        poly_trim(rem)
        if not rem:
            break
    return rem


# Primes used for the cheap modular gcd-degree probe; products of two
# residues stay below 2**62.
_PROBE_PRIMES = (2147483647, 2147483629, 2147483587)


def _gcd_degree_mod(a, b, p):
    """Degree of gcd(a mod p, b mod p), or -1 when a leading term vanishes.

    The reduction of the integer gcd mod p divides this gcd, so a result of
    0 proves the primitive gcd is constant.
    """
    if int(a[-1]) % p == 0 or int(b[-1]) % p == 0:
        return -1
    fa = [int(v) % p for v in a]
    fb = [int(v) % p for v in b]
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        inv = pow(fb[-1], p - 2, p)
        db = len(fb) - 1
        for k in range(len(fa) - len(fb), -1, -1):
            c = fa[db + k]
            if c:
                c = c * inv % p
                for i in range(db):
                    fa[i + k] = (fa[i + k] - c * fb[i]) % p
                fa[db + k] = 0
        while fa and not fa[-1]:
            fa.pop()
        fa, fb = fb, fa
    return len(fa) - 1


def _poly_eval_int(a, x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


def _exact_div_int(a, b):
    """Exact quotient of integer polynomials, or None if not divisible."""
    if len(a) < len(b):
        return None
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[db + k]
        if c:
            if c % lead:
                return None
            c //= lead
            quot[k] = c
            for i in range(db):
                rem[i + k] -= c * b[i]
            rem[db + k] = 0
    return quot if not any(rem) else None


def _prs_gcd(a, b):
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _primitive(_pseudo_rem(a, b))
        a, b = b, r
        if len(a) < len(b):
            a, b = b, a
    return a


def poly_gcd_int(a, b):
    """Primitive gcd of integer polynomials, positive leading coefficient.

    Heuristic gcd: evaluate at a large point, take the integer gcd, lift it
    back through balanced base-xi digits, and verify by exact division.
    Falls back to the primitive-remainder sequence if the point is unlucky.
    """
    a = _primitive(a)
    b = _primitive(b)
    if not a or not b:
        g = a or b
        return [-v for v in g] if g and g[-1] < 0 else list(g)
    if len(a) == 1 or len(b) == 1:
        return [1]
    amax = max(abs(v) for v in a)
    bmax = max(abs(v) for v in b)
    if len(a) + len(b) > 24 or min(amax, bmax).bit_length() > 96:
        # The heuristic needs several attempts when the evaluation point is
        # unlucky; rule out the common coprime case with one modular probe.
        for p in _PROBE_PRIMES:
            d = _gcd_degree_mod(a, b, p)
            if d == 0:
                return [1]
            if d > 0:
                break
    xi = 2 * min(amax, bmax) + 29
    g = None
    for _ in range(6):
        point = _bigint(xi)
        ea = _poly_eval_int(a, point)
        eb = _poly_eval_int(b, point)
        h = math.gcd(int(ea), int(eb))
        cand = []
        while h:
            d = h % xi
            if 2 * d > xi:
                d -= xi
            cand.append(int(d))
            h = (h - d) // xi
        cand = _primitive(poly_trim(cand))
        if cand:
            if len(cand) == 1:
                g = [1]
                break
            if _exact_div_int(a, cand) is not None and _exact_div_int(b, cand) is not None:
                g = cand
                break
        xi = xi * 73794 // 27011 + 29
    if g is None:
        g = _prs_gcd(a, b)
    if g and g[-1] < 0:
        g = [-v for v in g]
    return g
