# cython: language_level=3
"""Compiled polynomial kernels.

Same API as ``qeuler.kernels._pure``; the convolution, division and
pseudo-remainder loops are compiled, coefficient arithmetic stays on exact
Python objects (int / gmpy2.mpz / mpq).
"""

import math

from libc.stdlib cimport free, malloc

try:
    from gmpy2 import mpz as _bigint
except ImportError:
    _bigint = int

SCHOOLBOOK_CUTOFF = 4096


cpdef list poly_trim(list c):
    while c and not c[-1]:
        c.pop()
    return c


cdef object _pack(list coeffs, Py_ssize_t nbytes):
    cdef Py_ssize_t i
    cdef object v
    buf = bytearray(len(coeffs) * nbytes)
    for i in range(len(coeffs)):
        v = coeffs[i]
        if v:
            buf[i * nbytes : i * nbytes + nbytes] = v.to_bytes(nbytes, "little")
    return int.from_bytes(buf, "little")


cdef list _unpack(object n, Py_ssize_t count, Py_ssize_t nbytes):
    cdef Py_ssize_t i
    buf = int(n).to_bytes(count * nbytes, "little")
    return [
        int.from_bytes(buf[i * nbytes : i * nbytes + nbytes], "little")
        for i in range(count)
    ]


cdef list _kronecker_mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), count, nbytes, bits
    amax = max(abs(v) for v in a)
    bmax = max(abs(v) for v in b)
    bits = (
        amax.bit_length()
        + bmax.bit_length()
        + (min(la, lb)).bit_length()
        + 2
    )
    nbytes = (bits + 7) // 8
    ap = _pack([v if v > 0 else 0 for v in a], nbytes)
    an = _pack([-v if v < 0 else 0 for v in a], nbytes)
    bp = _pack([v if v > 0 else 0 for v in b], nbytes)
    bn = _pack([-v if v < 0 else 0 for v in b], nbytes)
    ap = _bigint(ap)
    an = _bigint(an)
    bp = _bigint(bp)
    bn = _bigint(bn)
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    count = la + lb - 1
    pc = _unpack(pos, count, nbytes)
    nc = _unpack(neg, count, nbytes)
    return poly_trim([p - n for p, n in zip(pc, nc)])


cpdef list poly_mul_int(list a, list b):
    cdef Py_ssize_t i, j
    cdef list nza = [(i, v) for i, v in enumerate(a) if v]
    cdef list nzb = [(i, v) for i, v in enumerate(b) if v]
    if not nza or not nzb:
        return []
    if len(nza) * len(nzb) <= SCHOOLBOOK_CUTOFF:
        res = [0] * (len(a) + len(b) - 1)
        for i, u in nza:
            for j, v in nzb:
                res[i + j] += u * v
        return poly_trim(res)
    return _kronecker_mul(a, b)


cpdef list poly_mul_generic(list a, list b):
    cdef Py_ssize_t i, j
    cdef list nza = [(i, v) for i, v in enumerate(a) if v]
    cdef list nzb = [(i, v) for i, v in enumerate(b) if v]
    if not nza or not nzb:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, u in nza:
        for j, v in nzb:
            res[i + j] += u * v
    return poly_trim(res)


cpdef list poly_add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list res = list(a)
    for i in range(len(b)):
        res[i] = res[i] + b[i]
    return poly_trim(res)


cpdef list poly_sub(list a, list b):
    cdef Py_ssize_t i
    cdef list res = list(a)
    if len(b) > len(res):
        res.extend([0] * (len(b) - len(res)))
    for i in range(len(b)):
        res[i] = res[i] - b[i]
    return poly_trim(res)


cpdef tuple poly_divmod(list a, list b):
    cdef Py_ssize_t i, k, db
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    cdef list rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    cdef list quot = [0] * (len(a) - db)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[db + k]
        if c:
            c = c / lead
            quot[k] = c
            for i in range(db):
                rem[i + k] = rem[i + k] - c * b[i]
            rem[db + k] = 0
    return poly_trim(quot), poly_trim(rem)


cdef object _content(list a):
    g = 0
    for v in a:
        g = math.gcd(g, int(v))
        if g == 1:
            break
    return g


cdef list _primitive(list a):
    g = _content(a)
    if g == 0 or g == 1:
        return list(a)
    return [v // g for v in a]


cdef list _pseudo_rem(list a, list b):
    cdef Py_ssize_t i, k, db
    cdef list rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    while len(rem) >= len(b):
        c = rem[-1]
        k = len(rem) - len(b)
        rem = [lead * v for v in rem]
        for i in range(db):
            rem[i + k] = rem[i + k] - c * b[i]
        rem.pop()
        poly_trim(rem)
        if not rem:
            break
    return rem


# Primes used for the cheap modular gcd-degree probe; products of two
# residues stay below 2**62.
_PROBE_PRIMES = (2147483647, 2147483629, 2147483587)


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _gcd_degree_mod(list a, list b, long long p):
    """Degree of gcd(a mod p, b mod p), or -1 when a leading term vanishes.

    The reduction of the integer gcd mod p divides this gcd, so a result of
    0 proves the primitive gcd is constant.
    """
    cdef Py_ssize_t i, k, db, na, nb, na2
    cdef long long c, inv, v
    cdef long long *fa
    cdef long long *fb
    cdef long long *tmp
    if int(a[-1]) % p == 0 or int(b[-1]) % p == 0:
        return -1
    if len(a) < len(b):
        a, b = b, a
    na = len(a)
    nb = len(b)
    fa = <long long *> malloc(na * sizeof(long long))
    fb = <long long *> malloc(nb * sizeof(long long))
    if fa == NULL or fb == NULL:
        if fa != NULL:
            free(fa)
        if fb != NULL:
            free(fb)
        raise MemoryError()
    for i in range(na):
        fa[i] = int(a[i]) % p
    for i in range(nb):
        fb[i] = int(b[i]) % p
    while nb:
        inv = _inv_mod(fb[nb - 1], p)
        db = nb - 1
        for k in range(na - nb, -1, -1):
            c = fa[db + k]
            if c:
                c = c * inv % p
                for i in range(db):
                    v = (fa[i + k] - c * fb[i]) % p
                    if v < 0:
                        v += p
                    fa[i + k] = v
                fa[db + k] = 0
        na2 = db
        while na2 > 0 and fa[na2 - 1] == 0:
            na2 -= 1
        tmp = fa
        fa = fb
        fb = tmp
        na = nb
        nb = na2
    free(fb)
    db = na - 1
    free(fa)
    return db


cdef object _poly_eval_int(list a, object x):
    cdef Py_ssize_t i
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


cdef _exact_div_int(list a, list b):
    """Exact quotient of integer polynomials, or None if not divisible."""
    cdef Py_ssize_t i, k, db
    if len(a) < len(b):
        return None
    cdef list rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    cdef list quot = [0] * (len(a) - db)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[db + k]
        if c:
            if c % lead:
                return None
            c = c // lead
            quot[k] = c
            for i in range(db):
                rem[i + k] = rem[i + k] - c * b[i]
            rem[db + k] = 0
    return quot if not any(rem) else None


cdef object _max_abs(list a):
    m = 0
    for v in a:
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


cdef list _neg_list(list a):
    cdef list out = []
    for v in a:
        out.append(-v)
    return out


cdef list _prs_gcd(list a, list b):
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _primitive(_pseudo_rem(a, b))
        a, b = b, r
        if len(a) < len(b):
            a, b = b, a
    return a


cpdef list poly_gcd_int(list a, list b):
    """Primitive gcd of integer polynomials via heuristic gcd (evaluate,
    integer gcd, lift through balanced digits, verify), PRS fallback."""
    cdef Py_ssize_t attempt
    a = _primitive(a)
    b = _primitive(b)
    if not a or not b:
        g0 = a if a else b
        if g0 and g0[-1] < 0:
            return _neg_list(g0)
        return list(g0)
    if len(a) == 1 or len(b) == 1:
        return [1]
    amax = _max_abs(a)
    bmax = _max_abs(b)
    cdef Py_ssize_t d
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
    for attempt in range(6):
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
        g = _neg_list(g)
    return g
