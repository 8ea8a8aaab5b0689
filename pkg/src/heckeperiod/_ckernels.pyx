# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 integer kernels.

Same API and results as ``_pykernels``.  Every multiply/add that could leave
the int64 range goes through a checked builtin and raises ``OverflowError``;
callers then retry with the pure-Python kernels.
"""

from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int hp_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int hp_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int hp_mul(long long a, long long b, long long *r) nogil
    int hp_add(long long a, long long b, long long *r) nogil

BACKEND = "compiled"


cdef inline int64_t cmul(int64_t a, int64_t b) except? -1:
    cdef long long r
    if hp_mul(a, b, &r):
        raise OverflowError("int64 overflow in multiply")
    return r


cdef inline int64_t cadd(int64_t a, int64_t b) except? -1:
    cdef long long r
    if hp_add(a, b, &r):
        raise OverflowError("int64 overflow in add")
    return r


cdef inline int64_t floordiv(int64_t a, int64_t b):
    # b > 0
    cdef int64_t q = a / b
    if (a % b) != 0 and (a < 0):
        q -= 1
    return q


cdef inline int64_t floormod(int64_t a, int64_t b):
    # b > 0
    cdef int64_t r = a % b
    if r < 0:
        r += b
    return r


cdef int64_t cgcd(int64_t a, int64_t b):
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t modinv(int64_t a, int64_t m) except -1:
    # inverse of a mod m, m >= 2, gcd(a, m) == 1
    cdef int64_t old_r = floormod(a, m), r = m
    cdef int64_t old_s = 1, s = 0, q, t
    while r:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    if old_r != 1:
        raise ValueError("not invertible")
    return floormod(old_s, m)


def farey_pairs(int64_t n):
    if n < 1:
        raise ValueError("level must be >= 1")
    cdef int64_t a = 0, b = 1, c = 1, d = n, k, na, nb
    unit = [(0, 1)]
    while c <= n:
        k = (n + b) / d
        na = cadd(cmul(k, c), -a)
        nb = cadd(cmul(k, d), -b)
        a, b, c, d = c, d, na, nb
        unit.append((a, b))
    positive = unit + [(v, u) for (u, v) in reversed(unit[:-1])]
    negative = [(-u, v) for (u, v) in reversed(positive[1:])]
    return negative + positive


def left_neighbor_scan(int64_t p, int64_t r, int64_t level):
    cdef int64_t best_num = -1, best_den = 0, v, u, g
    for v in range(1, level + 1):
        if r == 0:
            u = level
        else:
            u = floordiv(cadd(cmul(p, v), -1), r)
            if u > level:
                u = level
        if u < -level:
            continue
        if best_den == 0 or cmul(u, best_den) > cmul(best_num, v):
            g = cgcd(u, v)
            best_num = u / g
            best_den = v / g
    return best_num, best_den


cdef int left_neighbor_fast_c(int64_t p, int64_t r, int64_t level,
                              int64_t *xo, int64_t *yo) except -1:
    cdef int64_t y0, ymax, y
    if r == 0:
        xo[0] = level
        yo[0] = 1
        return 0
    if r == 1:
        y0 = 0
    else:
        y0 = modinv(p, r)
    if p > 0:
        ymax = cadd(cmul(level, r), 1) / p
    elif p < 0:
        ymax = cadd(cmul(level, r), -1) / (-p)
    else:
        ymax = level
    if ymax > level:
        ymax = level
    y = ymax - floormod(ymax - y0, r)
    if y < 0:
        raise ArithmeticError("no left neighbour for %d/%d at level %d" % (p, r, level))
    if y == 0:
        xo[0] = -1
        yo[0] = 0
        return 0
    xo[0] = floordiv(cadd(cmul(p, y), -1), r)
    yo[0] = y
    return 0


def left_neighbor_fast(int64_t p, int64_t r, int64_t level):
    cdef int64_t x, y
    left_neighbor_fast_c(p, r, level, &x, &y)
    return x, y


cdef inline int64_t level_c(int64_t p, int64_t r):
    if r == 0 or (p == 0 and r == 1):
        return 0
    return p if p > r else (-p if -p > r else r)


def level_of(int64_t p, int64_t r):
    return level_c(p, r)


cdef int ln_c(int64_t p, int64_t r, int64_t *xo, int64_t *yo) except -1:
    cdef int64_t lev
    if r == 0 and p < 0:
        raise ValueError("-oo has no left neighbour")
    lev = level_c(p, r)
    if lev == 0:
        if r == 0:
            xo[0] = 0
            yo[0] = 1
        else:
            xo[0] = -1
            yo[0] = 0
        return 0
    return left_neighbor_fast_c(p, r, lev, xo, yo)


def left_neighbor_pair(int64_t p, int64_t r):
    cdef int64_t x, y
    ln_c(p, r, &x, &y)
    return x, y


def lns_pairs(int64_t p, int64_t r):
    cdef int64_t x = p, y = r, nx, ny
    chain = [(p, r)]
    while not (y == 0 and x < 0):
        ln_c(x, y, &nx, &ny)
        x = nx
        y = ny
        chain.append((x, y))
    chain.reverse()
    return chain


def s_m_quads(int64_t m):
    cdef int64_t a, b, c, d, ad, rem
    out = []
    if m > 3037000499:
        raise OverflowError("m too large for int64 kernel")
    for a in range(1, m + 1):
        for d in range(1, m + 2 - a):
            ad = a * d
            if ad < m:
                continue
            for c in range(0, a):
                if c == 0:
                    if ad == m:
                        for b in range(d):
                            out.append((a, b, 0, d))
                    continue
                rem = ad - m
                if rem % c:
                    continue
                b = rem / c
                if b < d:
                    out.append((a, b, c, d))
    out.sort()
    return out
