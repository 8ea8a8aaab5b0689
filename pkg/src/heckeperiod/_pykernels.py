"""Pure-Python integer kernels.

Reference implementation of everything in ``_ckernels.pyx``.  Python ints
never overflow, so this module is also the promotion target when the
compiled int64 kernels raise ``OverflowError``.

Fractions are passed around as ``(num, den)`` pairs in lowest terms with
``den >= 0``; ``(-1, 0)`` and ``(1, 0)`` are the two infinities.
"""

from math import gcd

BACKEND = "python"


def _standard_farey(n):
    """Standard Farey fractions of order n in [0, 1], ascending."""
    a, b, c, d = 0, 1, 1, n
    out = [(0, 1)]
    while c <= n:
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        out.append((a, b))
    return out


def farey_pairs(n):
    """Extended Farey sequence of level ``n >= 1``.

    All reduced u/v with |u| <= n and 0 <= v <= n, ascending, from -1/0 to
    1/0.  Built from the standard Farey sequence on [0, 1], its reciprocals
    on [1, oo) and the mirror image on the negative axis; no sorting.
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    unit = _standard_farey(n)  # 0/1 .. 1/1
    positive = unit + [(v, u) for (u, v) in reversed(unit[:-1])]  # 0/1 .. 1/0
    negative = [(-u, v) for (u, v) in reversed(positive[1:])]  # -1/0 .. -1/n
    return negative + positive


def left_neighbor_scan(p, r, level):
    """Largest element of the level-``level`` Farey set strictly below p/r.

    Scans every admissible denominator once.  ``level >= 1`` and p/r must be
    finite or +oo.
    """
    best_num, best_den = -1, 0  # -oo is always admissible and below q
    for v in range(1, level + 1):
        if r == 0:
            u = level  # q = +oo
        else:
            # largest u with u/v < p/r, i.e. u*r < p*v
            u = (p * v - 1) // r
            if u > level:
                u = level
        if u < -level:
            continue
        # compare u/v > best
        if best_den == 0 or u * best_den > best_num * v:
            g = gcd(u, v)
            best_num, best_den = u // g, v // g
    return best_num, best_den


def left_neighbor_fast(p, r, level):
    """Same result as :func:`left_neighbor_scan` via the Farey determinant.

    The left neighbour x/y of p/r satisfies p*y - r*x = 1, and among all such
    admissible fractions it is the one with the largest y.
    """
    if r == 0:
        # +oo at level >= 1: the largest finite entry
        return level, 1
    if r == 1:
        y0 = 0
    else:
        y0 = pow(p % r, -1, r)
    # bound y so that |x| <= level where x = (p*y - 1) / r
    if p > 0:
        ymax = (level * r + 1) // p
    elif p < 0:
        ymax = (level * r - 1) // (-p)
    else:
        ymax = level
    if ymax > level:
        ymax = level
    y = ymax - ((ymax - y0) % r)
    if y < 0:
        raise ArithmeticError("no left neighbour for %d/%d at level %d" % (p, r, level))
    x = (p * y - 1) // r
    if y == 0:
        return -1, 0
    return x, y


def level_of(p, r):
    if r == 0 or (p == 0 and r == 1):
        return 0
    return max(abs(p), r)


def left_neighbor_pair(p, r):
    """LN map on pairs; raises ``ValueError`` for -oo."""
    if r == 0 and p < 0:
        raise ValueError("-oo has no left neighbour")
    lev = level_of(p, r)
    if lev == 0:
        if r == 0:  # +oo -> 0
            return 0, 1
        return -1, 0  # 0 -> -oo
    return left_neighbor_fast(p, r, lev)


def lns_pairs(p, r):
    """Left neighbour chain from -oo up to p/r (inclusive)."""
    chain = [(p, r)]
    while not (chain[-1][1] == 0 and chain[-1][0] < 0):
        chain.append(left_neighbor_pair(*chain[-1]))
    chain.reverse()
    return chain


def s_m_quads(m):
    """All (a, b, c, d) with ad - bc = m, a > c >= 0, d > b >= 0.

    Sorted lexicographically.  Uses a + d <= m + 1, which follows from
    ad - bc >= ad - (a-1)(d-1).
    """
    out = []
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
                b = rem // c
                if b < d:
                    out.append((a, b, c, d))
    out.sort()
    return out
