"""Right cosets of Gamma_0(n) in SL(2,Z) and the data built on them.

A right coset ``Gamma_0(n) g`` is determined by the bottom row ``(c : d)`` of
``g`` as a point of the projective line over Z/nZ, so coset lookup is a
dictionary hit on the normalized point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np

from .matrix import (
    I,
    S,
    T,
    T_PRIME,
    FormalSum,
    Mat2,
    det,
    hnf_upper,
    inv_unimodular,
    mul,
    power,
)


class NotPrime(ValueError):
    pass


class InvalidRepresentatives(ValueError):
    """User-supplied coset representatives fail validation."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def in_gamma0(g: Mat2, n: int) -> bool:
    return det(g) == 1 and g.c % n == 0


def index_gamma0(n: int) -> int:
    """``[SL(2,Z) : Gamma_0(n)] = n * prod_{p | n} (1 + 1/p)``."""
    mu, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            mu = mu // p * (p + 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        mu = mu // m * (m + 1)
    return mu


def _projective_points(n: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Map every primitive pair mod n to the lexicographically least pair of its unit orbit."""
    units = [u for u in range(1, n + 1) if gcd(u, n) == 1] if n > 1 else [0]
    canon: dict[tuple[int, int], tuple[int, int]] = {}
    for c in range(n):
        for d in range(n):
            if (c, d) in canon or gcd(gcd(c, d), n) != 1:
                continue
            orbit = {((u * c) % n, (u * d) % n) for u in units}
            least = min(orbit)
            for pt in orbit:
                canon[pt] = least
    return canon


def _lift(c: int, d: int, n: int) -> Mat2:
    """An SL(2,Z) matrix with bottom row congruent to (c, d) mod n."""
    if n == 1:
        return I
    if c == 0:
        # d is a unit mod n; the canonical point here is (0, 1)
        c, d = n, d
        if gcd(c, d) != 1:
            raise AssertionError("cannot lift (0 : %d) mod %d" % (d, n))
        if d == 1:
            return I
    while gcd(c, d) != 1:
        d += n
    # a*d - b*c = 1 with 0 <= a < c
    a = pow(d, -1, c) if c > 1 else 0
    b = (a * d - 1) // c
    return Mat2(a, b, c, d)


@dataclass(frozen=True)
class CosetTable:
    """Ordered right-coset representatives of Gamma_0(n) in SL(2,Z)."""

    n: int
    reps: tuple[Mat2, ...]
    _canon: dict = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False)

    @property
    def mu(self) -> int:
        return len(self.reps)

    def point(self, g: Mat2) -> tuple[int, int]:
        return self._canon[(g.c % self.n, g.d % self.n)]

    def index(self, g: Mat2) -> int:
        """1-based coset index of ``g`` in SL(2,Z)."""
        return self._index[self.point(g)]

    @classmethod
    def from_reps(cls, n: int, reps: Sequence[Mat2]) -> CosetTable:
        """Validate and adopt user-chosen representatives."""
        reps = tuple(reps)
        mu = index_gamma0(n)
        if len(reps) != mu:
            raise InvalidRepresentatives("need %d representatives for n=%d, got %d" % (mu, n, len(reps)))
        for r in reps:
            if det(r) != 1:
                raise InvalidRepresentatives("representative %s has det %d" % (r, det(r)))
        canon = _projective_points(n) if n > 1 else {(0, 0): (0, 0)}
        index = {}
        for i, r in enumerate(reps, start=1):
            pt = canon[(r.c % n, r.d % n)]
            if pt in index:
                raise InvalidRepresentatives("%s and %s lie in the same coset" % (reps[index[pt] - 1], r))
            index[pt] = i
        return cls(n, reps, canon, index)


def cosets(n: int) -> CosetTable:
    """Default table: one lift per projective point, ordered by normalized point.

    The point (0 : 1) sorts first, so the identity is always the first
    representative; for n = 2 this yields I, S, ST.
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    if n == 1:
        return CosetTable.from_reps(1, [I])
    canon = _projective_points(n)
    points = sorted(set(canon.values()))
    reps = [_lift(c, d, n) for c, d in points]
    return CosetTable.from_reps(n, reps)


def coset_index(g: Mat2, t: CosetTable) -> int:
    if det(g) != 1:
        raise ValueError("coset_index needs det 1, got %s" % g)
    return t.index(g)


def coset_index_by_membership(g: Mat2, t: CosetTable) -> int:
    """Slow reference for :func:`coset_index`: test ``g alpha_j^-1`` in Gamma_0(n)."""
    hits = [j for j, a in enumerate(t.reps, start=1) if in_gamma0(mul(g, inv_unimodular(a)), t.n)]
    if len(hits) != 1:
        raise AssertionError("%s lies in %d cosets" % (g, len(hits)))
    return hits[0]


@dataclass(frozen=True)
class Permutation:
    """``i -> targets[i-1]`` on ``{1, ..., mu}``.

    As a matrix, row ``i`` has its single 1 in column ``targets[i-1]``, so
    ``(P v)_i = v_{targets[i-1]}``.
    """

    targets: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.targets) != list(range(1, len(self.targets) + 1)):
            raise ValueError("not a permutation: %r" % (self.targets,))

    def __len__(self):
        return len(self.targets)

    def __getitem__(self, i: int) -> int:
        return self.targets[i - 1]

    def matrix(self) -> np.ndarray:
        mu = len(self.targets)
        out = np.zeros((mu, mu), dtype=np.int64)
        out[np.arange(mu), np.asarray(self.targets) - 1] = 1
        return out

    def apply(self, v: Sequence) -> list:
        return [v[k - 1] for k in self.targets]

    def __matmul__(self, other: Permutation) -> Permutation:
        # matrix product P(self) @ P(other)
        return Permutation(tuple(other.targets[k - 1] for k in self.targets))


def rho(g: Mat2, t: CosetTable) -> Permutation:
    """Right regular representation: row ``i`` sends to the coset of ``alpha_i g``."""
    if det(g) != 1:
        raise ValueError("rho needs det 1, got %s" % g)
    return Permutation(tuple(t.index(mul(a, g)) for a in t.reps))


def rho_matrix_by_membership(g: Mat2, t: CosetTable) -> np.ndarray:
    """Entry (i, j) is 1 iff ``alpha_i g alpha_j^-1`` lies in Gamma_0(n)."""
    mu = t.mu
    out = np.zeros((mu, mu), dtype=np.int64)
    for i, ai in enumerate(t.reps):
        aig = mul(ai, g)
        for j, aj in enumerate(t.reps):
            out[i, j] = int(in_gamma0(mul(aig, inv_unimodular(aj)), t.n))
    return out


def x_m(m: int) -> list[Mat2]:
    """Upper triangular ``(a b; 0 d)`` with ``ad = m`` and ``0 <= b < d``.

    Ordered by ``d`` descending, then ``b`` ascending; for m = 2 this is
    ``(1 0; 0 2), (1 1; 0 2), (2 0; 0 1)``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return [Mat2(m // d, b, 0, d) for d in range(m, 0, -1) if m % d == 0 for b in range(d)]


def t_p(p: int) -> FormalSum:
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    return FormalSum.of(*x_m(p))


def u_q(q: int) -> FormalSum:
    if not is_prime(q):
        raise NotPrime("%d is not prime" % q)
    return FormalSum.of(*(Mat2(1, b, 0, q) for b in range(q)))


def sigma(g: Mat2, A: Mat2) -> Mat2:
    """The unique ``U`` in X_m with ``A g U^-1`` in SL(2,Z)."""
    if det(g) != 1:
        raise ValueError("sigma needs det 1, got %s" % g)
    if not A.is_x_m():
        raise ValueError("%s is not in X_m" % A)
    return hnf_upper(mul(A, g))[1]


def phi(A: Mat2, t: CosetTable) -> list[int]:
    """``phi_A(i)`` for i = 1..mu: the coset of ``A alpha_i sigma(alpha_i, A)^-1``."""
    out = []
    for a in t.reps:
        gamma, U = hnf_upper(mul(A, a))
        if det(gamma) != 1:
            raise AssertionError("hnf returned a non-SL2 factor for %s" % mul(A, a))
        out.append(t.index(gamma))
    return out


def parse_word(text: str) -> Mat2:
    """Evaluate a word in S, T, T' (also I) with optional integer powers.

    ``"S*T^3"``, ``"ST"``, ``"T'^-1 S"`` are all accepted; juxtaposition,
    ``*`` and whitespace all mean multiplication.
    """
    src = text.replace(" ", "").replace("*", "")
    if not src:
        raise ValueError("empty word")
    gens = {"S": S, "T": T, "T'": T_PRIME, "I": I}
    pos, out = 0, I
    token = re.compile(r"(T'|S|T|I)(?:\^(\(?-?\d+\)?))?")
    while pos < len(src):
        mt = token.match(src, pos)
        if mt is None:
            raise ValueError("cannot parse word %r at position %d" % (text, pos))
        g = gens[mt.group(1)]
        if mt.group(2) is not None:
            g = power(g, int(mt.group(2).strip("()")))
        out = mul(out, g)
        pos = mt.end()
    return out


def random_word(rng, max_len: int = 12) -> Mat2:
    """Product of up to ``max_len`` letters from {S, T, T^-1}."""
    letters = (S, T, Mat2(1, -1, 0, 1))
    g = I
    for _ in range(int(rng.integers(0, max_len + 1))):
        g = mul(g, letters[int(rng.integers(0, 3))])
    return g

