"""Exact 2x2 integer matrices, extended rationals and formal matrix sums."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable


class NonUnimodular(ValueError):
    """Raised when a matrix inverse is requested for |det| != 1."""


class NonpositiveDet(ValueError):
    """Raised by :func:`hnf_upper` for det <= 0."""


class Undefined(ArithmeticError):
    """Raised when a Moebius image degenerates to 0/0."""


@dataclass(frozen=True, order=True)
class Mat2:
    """Immutable 2x2 integer matrix ``(a b; c d)``.

    Ordering is lexicographic on ``(a, b, c, d)``.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: Mat2) -> Mat2:
        return mul(self, other)

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def is_sl2(self) -> bool:
        return self.det == 1

    def is_gamma0(self, n: int) -> bool:
        return self.det == 1 and self.c % n == 0

    def is_nonneg(self) -> bool:
        return min(self.a, self.b, self.c, self.d) >= 0

    def is_x_m(self, m: int | None = None) -> bool:
        """Upper triangular with ``a, d > 0`` and ``0 <= b < d``; det ``m`` if given."""
        if self.c != 0 or self.a <= 0 or not (0 <= self.b < self.d):
            return False
        return m is None or self.det == m

    def __str__(self) -> str:
        return "(%d %d; %d %d)" % (self.a, self.b, self.c, self.d)


I = Mat2(1, 0, 0, 1)
T = Mat2(1, 1, 0, 1)
S = Mat2(0, -1, 1, 0)
T_PRIME = Mat2(1, 0, 1, 1)


def det(m: Mat2) -> int:
    return m.a * m.d - m.b * m.c


def mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def adjugate(m: Mat2) -> Mat2:
    return Mat2(m.d, -m.b, -m.c, m.a)


def inv_unimodular(m: Mat2) -> Mat2:
    """Exact inverse of a matrix with determinant +1 or -1."""
    dt = det(m)
    if dt == 1:
        return adjugate(m)
    if dt == -1:
        return Mat2(-m.d, m.b, m.c, -m.a)
    raise NonUnimodular("det %d != +-1 for %s" % (dt, m))


def power(m: Mat2, k: int) -> Mat2:
    """``m**k``; negative ``k`` requires |det m| = 1."""
    if k < 0:
        m, k = inv_unimodular(m), -k
    out = I
    while k:
        if k & 1:
            out = mul(out, m)
        m = mul(m, m)
        k >>= 1
    return out


@total_ordering
class ExtRational:
    """Reduced fraction ``num/den`` with ``den >= 0``; +-oo is +-1/0."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        num, den = int(num), int(den)
        if num == 0 and den == 0:
            raise Undefined("0/0 is not an extended rational")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1 if num > 0 else -1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ExtRational is immutable")

    @classmethod
    def parse(cls, text: str) -> ExtRational:
        """Parse ``"p/q"``, ``"p"``, ``"inf"``/``"+inf"``/``"-inf"``."""
        t = text.strip().lower()
        if t in ("inf", "+inf", "oo", "+oo", "infinity"):
            return INF
        if t in ("-inf", "-oo", "-infinity"):
            return NEG_INF
        if "/" in t:
            p, q = t.split("/", 1)
            return cls(int(p), int(q))
        return cls(int(t), 1)

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    def to_fraction(self) -> Fraction:
        if not self.den:
            raise OverflowError("infinite value has no Fraction")
        return Fraction(self.num, self.den)

    def __float__(self) -> float:
        if not self.den:
            return float("inf") if self.num > 0 else float("-inf")
        return self.num / self.den

    def _key(self):
        return (self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, ExtRational):
            return self._key() == other._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self.den == 0 or other.den == 0:
            return _inf_rank(self) < _inf_rank(other)
        return self.num * other.den < other.num * self.den

    def __repr__(self):
        return "ExtRational(%d, %d)" % (self.num, self.den)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)


def _inf_rank(q: ExtRational) -> int:
    if q.den:
        return 0
    return 1 if q.num > 0 else -1


INF = ExtRational(1, 0)
NEG_INF = ExtRational(-1, 0)
ZERO = ExtRational(0, 1)


def act(m: Mat2, q: ExtRational) -> ExtRational:
    """Moebius image ``(a q + b) / (c q + d)`` of an extended rational."""
    num = m.a * q.num + m.b * q.den
    den = m.c * q.num + m.d * q.den
    if num == 0 and den == 0:
        raise Undefined("%s maps %s to 0/0" % (m, q))
    return ExtRational(num, den)


def hnf_upper(m: Mat2) -> tuple[Mat2, Mat2]:
    """Split ``m = g @ u`` with ``g`` in SL(2,Z) and ``u`` upper triangular.

    ``u = (a b; 0 d)`` has ``a, d > 0`` and ``0 <= b < d``; it is unique for
    the coset SL(2,Z) m.
    """
    dt = det(m)
    if dt <= 0:
        raise NonpositiveDet("det %d <= 0 for %s" % (dt, m))
    # clear the lower-left entry of h @ m with h in SL2 acting on the first column
    g0, x, y = _egcd(m.a, m.c)
    h = Mat2(x, y, -m.c // g0, m.a // g0)
    u = mul(h, m)
    # now u = (g0, *; 0, dt / g0) with g0 > 0; reduce b into [0, d)
    k = -(u.b // u.d)
    u = Mat2(u.a, u.b + k * u.d, 0, u.d)
    h = mul(Mat2(1, k, 0, 1), h)
    return inv_unimodular(h), u


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``x a + y b = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


class FormalSum:
    """Integer linear combination of :class:`Mat2`, kept in canonical form.

    Canonical form: matrices are distinct, coefficients nonzero, terms sorted
    lexicographically on ``(a, b, c, d)``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, Mat2]] = ()):
        acc: dict[Mat2, int] = defaultdict(int)
        for coeff, mat in terms:
            acc[mat] += int(coeff)
        self.terms: tuple[tuple[int, Mat2], ...] = tuple(
            (acc[mat], mat) for mat in sorted(acc) if acc[mat]
        )

    @classmethod
    def of(cls, *mats: Mat2) -> FormalSum:
        return cls((1, m) for m in mats)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other: FormalSum) -> FormalSum:
        return sum_add(self, other)

    def support(self) -> set[Mat2]:
        return {m for _, m in self.terms}

    def matrices(self) -> list[Mat2]:
        return [m for _, m in self.terms]

    def __repr__(self):
        return "FormalSum(%r)" % (list(self.terms),)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, m in self.terms:
            parts.append(str(m) if c == 1 else "%d*%s" % (c, m))
        return " + ".join(parts)


def sum_canonicalize(terms: Iterable[tuple[int, Mat2]]) -> FormalSum:
    return FormalSum(terms)


def sum_add(x: FormalSum, y: FormalSum) -> FormalSum:
    return FormalSum(x.terms + y.terms)


def sum_scalar_mul(k: int, x: FormalSum) -> FormalSum:
    return FormalSum((k * c, m) for c, m in x.terms)


def sum_mat_mul(x: FormalSum, mat: Mat2, side: str = "right") -> FormalSum:
    """Multiply every term of ``x`` by ``mat`` on the given side."""
    if side == "right":
        return FormalSum((c, mul(m, mat)) for c, m in x.terms)
    if side == "left":
        return FormalSum((c, mul(mat, m)) for c, m in x.terms)
    raise ValueError("side must be 'left' or 'right'")
