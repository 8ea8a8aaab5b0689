"""Extended Farey sequences, the left neighbour map and the sums M(q).

The Farey sequence of level ``n`` here is the set of all reduced ``u/v`` with
``|u| <= n`` and ``0 <= v <= n``, including ``-1/0`` and ``1/0``; level 0 is
``(-1/0, 0/1, 1/0)``.  Each value is stored once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _backend
from .matrix import (
    INF,
    NEG_INF,
    ZERO,
    ExtRational,
    FormalSum,
    Mat2,
    inv_unimodular,
)

DEFAULT_MAX_LEVEL = 10_000


class NoNeighbor(ValueError):
    """-oo has no left neighbour."""


class OutOfDomain(ValueError):
    """M(q) is only defined for rational 0 <= q < 1."""


class ResourceGuard(ValueError):
    """Requested Farey level exceeds the configured limit."""


@dataclass(frozen=True)
class FareySequence:
    level: int
    entries: tuple[ExtRational, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, q):
        return q in set(self.entries)


@dataclass(frozen=True)
class LNSequence:
    """Left neighbour chain ``-oo = chain[0], ..., chain[L] = target``."""

    target: ExtRational
    chain: tuple[ExtRational, ...]

    @property
    def length(self) -> int:
        return len(self.chain) - 1


def lev(q: ExtRational) -> int:
    if q.den == 0 or (q.num == 0):
        return 0
    return max(abs(q.num), q.den)


def farey_sequence(n: int, max_level: int = DEFAULT_MAX_LEVEL) -> FareySequence:
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n > max_level:
        raise ResourceGuard("Farey level %d exceeds limit %d" % (n, max_level))
    if n == 0:
        return FareySequence(0, (NEG_INF, ZERO, INF))
    pairs = _backend.farey_pairs(n)
    return FareySequence(n, tuple(ExtRational(p, q) for p, q in pairs))


def left_neighbor(q: ExtRational, method: str = "fast") -> ExtRational:
    """Largest element of ``farey_sequence(lev(q))`` strictly below ``q``.

    ``method="scan"`` walks every denominator of that Farey set instead of
    solving the neighbour determinant; both give the same answer.
    """
    if q == NEG_INF:
        raise NoNeighbor("-oo has no left neighbour")
    n = lev(q)
    if n == 0:
        return ZERO if q == INF else NEG_INF
    if method == "fast":
        x, y = _backend.left_neighbor_fast(q.num, q.den, n)
    elif method == "scan":
        x, y = _backend.left_neighbor_scan(q.num, q.den, n)
    else:
        raise ValueError("unknown method %r" % method)
    return ExtRational(x, y)


@lru_cache(maxsize=4096)
def _lns_cached(num: int, den: int) -> tuple[ExtRational, ...]:
    return tuple(ExtRational(p, r) for p, r in _backend.lns_pairs(num, den))


def lns(q: ExtRational) -> LNSequence:
    if q == NEG_INF:
        raise NoNeighbor("LNS is not defined for -oo")
    return LNSequence(q, _lns_cached(q.num, q.den))


def m_terms(q: ExtRational) -> list[Mat2]:
    """The summands ``m_1, ..., m_L`` of M(q) in chain order."""
    if not q.is_finite or not (0 <= q.num < q.den):
        raise OutOfDomain("M(q) needs rational 0 <= q < 1, got %s" % q)
    chain = lns(q).chain
    out = []
    for prev, cur in zip(chain, chain[1:]):
        out.append(inv_unimodular(Mat2(-prev.num, cur.num, -prev.den, cur.den)))
    return out


def m_of(q: ExtRational) -> FormalSum:
    return FormalSum.of(*m_terms(q))
