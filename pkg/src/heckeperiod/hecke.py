"""Hecke operators on period functions as formal matrix sums.

At level 1 the operator is a single formal sum ``H(m) = sum_A M(A 0) A``
over the upper triangular matrices of determinant m.  At level n it is a
mu x mu grid of formal sums; row j, column k collects the matrices ``B``
such that component j of the image contains ``psi_k | B``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

from . import _backend
from .congruence import (
    CosetTable,
    NotPrime,
    cosets,
    is_prime,
    phi,
    sigma,
    x_m,
)
from .farey import m_terms
from .matrix import (
    ExtRational,
    FormalSum,
    Mat2,
    act,
    inv_unimodular,
    mul,
    sum_mat_mul,
)


class TableMismatch(ValueError):
    """Two HeckeReps built on different coset tables were compared."""


def h_tilde_level1(m: int) -> FormalSum:
    if m < 1:
        raise ValueError("m must be >= 1")
    total = FormalSum()
    zero = ExtRational(0, 1)
    for A in x_m(m):
        total = total + sum_mat_mul(FormalSum.of(*m_terms(act(A, zero))), A)
    return total


def s_m_oracle(m: int) -> set[Mat2]:
    """Every ``(a b; c d)`` of determinant m with ``a > c >= 0`` and ``d > b >= 0``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return {Mat2(*q) for q in _backend.s_m_quads(m)}


def hecke_index_set(n: int, m: int) -> list[Mat2]:
    """X_m when gcd(m, n) = 1, otherwise X_m without ``(m 0; 0 1)``."""
    xs = x_m(m)
    if gcd(m, n) == 1:
        return xs
    return [A for A in xs if A != Mat2(m, 0, 0, 1)]


@dataclass(frozen=True)
class HeckeRep:
    """``grid[j-1][k-1]`` holds the matrices acting on component k in output row j."""

    n: int
    m: int
    table: CosetTable
    grid: tuple[tuple[FormalSum, ...], ...]

    @property
    def mu(self) -> int:
        return self.table.mu

    def cell(self, j: int, k: int) -> FormalSum:
        """1-based access."""
        return self.grid[j - 1][k - 1]

    def row_terms(self, j: int) -> int:
        """Number of slash terms in output row j, counted with multiplicity."""
        return sum(c for cell in self.grid[j - 1] for c, _ in cell)

    def same_table(self, other: HeckeRep) -> bool:
        return self.n == other.n and self.table.reps == other.table.reps

    def __eq__(self, other):
        if not isinstance(other, HeckeRep):
            return NotImplemented
        if not self.same_table(other):
            raise TableMismatch("HeckeReps built on different coset representatives")
        return self.m == other.m and self.grid == other.grid

    def __hash__(self):
        return hash((self.n, self.m, self.table.reps, self.grid))


def _row(j: int, A_set: list[Mat2], t: CosetTable, phis: dict) -> list[list[tuple[int, Mat2]]]:
    alpha_j = t.reps[j - 1]
    cells: list[list[tuple[int, Mat2]]] = [[] for _ in range(t.mu)]
    zero = ExtRational(0, 1)
    for A in A_set:
        U = sigma(alpha_j, A)
        alpha_src = t.reps[phis[A][j - 1] - 1]
        for ml in m_terms(act(U, zero)):
            k = t.index(mul(alpha_src, inv_unimodular(ml)))
            cells[k - 1].append((1, mul(ml, U)))
    return cells


def h_tilde(n: int, m: int, t: CosetTable | None = None, workers: int | None = None) -> HeckeRep:
    """Grid form of the m-th Hecke operator on vector valued period functions.

    For row j and each A, with ``U = sigma(alpha_j, A)`` and
    ``M(U 0) = sum_l m_l``, the term ``m_l U`` acts on component
    ``k = coset(alpha_{phi_A(j)} m_l^-1)``.  Rows are independent; pass
    ``workers`` to build them on a thread pool (the merge is in row order).
    """
    if not is_prime(m):
        raise NotPrime("%d is not prime" % m)
    if t is None:
        t = cosets(n)
    elif t.n != n:
        raise ValueError("coset table is for level %d, not %d" % (t.n, n))
    A_set = hecke_index_set(n, m)
    phis = {A: phi(A, t) for A in A_set}
    rows = range(1, t.mu + 1)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(lambda j: _row(j, A_set, t, phis), rows))
    else:
        raw = [_row(j, A_set, t, phis) for j in rows]
    grid = tuple(tuple(FormalSum(cell) for cell in row) for row in raw)
    return HeckeRep(n, m, t, grid)


def row_term_count_expected(rep: HeckeRep, j: int) -> int:
    """Sum over A of the LNS length of ``sigma(alpha_j, A) 0``."""
    alpha_j = rep.table.reps[j - 1]
    zero = ExtRational(0, 1)
    return sum(len(m_terms(act(sigma(alpha_j, A), zero))) for A in hecke_index_set(rep.n, rep.m))
