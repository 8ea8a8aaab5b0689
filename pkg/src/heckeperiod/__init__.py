"""Hecke operators on period functions of Maass cusp forms for SL(2,Z) and Gamma_0(n).

Exact integer 2x2 matrix algebra, extended Farey sequences and left neighbour
sums M(q), right cosets of Gamma_0(n) with the induced permutation
representation, the formal-sum Hecke representations, and floating point
checks of the functional equations they satisfy.
"""

from ._backend import BACKEND
from .congruence import (
    CosetTable,
    NotPrime,
    Permutation,
    coset_index,
    cosets,
    in_gamma0,
    phi,
    rho,
    sigma,
    t_p,
    u_q,
    x_m,
)
from .farey import (
    FareySequence,
    LNSequence,
    NoNeighbor,
    OutOfDomain,
    farey_sequence,
    left_neighbor,
    lev,
    lns,
    m_of,
)
from .hecke import HeckeRep, h_tilde, h_tilde_level1, s_m_oracle
from .matrix import (
    INF,
    NEG_INF,
    ExtRational,
    FormalSum,
    Mat2,
    act,
    det,
    hnf_upper,
    inv_unimodular,
    mul,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CosetTable",
    "ExtRational",
    "FareySequence",
    "FormalSum",
    "HeckeRep",
    "INF",
    "LNSequence",
    "Mat2",
    "NEG_INF",
    "NoNeighbor",
    "NotPrime",
    "OutOfDomain",
    "Permutation",
    "act",
    "coset_index",
    "cosets",
    "det",
    "farey_sequence",
    "h_tilde",
    "h_tilde_level1",
    "hnf_upper",
    "in_gamma0",
    "inv_unimodular",
    "left_neighbor",
    "lev",
    "lns",
    "m_of",
    "mul",
    "phi",
    "rho",
    "s_m_oracle",
    "sigma",
    "t_p",
    "u_q",
    "x_m",
]
