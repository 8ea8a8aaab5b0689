"""JSON encodings shared by the library and the CLI.

Schemas::

    Mat2          [[a, b], [c, d]]
    ExtRational   {"num": p, "den": q}
    FormalSum     [{"coeff": k, "mat": Mat2}, ...]        canonical order
    LNSequence    {"q": ExtRational, "chain": [ExtRational, ...]}
    CosetTable    {"n": n, "mu": mu, "reps": [Mat2, ...]}
    Permutation   [k_1, ..., k_mu]                         1-based
    HeckeRep      {"n", "m", "mu", "reps", "grid"}         grid[j-1][k-1] is a
                                                            FormalSum acting on
                                                            component k in row j
"""

from __future__ import annotations

import json
import math
from typing import Any

from .congruence import CosetTable, Permutation
from .farey import FareySequence, LNSequence
from .hecke import HeckeRep
from .matrix import ExtRational, FormalSum, Mat2

FLOAT_DIGITS = 15


def mat(m: Mat2) -> list:
    return m.rows()


def mat_from(obj) -> Mat2:
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(r, list) and len(r) == 2 for r in obj)):
        raise ValueError("matrix must be [[a, b], [c, d]], got %r" % (obj,))
    for v in (obj[0] + obj[1]):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError("matrix entries must be integers, got %r" % (v,))
    return Mat2.from_rows(obj)


def rational(q: ExtRational) -> dict:
    return {"num": q.num, "den": q.den}


def rational_from(obj) -> ExtRational:
    return ExtRational(int(obj["num"]), int(obj["den"]))


def formal_sum(s: FormalSum) -> list:
    return [{"coeff": c, "mat": mat(m)} for c, m in s]


def formal_sum_from(obj) -> FormalSum:
    return FormalSum((int(t["coeff"]), mat_from(t["mat"])) for t in obj)


def farey(f: FareySequence) -> dict:
    return {"level": f.level, "entries": [rational(q) for q in f.entries]}


def lns(seq: LNSequence) -> dict:
    return {"q": rational(seq.target), "chain": [rational(q) for q in seq.chain]}


def coset_table(t: CosetTable) -> dict:
    return {"n": t.n, "mu": t.mu, "reps": [mat(r) for r in t.reps]}


def coset_table_from(obj) -> CosetTable:
    return CosetTable.from_reps(int(obj["n"]), [mat_from(r) for r in obj["reps"]])


def permutation(p: Permutation) -> list:
    return list(p.targets)


def hecke_rep(rep: HeckeRep) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "mu": rep.mu,
        "reps": [mat(r) for r in rep.table.reps],
        "grid": [[formal_sum(cell) for cell in row] for row in rep.grid],
    }


def hecke_rep_from(obj) -> HeckeRep:
    n, mu = int(obj["n"]), int(obj["mu"])
    table = CosetTable.from_reps(n, [mat_from(r) for r in obj["reps"]])
    grid = tuple(tuple(formal_sum_from(cell) for cell in row) for row in obj["grid"])
    if table.mu != mu or len(grid) != mu or any(len(row) != mu for row in grid):
        raise ValueError("grid shape does not match mu = %d" % mu)
    return HeckeRep(n, int(obj["m"]), table, grid)


def _clean(obj: Any) -> Any:
    """Round floats to 15 significant digits; complex becomes {"re", "im"}."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return repr(obj)
        return float("%.*g" % (FLOAT_DIGITS, obj))
    if isinstance(obj, complex):
        return {"re": _clean(obj.real), "im": _clean(obj.imag)}
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return _clean(obj.item())
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(_clean(obj), sort_keys=False, separators=(",", ":"))
