"""Self-checks run by ``heckeperiod verify``.

Each check returns a :class:`Check`; a suite is a list of check functions.
Sizes follow the desk-scale limits (m <= 30, Farey level <= 50, 500 random
word pairs per level).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

import numpy as np

from . import congruence as cg
from . import farey as fr
from . import hecke as hk
from . import numeric as nm
from .matrix import (
    INF,
    NEG_INF,
    ZERO,
    I,
    S,
    ExtRational,
    FormalSum,
    Mat2,
    act,
    det,
    inv_unimodular,
    mul,
)

DEFAULT_TOLERANCES = {
    "witness_residual": 1e-10,
    "hecke_image_residual": 1e-8,
    "slash_cocycle": 1e-12,
    "r_zeta_transformation": 1e-12,
    "laplace_eigenvalue": 1e-5,
}

SPECTRAL_PARAMS = (0.5 + 14.134725j, 0.5 + 9.533695j, 0.25 + 3.0j, 0.75 - 2.0j, 0.1 + 0.5j)
SEED = 20240607


@dataclass
class Check:
    name: str
    suite: str
    anchor: str
    passed: bool
    measured: dict = field(default_factory=dict)
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "suite": self.suite,
            "anchor": self.anchor,
            "passed": self.passed,
            "measured": self.measured,
            "seconds": self.seconds,
        }


def _timed(suite: str, anchor: str):
    def wrap(fn: Callable[..., tuple[bool, dict]]):
        def run(**kw) -> Check:
            t0 = time.perf_counter()
            ok, measured = fn(**kw)
            return Check(fn.__name__, suite, anchor, bool(ok), measured, time.perf_counter() - t0)

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def q_(text: str) -> ExtRational:
    return ExtRational.parse(text)


def reduced_rationals(max_level: int):
    """Every finite reduced q (and +oo) with 0 < lev(q) <= max_level."""
    return [q for q in fr.farey_sequence(max_level) if q.is_finite and fr.lev(q) > 0]


def unit_interval_rationals(max_den: int):
    """Reduced q in [0, 1) with denominator <= max_den."""
    out = {ZERO}
    for d in range(1, max_den + 1):
        for b in range(d):
            out.add(ExtRational(b, d))
    return sorted(out)


# -- farey ----------------------------------------------------------------


@_timed("farey", "left neighbour sequence and M(q) of 0 and 1/2")
def farey_goldens():
    got = {
        "F0": [str(q) for q in fr.farey_sequence(0)],
        "F1": [str(q) for q in fr.farey_sequence(1)],
        "LNS(0)": [str(q) for q in fr.lns(ZERO).chain],
        "LNS(1/2)": [str(q) for q in fr.lns(q_("1/2")).chain],
        "M(0)": str(fr.m_of(ZERO)),
        "M(1/2)": str(fr.m_of(q_("1/2"))),
    }
    ok = (
        fr.farey_sequence(0).entries == (NEG_INF, ZERO, INF)
        and fr.farey_sequence(1).entries == (NEG_INF, q_("-1"), ZERO, q_("1"), INF)
        and fr.lns(ZERO).chain == (NEG_INF, ZERO)
        and fr.lns(q_("1/2")).chain == (NEG_INF, ZERO, q_("1/2"))
        and fr.m_of(ZERO) == FormalSum.of(I)
        and fr.m_of(q_("1/2")) == FormalSum.of(I, Mat2(2, -1, 1, 0))
    )
    return ok, got


@_timed("farey", "Farey neighbours a/c < b/d have ad - bc = -1")
def neighbor_determinant(max_level: int = 30):
    bad = 0
    pairs = 0
    for n in range(0, max_level + 1):
        e = fr.farey_sequence(n).entries
        for x, y in zip(e, e[1:]):
            pairs += 1
            if x.num * y.den - y.num * x.den != -1 or not x < y:
                bad += 1
    return bad == 0, {"pairs": pairs, "failures": bad}


def random_unimodular_pair(rng, bound: int = 40) -> tuple[ExtRational, ExtRational]:
    """Random a/c, b/d with c, d >= 0 and ad - bc = +-1."""
    while True:
        c = int(rng.integers(0, bound))
        a = int(rng.integers(-bound, bound + 1))
        if gcd(a, c) != 1:
            continue
        sign = 1 if rng.integers(0, 2) else -1
        if c == 0:
            d = 1
            b = int(rng.integers(-bound, bound + 1))
            sign = a
        else:
            d = (sign * pow(a, -1, c)) % c + c * int(rng.integers(0, 3)) if c > 1 else int(rng.integers(0, 3))
            b = (a * d - sign) // c
        if (b, d) == (0, 0):
            continue
        x, y = ExtRational(a, c), ExtRational(b, d)
        if x != y:
            return x, y


def adjacent_projectively(x: ExtRational, y: ExtRational, entries) -> bool:
    """Adjacency in the cyclic Farey sequence where -1/0 and 1/0 coincide."""
    cyc = [q for q in entries if q != INF]
    pos = {q: i for i, q in enumerate(cyc)}
    i = pos[NEG_INF if not x.is_finite else x]
    j = pos[NEG_INF if not y.is_finite else y]
    return (i - j) % len(cyc) in (1, len(cyc) - 1)


@_timed("farey", "unimodular pairs are neighbours at the larger level")
def neighbor_reconstruction(samples: int = 500, bound: int = 40):
    rng = np.random.default_rng(SEED)
    cache: dict[int, tuple] = {}
    bad = 0
    for _ in range(samples):
        x, y = random_unimodular_pair(rng, bound)
        n = max(fr.lev(x), fr.lev(y))
        if n not in cache:
            cache[n] = fr.farey_sequence(n).entries
        bad += not adjacent_projectively(x, y, cache[n])
    return bad == 0, {"pairs": samples, "failures": bad}


@_timed("farey", "lev(LN(q)) < lev(q)")
def level_descent(max_level: int = 50):
    qs = reduced_rationals(max_level)
    bad = sum(1 for q in qs if not fr.lev(fr.left_neighbor(q)) < fr.lev(q))
    return bad == 0, {"rationals": len(qs), "failures": bad}


@_timed("farey", "fast left neighbour equals the Farey scan")
def left_neighbor_agreement(max_level: int = 50, brute_level: int = 25):
    qs = reduced_rationals(max_level) + [INF]
    bad = sum(1 for q in qs if fr.left_neighbor(q, "fast") != fr.left_neighbor(q, "scan"))
    # literal maximum over the materialized Farey sequence
    brute_bad = 0
    for q in reduced_rationals(brute_level) + [INF, ZERO]:
        seq = fr.farey_sequence(fr.lev(q)).entries
        if max(r for r in seq if r < q) != fr.left_neighbor(q):
            brute_bad += 1
    return bad == 0 and brute_bad == 0, {"rationals": len(qs), "failures": bad, "brute_failures": brute_bad}


def _x_m_points(max_m: int):
    seen = {}
    for m in range(1, max_m + 1):
        for A in cg.x_m(m):
            seen.setdefault(act(A, ZERO), []).append(A)
    return seen


@_timed("farey", "M(q) bottom rows are positive on (q, oo)")
def m_positivity(max_m: int = 30):
    bad = checked = 0
    for q in _x_m_points(max_m):
        for ml in fr.m_terms(q):
            checked += 1
            c, d = ml.c, ml.d
            if c < 0 or c * q.num + d * q.den < 0 or (c == 0 and d <= 0):
                bad += 1
    return bad == 0, {"terms": checked, "failures": bad}


@_timed("farey", "det m_l = 1 and m_l A has a' > c' >= 0, d' > b' >= 0")
def m_products(max_m: int = 30):
    bad = checked = 0
    for m in range(1, max_m + 1):
        for A in cg.x_m(m):
            for ml in fr.m_terms(act(A, ZERO)):
                checked += 1
                B = mul(ml, A)
                if det(ml) != 1 or not (B.a > B.c >= 0 and B.d > B.b >= 0):
                    bad += 1
    return bad == 0, {"products": checked, "failures": bad}


@_timed("farey", "paths of M(q) chain from oo to q")
def path_chaining(max_m: int = 30):
    bad = 0
    points = _x_m_points(max_m)
    for q in points:
        inv = [inv_unimodular(ml) for ml in fr.m_terms(q)]
        ok = act(inv[0], INF) == INF and act(inv[-1], ZERO) == q
        ok = ok and all(act(inv[l], ZERO) == act(inv[l + 1], INF) for l in range(len(inv) - 1))
        bad += not ok
    return bad == 0, {"rationals": len(points), "failures": bad}


# -- cosets ---------------------------------------------------------------


@_timed("cosets", "representatives I, S, ST for Gamma_0(2)")
def coset_goldens():
    t2 = cg.cosets(2)
    ok = t2.reps == (I, S, mul(S, cg.T)) and cg.cosets(1).reps == (I,) and cg.cosets(3).mu == 4
    return ok, {"n=2": [str(r) for r in t2.reps], "mu(3)": cg.cosets(3).mu}


@_timed("cosets", "index equals number of projective points")
def coset_counts(max_n: int = 40):
    bad = []
    for n in range(1, max_n + 1):
        # brute force: primitive pairs mod n divided by the number of units
        units = sum(1 for u in range(n) if gcd(u, n) == 1) if n > 1 else 1
        prim = sum(1 for c in range(n) for d in range(n) if gcd(gcd(c, d), n) == 1) if n > 1 else 1
        if cg.cosets(n).mu != prim // units or cg.index_gamma0(n) != prim // units:
            bad.append(n)
    return not bad, {"levels": max_n, "failures": bad}


@_timed("cosets", "each word lies in exactly one coset")
def coset_partition(words: int = 300, levels=(2, 3, 4, 6, 12)):
    rng = np.random.default_rng(SEED + 1)
    bad = 0
    for n in levels:
        t = cg.cosets(n)
        for _ in range(words):
            g = cg.random_word(rng)
            hits = sum(cg.in_gamma0(mul(g, inv_unimodular(a)), n) for a in t.reps)
            if hits != 1 or cg.coset_index_by_membership(g, t) != cg.coset_index(g, t):
                bad += 1
    return bad == 0, {"words": words * len(levels), "failures": bad}


@_timed("cosets", "rho(I) and rho((2 -1; 1 0)^-1) at level 2")
def rho_goldens():
    t = cg.cosets(2)
    p_id = cg.rho(I, t)
    p_sw = cg.rho(inv_unimodular(Mat2(2, -1, 1, 0)), t)
    ok = (
        p_id.targets == (1, 2, 3)
        and p_sw.targets == (2, 1, 3)
        and (p_sw.matrix() == np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]])).all()
        and (cg.rho_matrix_by_membership(inv_unimodular(Mat2(2, -1, 1, 0)), t) == p_sw.matrix()).all()
    )
    return ok, {"rho(I)": list(p_id.targets), "rho(m2^-1)": list(p_sw.targets)}


@_timed("cosets", "rho(g') rho(g) = rho(g' g)")
def rho_homomorphism(pairs: int = 500, levels=(2, 3, 4, 6)):
    rng = np.random.default_rng(SEED + 2)
    bad = 0
    for n in levels:
        t = cg.cosets(n)
        for _ in range(pairs):
            g, gp = cg.random_word(rng), cg.random_word(rng)
            lhs = cg.rho(gp, t).matrix() @ cg.rho(g, t).matrix()
            if not (lhs == cg.rho(mul(gp, g), t).matrix()).all():
                bad += 1
    return bad == 0, {"pairs": pairs * len(levels), "failures": bad}


@_timed("cosets", "rho matches the membership-matrix definition")
def rho_definition(words: int = 100, levels=(2, 3, 4, 6)):
    rng = np.random.default_rng(SEED + 3)
    bad = 0
    for n in levels:
        t = cg.cosets(n)
        for _ in range(words):
            g = cg.random_word(rng)
            bad += not (cg.rho(g, t).matrix() == cg.rho_matrix_by_membership(g, t)).all()
    return bad == 0, {"words": words * len(levels), "failures": bad}


@_timed("cosets", "sigma_g is a bijection of X_m with inverse sigma_{g^-1}")
def sigma_bijectivity(max_m: int = 20, words: int = 25):
    rng = np.random.default_rng(SEED + 4)
    gs = [I, S, cg.T, mul(S, cg.T)] + [cg.random_word(rng) for _ in range(words)]
    bad = 0
    for m in range(1, max_m + 1):
        xs = cg.x_m(m)
        for g in gs:
            img = [cg.sigma(g, A) for A in xs]
            gi = inv_unimodular(g)
            if sorted(img) != sorted(xs) or any(cg.sigma(gi, U) != A for A, U in zip(xs, img)):
                bad += 1
    return bad == 0, {"cases": max_m * len(gs), "failures": bad}


TABLE1_PHI = {0: [1, 2, 2], 1: [1, 1, 1], 2: [1, 2, 2]}
TABLE1_SIGMA = {0: [0, 2, 2], 1: [1, 1, 0], 2: [2, 0, 1]}


@_timed("cosets", "phi_A and sigma_{alpha_j}(A) for n = m = 2")
def table1():
    t = cg.cosets(2)
    A = cg.x_m(2)
    phis = {i: cg.phi(A[i], t) for i in range(3)}
    sig = {i: [A.index(cg.sigma(a, A[i])) for a in t.reps] for i in range(3)}
    ok = phis == TABLE1_PHI and sig == TABLE1_SIGMA
    return ok, {
        "phi": {"A%d" % (i + 1): v for i, v in phis.items()},
        "sigma": {"A%d" % (i + 1): ["A%d" % (k + 1) for k in v] for i, v in sig.items()},
    }


@_timed("cosets", "A alpha_i lies in Gamma_0(n) alpha_phi(i) sigma(alpha_i, A)")
def phi_relation(levels=(2, 3, 4, 5, 6), primes=(2, 3, 5, 7)):
    bad = cases = 0
    for n in levels:
        t = cg.cosets(n)
        for p in primes:
            for A in cg.x_m(p):
                ph = cg.phi(A, t)
                for i, a in enumerate(t.reps):
                    cases += 1
                    U = cg.sigma(a, A)
                    # A a U^-1 alpha_phi^-1 must be in Gamma_0(n); U^-1 via adjugate / det
                    lhs = mul(mul(A, a), Mat2(U.d, -U.b, 0, U.a))
                    if any(x % p for x in lhs):
                        bad += 1
                        continue
                    gamma = Mat2(*(x // p for x in lhs))
                    bad += not cg.in_gamma0(mul(gamma, inv_unimodular(t.reps[ph[i] - 1])), n)
    return bad == 0, {"cases": cases, "failures": bad}


# -- hecke ----------------------------------------------------------------

H2_LEVEL1 = FormalSum.of(Mat2(1, 0, 0, 2), Mat2(1, 1, 0, 2), Mat2(2, 0, 1, 1), Mat2(2, 0, 0, 1))

# row -> list of (component, matrix)
H22_ROWS = {
    1: [(1, Mat2(1, 0, 0, 2)), (1, Mat2(1, 1, 0, 2)), (2, Mat2(2, 0, 1, 1))],
    2: [(2, Mat2(2, 0, 0, 1)), (1, Mat2(1, 1, 0, 2)), (2, Mat2(2, 0, 1, 1))],
    3: [(2, Mat2(2, 0, 0, 1)), (1, Mat2(1, 0, 0, 2))],
}


def expected_h22_grid():
    grid = []
    for j in (1, 2, 3):
        row = []
        for k in (1, 2, 3):
            row.append(FormalSum.of(*(B for comp, B in H22_ROWS[j] if comp == k)))
        grid.append(tuple(row))
    return tuple(grid)


@_timed("hecke", "level one H(2) has four terms")
def hecke_level1_golden():
    got = hk.h_tilde_level1(2)
    return got == H2_LEVEL1, {"H(2)": str(got)}


@_timed("hecke", "three rows of H_{2,2}")
def hecke_22_golden():
    rep = hk.h_tilde(2, 2)
    ok = (
        rep.grid == expected_h22_grid()
        and all(not rep.cell(j, 3) for j in (1, 2, 3))
        and rep.row_terms(3) == 2
        and rep.row_terms(1) == rep.row_terms(2) == 3
    )
    return ok, {"rows": [[str(c) for c in row] for row in rep.grid]}


@_timed("hecke", "support of H(m) equals S_m, all coefficients 1")
def s_m_equivalence(max_m: int = 30):
    bad = []
    for m in range(1, max_m + 1):
        h = hk.h_tilde_level1(m)
        if h.support() != hk.s_m_oracle(m) or any(c != 1 for c, _ in h):
            bad.append(m)
    return not bad, {"max_m": max_m, "failures": bad}


@_timed("hecke", "h_tilde(1, p) collapses to H(p)")
def level1_reduction(primes=(2, 3, 5, 7, 11, 13)):
    bad = [p for p in primes if hk.h_tilde(1, p).grid != ((hk.h_tilde_level1(p),),)]
    return not bad, {"primes": list(primes), "failures": bad}


@_timed("hecke", "grid entries: det m, a > c >= 0, d > b >= 0, row counts")
def hecke_entry_sanity(levels=(2, 3, 4, 5, 6, 7, 10), primes=(2, 3, 5, 7)):
    bad = cases = 0
    for n in levels:
        for p in primes:
            rep = hk.h_tilde(n, p)
            for j in range(1, rep.mu + 1):
                cases += 1
                if rep.row_terms(j) != hk.row_term_count_expected(rep, j):
                    bad += 1
                for row_cell in rep.grid[j - 1]:
                    for c, B in row_cell:
                        if c != 1 or det(B) != p or not (B.a > B.c >= 0 and B.d > B.b >= 0):
                            bad += 1
    return bad == 0, {"rows": cases, "failures": bad}


# -- numeric --------------------------------------------------------------


def _tol(name: str, tol: float | None) -> float:
    return DEFAULT_TOLERANCES[name] if tol is None else tol


@_timed("numeric", "1 - z^(-2s) solves the level one three-term equation")
def witness_residual(tol: float | None = None):
    tol = _tol("witness_residual", tol)
    t = cg.cosets(1)
    worst = max(
        nm.three_term_residual([nm.witness(s)], s, t, float(z)) for s in SPECTRAL_PARAMS for z in nm.log_grid()
    )
    return worst < tol, {"max_residual": worst, "tol": tol, "points": 50 * len(SPECTRAL_PARAMS)}


@_timed("numeric", "H(m) maps period-like functions to period-like functions")
def hecke_image_residual(tol: float | None = None, ms=(2, 3)):
    tol = _tol("hecke_image_residual", tol)
    t = cg.cosets(1)
    worst = 0.0
    for m in ms:
        h = hk.h_tilde_level1(m)
        for s in SPECTRAL_PARAMS:
            w = nm.witness(s)

            def img(z, w=w, s=s, h=h):
                return nm.apply_sum(w, s, h, z)

            for z in nm.log_grid():
                worst = max(worst, nm.three_term_residual([img], s, t, float(z)))
    return worst < tol, {"max_residual": worst, "tol": tol, "m": list(ms)}


def _random_nonneg(rng, bound=6) -> Mat2:
    while True:
        g = Mat2(*(int(v) for v in rng.integers(0, bound, size=4)))
        if det(g) > 0:
            return g


@_timed("numeric", "(f|a)|g = f|(ag)")
def slash_cocycle(tol: float | None = None, samples: int = 100):
    tol = _tol("slash_cocycle", tol)
    rng = np.random.default_rng(SEED + 5)
    worst = 0.0
    for _ in range(samples):
        s = complex(rng.uniform(0.05, 0.95), rng.uniform(-15, 15))
        f = nm.witness(s)
        a, g = _random_nonneg(rng), _random_nonneg(rng)
        z = float(np.exp(rng.uniform(np.log(0.05), np.log(20))))
        lhs = nm.slash(nm.slashed(f, s, a), s, g, z)
        rhs = nm.slash(f, s, mul(a, g), z)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst < tol, {"max_rel_error": worst, "tol": tol, "samples": samples}


@_timed("numeric", "R_zeta transformation under SL(2,Z)")
def r_zeta_transformation(tol: float | None = None, samples: int = 200):
    tol = _tol("r_zeta_transformation", tol)
    rng = np.random.default_rng(SEED + 6)
    worst = 0.0
    done = 0
    while done < samples:
        g = cg.random_word(rng, 10)
        zeta = float(rng.uniform(-3, 3))
        z = complex(rng.uniform(-2, 2), rng.uniform(0.1, 3))
        if g.c * zeta + g.d == 0:
            continue
        done += 1
        ref = nm.r_zeta(zeta, z)
        worst = max(worst, abs(nm.r_zeta_transformed(g, zeta, z) - ref) / ref)
    return worst < tol, {"max_rel_error": worst, "tol": tol, "samples": samples}


@_timed("numeric", "R_zeta^s is a Laplace eigenfunction with eigenvalue s(1-s)")
def laplace_eigenvalue(tol: float | None = None):
    tol = _tol("laplace_eigenvalue", tol)
    res = nm.laplace_eigen_check(0.0, 0.3 + 1.1j, 0.7, h=1e-4, tol=tol)
    return res["ok"], {"rel_error": res["rel_error"], "method": res["method"], "tol": tol}


@_timed("numeric", "growth exponents of the witness (informational)")
def growth_informational():
    s = SPECTRAL_PARAMS[0]
    at0, atinf = nm.growth_exponents(nm.witness(s))
    lo, hi = nm.growth_bounds(s)
    return True, {
        "slope_at_0": at0,
        "slope_at_inf": atinf,
        "bound_at_0": lo,
        "bound_at_inf": hi,
        "within_0.3": bool(at0 >= -lo - 0.3 and atinf <= hi + 0.3),
    }


SUITES: dict[str, list] = {
    "farey": [
        farey_goldens,
        neighbor_determinant,
        neighbor_reconstruction,
        level_descent,
        left_neighbor_agreement,
        m_positivity,
        m_products,
        path_chaining,
    ],
    "cosets": [
        coset_goldens,
        coset_counts,
        coset_partition,
        rho_goldens,
        rho_homomorphism,
        rho_definition,
        sigma_bijectivity,
        table1,
        phi_relation,
    ],
    "hecke": [
        hecke_level1_golden,
        hecke_22_golden,
        s_m_equivalence,
        level1_reduction,
        hecke_entry_sanity,
    ],
    "numeric": [
        witness_residual,
        hecke_image_residual,
        slash_cocycle,
        r_zeta_transformation,
        laplace_eigenvalue,
        growth_informational,
    ],
}

NUMERIC_WITH_TOL = {witness_residual, hecke_image_residual, slash_cocycle, r_zeta_transformation, laplace_eigenvalue}


def run(suite: str = "all", tol: float | None = None) -> list[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        for check in SUITES[name]:
            out.append(check(tol=tol) if check in NUMERIC_WITH_TOL else check())
    return out
