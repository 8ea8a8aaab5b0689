"""Floating point slash action, three-term residuals and the kernel R_zeta.

Complex powers are only ever taken of positive reals, as
``exp(w * log(base))``, so no branch cut is crossed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .congruence import CosetTable, rho
from .hecke import HeckeRep
from .matrix import FormalSum, Mat2, T, T_PRIME, inv_unimodular


class DomainError(ValueError):
    """Slash evaluation outside nonnegative matrices on (0, oo)."""


@dataclass(frozen=True)
class TestFunction:
    """A label plus an evaluator on (0, oo)."""

    __test__ = False  # not a pytest class

    func: Callable[[float], complex]
    label: str = "f"

    def __call__(self, z: float) -> complex:
        return self.func(z)


def rpow(base: float, w: complex) -> complex:
    """``base**w`` for real ``base > 0`` via the real logarithm."""
    if not base > 0:
        raise DomainError("power base must be positive, got %r" % base)
    return cmath.exp(w * math.log(base))


def slash(f: Callable[[float], complex], s: complex, g: Mat2, z: float) -> complex:
    """``(det g)^s (cz + d)^(-2s) f((az + b) / (cz + d))`` for z > 0."""
    a, b, c, d = g
    if min(a, b, c, d) < 0:
        raise DomainError("slash needs nonnegative entries, got %s" % g)
    if not z > 0:
        raise DomainError("slash needs z > 0, got %r" % z)
    dt = a * d - b * c
    if dt <= 0:
        raise DomainError("slash needs det > 0, got %s" % g)
    cz_d = c * z + d
    return rpow(dt, s) * rpow(cz_d, -2 * s) * f((a * z + b) / cz_d)


def slashed(f: Callable[[float], complex], s: complex, g: Mat2) -> Callable[[float], complex]:
    """The function ``f |_s g``."""
    return lambda z: slash(f, s, g, z)


def apply_sum(f, s: complex, op: FormalSum | HeckeRep, z: float):
    """Evaluate ``f |_s op`` at z.

    With a :class:`FormalSum`, ``f`` is one function and the result a
    complex number.  With a :class:`HeckeRep`, ``f`` is a sequence of mu
    functions and the result is the list whose j-th entry is
    ``sum_k f_k |_s grid[j][k]``.
    """
    if isinstance(op, FormalSum):
        return sum(coeff * slash(f, s, m, z) for coeff, m in op)
    if len(f) != op.mu:
        raise ValueError("need %d component functions, got %d" % (op.mu, len(f)))
    out = []
    for row in op.grid:
        acc = 0j
        for fk, cell in zip(f, row):
            for coeff, m in cell:
                acc += coeff * slash(fk, s, m, z)
        out.append(acc)
    return out


def three_term_defect(psi: Sequence, s: complex, t: CosetTable, z: float) -> list[complex]:
    """``psi(z) - rho(T^-1) psi(z+1) - (z+1)^(-2s) rho(T'^-1) psi(z/(z+1))``."""
    if not z > 0:
        raise DomainError("z must be positive")
    if len(psi) != t.mu:
        raise ValueError("need %d component functions, got %d" % (t.mu, len(psi)))
    p_t = rho(inv_unimodular(T), t)
    p_tp = rho(inv_unimodular(T_PRIME), t)
    here = [f(z) for f in psi]
    right = p_t.apply([f(z + 1) for f in psi])
    factor = rpow(z + 1, -2 * s)
    left = p_tp.apply([f(z / (z + 1)) for f in psi])
    return [h - r - factor * l for h, r, l in zip(here, right, left)]


def three_term_residual(psi: Sequence, s: complex, t: CosetTable, z: float) -> float:
    return max(abs(x) for x in three_term_defect(psi, s, t, z))


def residual_report(psi: Sequence, s: complex, t: CosetTable, zs) -> list[dict]:
    return [{"z": float(z), "residual": three_term_residual(psi, s, t, float(z))} for z in zs]


def witness(s: complex) -> TestFunction:
    """``1 - z^(-2s)``, a closed-form solution of the level-one three-term equation."""
    return TestFunction(lambda z: 1 - rpow(z, -2 * s), "1 - z^(-2s)")


def log_grid(lo: float = 0.05, hi: float = 20.0, num: int = 50) -> np.ndarray:
    return np.logspace(math.log10(lo), math.log10(hi), num)


def growth_exponents(f: Callable[[float], complex], lo: float = 1e-4, hi: float = 1e4) -> tuple[float, float]:
    """Log-log slopes of |f| near 0 and near oo (informational only)."""

    def slope(z1, z2):
        a, b = abs(f(z1)), abs(f(z2))
        if a == 0 or b == 0:
            return float("nan")
        return (math.log(b) - math.log(a)) / (math.log(z2) - math.log(z1))

    return slope(lo, 10 * lo), slope(hi / 10, hi)


def growth_bounds(s: complex) -> tuple[float, float]:
    """Admissible exponents at 0 and at oo for a period function."""
    return max(0.0, -2 * s.real), min(0.0, -2 * s.real)


def r_zeta(zeta: float, z: complex) -> float:
    """``y / ((x - zeta)^2 + y^2)`` with ``z = x + iy``, ``y > 0``."""
    x, y = z.real, z.imag
    if not y > 0:
        raise DomainError("z must lie in the upper half plane")
    return y / ((x - zeta) ** 2 + y * y)


def mobius_complex(g: Mat2, z: complex) -> complex:
    a, b, c, d = g
    return (a * z + b) / (c * z + d)


def r_zeta_transformed(g: Mat2, zeta: float, z: complex) -> float:
    """``|det g| |c zeta + d|^-2 R_{g zeta}(g z)``; equals ``R_zeta(z)``."""
    a, b, c, d = g
    den = c * zeta + d
    return abs(a * d - b * c) / (den * den) * r_zeta((a * zeta + b) / den, mobius_complex(g, z))


def hyperbolic_laplacian_fd(f: Callable[[float, float], complex], x: float, y: float, h: float = 1e-4) -> complex:
    """``-y^2 (f_xx + f_yy)`` by central differences."""
    f0 = f(x, y)
    fxx = (f(x + h, y) - 2 * f0 + f(x - h, y)) / (h * h)
    fyy = (f(x, y + h) - 2 * f0 + f(x, y - h)) / (h * h)
    return -y * y * (fxx + fyy)


def laplace_eigen_check(zeta: float, z: complex, s: complex, h: float = 1e-4, tol: float = 1e-5) -> dict:
    """Compare the finite-difference Laplacian of ``R_zeta^s`` with ``s(1-s) R_zeta^s``.

    Retries once with a Richardson extrapolation from steps h and h/2 when
    the plain estimate misses ``tol``.
    """

    def g(x, y):
        return rpow(r_zeta(zeta, complex(x, y)), s)

    exact = s * (1 - s) * g(z.real, z.imag)
    est = hyperbolic_laplacian_fd(g, z.real, z.imag, h)
    rel = abs(est - exact) / abs(exact)
    method = "central"
    if rel > tol:
        half = hyperbolic_laplacian_fd(g, z.real, z.imag, h / 2)
        est = (4 * half - est) / 3
        rel = abs(est - exact) / abs(exact)
        method = "richardson"
    return {"estimate": est, "expected": exact, "rel_error": rel, "method": method, "ok": rel <= tol}
