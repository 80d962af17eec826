"""Spectral constants of the k-bonacci recurrences.

Forward characteristic polynomial: p(x) = x^k - x^{k-1} - ... - x - 1,
with a single dominant real root lambda_1 in (1, 2).  The backward vector
recurrence (k = 3) has characteristic polynomial mu^3 + mu^2 + mu - 1; its
roots drive a closed-form reconstruction of the vector family through the
embedding (v1, v2) -> v1 + i v2.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .core import KBonacciContext
from .errors import ConvergenceFailure, ReconstructionMismatch


def _poly_eval(coeffs: list[int], z: complex) -> complex:
    acc = 0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def _poly_eval_deriv(coeffs: list[int], z: complex) -> tuple[complex, complex]:
    acc = 0j
    d = 0j
    for c in coeffs:
        d = d * z + acc
        acc = acc * z + c
    return acc, d


def _newton_polish(coeffs: list[int], z: complex, iterations: int = 4) -> complex:
    for _ in range(iterations):
        val, der = _poly_eval_deriv(coeffs, z)
        if der == 0:
            break
        z = z - val / der
    return z


def char_poly_roots(k: int, *, residual_tol: float = 1e-10) -> list[complex]:
    """All k roots of x^k - x^{k-1} - ... - 1, dominant root first.

    Companion-matrix roots polished by Newton iteration; every residual must
    fall below residual_tol or :class:`ConvergenceFailure` is raised.  The
    first entry is the real dominant root in (1, 2) with zero imaginary part.
    """
    if not 2 <= k <= 12:
        raise ValueError(f"k must be in [2, 12], got {k}")
    coeffs = [1] + [-1] * k
    roots = [_newton_polish(coeffs, z) for z in np.roots(coeffs)]
    for z in roots:
        if abs(_poly_eval(coeffs, z)) > residual_tol:
            raise ConvergenceFailure(f"root {z} has residual above {residual_tol}")
    roots.sort(key=lambda z: (-abs(z), -z.real, -z.imag))
    lam = roots[0]
    if not (abs(lam.imag) < 1e-9 and 1.0 < lam.real < 2.0):
        raise ConvergenceFailure(f"dominant root {lam} is not real in (1, 2)")
    roots[0] = complex(lam.real, 0.0)
    return roots


def binet_a1(
    ctx: KBonacciContext,
    lambda1: float,
    *,
    n_hi: int = 60,
    n_lo: int = 50,
    rel_tol: float = 1e-9,
) -> float:
    """Leading growth coefficient a1 with x_{n+1} ~ a1 * lambda1^n.

    Estimated as x_{n_hi+1} / lambda1^n_hi; the estimate at n_lo must agree
    to rel_tol relative drift, else :class:`ConvergenceFailure`.
    """
    est_hi = ctx.scalar(n_hi + 1) / lambda1**n_hi
    est_lo = ctx.scalar(n_lo + 1) / lambda1**n_lo
    if abs(est_hi - est_lo) > rel_tol * abs(est_hi):
        raise ConvergenceFailure(
            f"a1 estimates {est_lo} and {est_hi} drift beyond {rel_tol}"
        )
    return est_hi


def backward_constants_k3(ctx: KBonacciContext) -> dict:
    """Closed-form constants for the k = 3 backward vector recurrence.

    Writing Z_{-n} = v1 + i v2 for X_{-n} = (v1, v2), the recurrence
    Z_{-n} = Z_{-(n-3)} - Z_{-(n-2)} - Z_{-(n-1)} has solution
    Z_{-n} = A r^n e^{i n theta} + B r^n e^{-i n theta} + C eps^n
    where eps is the real root of mu^3 + mu^2 + mu - 1 and r e^{+-i theta}
    are the complex pair.  The constants solve the 3x3 system fixed by
    Z_0 = 0, Z_{-1} = 1, Z_{-2} = i, and the reconstruction is checked
    against the exact vectors for n <= 20.
    """
    if ctx.k != 3:
        raise ValueError("backward constants are specific to k = 3")
    coeffs = [1, 1, 1, -1]
    roots = [_newton_polish(coeffs, z) for z in np.roots(coeffs)]
    real_roots = [z for z in roots if abs(z.imag) < 1e-9]
    complex_roots = [z for z in roots if z.imag > 1e-9]
    if len(real_roots) != 1 or len(complex_roots) != 1:
        raise ConvergenceFailure(f"unexpected root structure {roots}")
    eps = real_roots[0].real
    mu = complex_roots[0]
    r = abs(mu)
    theta = cmath.phase(mu)
    mu_bar = mu.conjugate()
    m = np.array(
        [
            [1, 1, 1],
            [mu, mu_bar, eps],
            [mu**2, mu_bar**2, eps**2],
        ],
        dtype=complex,
    )
    rhs = np.array([0, 1, 1j], dtype=complex)
    a, b, c = np.linalg.solve(m, rhs)
    for n in range(21):
        z = a * mu**n + b * mu_bar**n + c * eps**n
        v1, v2 = ctx.vector(n)
        if round(z.real) != v1 or round(z.imag) != v2:
            raise ReconstructionMismatch(
                f"Z_-{n} = {z} does not round to X_-{n} = {(v1, v2)}"
            )
    return {
        "r": r,
        "theta": theta,
        "epsilon": eps,
        "A": complex(a),
        "B": complex(b),
        "C": complex(c),
    }


def lekkerkerker_slope(
    mean_fn: Callable[[int], Fraction],
    n_lo: int,
    n_hi: int,
    *,
    drift_tol: float = 1e-6,
) -> float:
    """Asymptotic summand-density constant from exact means.

    Returns (mean(n_hi) - mean(n_lo)) / (n_hi - n_lo).  The same slope over
    the window shifted forward by half its width must agree within
    drift_tol, else :class:`ConvergenceFailure`.
    """
    if n_hi - n_lo < 20:
        raise ValueError("slope window must span at least 20 indices")
    width = n_hi - n_lo
    shift = width // 2
    slope = float(mean_fn(n_hi) - mean_fn(n_lo)) / width
    slope_shifted = float(mean_fn(n_hi + shift) - mean_fn(n_lo + shift)) / width
    if abs(slope - slope_shifted) > drift_tol:
        raise ConvergenceFailure(
            f"slope drift {abs(slope - slope_shifted)} exceeds {drift_tol}"
        )
    return slope


@dataclass(frozen=True)
class SpectralData:
    """Bundle of the numeric constants for one order k."""

    k: int
    lambda1: float
    all_roots: tuple[complex, ...]
    a1: float
    c_lek: float
    r: float | None = None
    theta: float | None = None
    epsilon: float | None = None
    A: complex | None = None
    B: complex | None = None
    C: complex | None = None
    gap_base: float = field(init=False, default=0.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gap_base", 1.0 / self.lambda1)

    def to_json_dict(self) -> dict:
        def cx(z: complex | None):
            return None if z is None else [z.real, z.imag]

        return {
            "k": self.k,
            "lambda1": self.lambda1,
            "all_roots": [cx(z) for z in self.all_roots],
            "a1": self.a1,
            "c_lek": self.c_lek,
            "gap_base": self.gap_base,
            "r": self.r,
            "theta": self.theta,
            "epsilon": self.epsilon,
            "A": cx(self.A),
            "B": cx(self.B),
            "C": cx(self.C),
        }


def compute_spectral_data(
    ctx: KBonacciContext,
    *,
    mean_fn: Callable[[int], Fraction] | None = None,
) -> SpectralData:
    """Assemble SpectralData for ctx.k, including k = 3 backward constants."""
    if mean_fn is None:
        from .genfunc import exact_mean

        mean_fn = lambda n: exact_mean(ctx.k, n)  # noqa: E731
    roots = char_poly_roots(ctx.k)
    lam = roots[0].real
    for z in roots[1:]:
        if abs(z) >= lam:
            raise ConvergenceFailure(f"subdominant root {z} has modulus >= lambda1")
    a1 = binet_a1(ctx, lam)
    c_lek = lekkerkerker_slope(mean_fn, 40, 60)
    extras = {}
    if ctx.k == 3:
        bc = backward_constants_k3(ctx)
        if abs(bc["epsilon"] * bc["r"] ** 2 - 1.0) > 1e-9:
            raise ConvergenceFailure("epsilon * r^2 = 1 check failed")
        extras = dict(
            r=bc["r"], theta=bc["theta"], epsilon=bc["epsilon"],
            A=bc["A"], B=bc["B"], C=bc["C"],
        )
    return SpectralData(
        k=ctx.k,
        lambda1=lam,
        all_roots=tuple(roots),
        a1=a1,
        c_lek=c_lek,
        **extras,
    )
