"""Joint noise-level / spike-strength estimation under a k-signal hypothesis.

The noise level and the k spike eigenvalues solve a coupled nonlinear
system: each spike solves a quadratic given the noise level, and the noise
level is the trailing-eigenvalue average corrected by the spike excesses.
The system is iterated to a fixed point from the plain trailing-mean
initialiser.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .spectral import Spectrum

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class NoiseFit:
    """Solver output for one hypothesised signal count k."""

    k: int
    sigma2_hat: float
    rho_hat: np.ndarray
    lambda_hat: np.ndarray
    converged: bool
    iterations: int
    degenerate_roots: np.ndarray
    p: int
    n: int

    @property
    def any_degenerate(self) -> bool:
        return bool(self.degenerate_roots.any())


def mle_noise(spectrum: Spectrum, k: int) -> float:
    """Average of the trailing p - k eigenvalues."""
    if not 0 <= k <= spectrum.p - 1:
        raise InvalidInputError(f"k must lie in 0..{spectrum.p - 1}, got {k}")
    return float(spectrum.eigenvalues[k:].mean())


def solve_rho(l: float, sigma2: float, p: int, k: int, n: int) -> tuple[float, bool]:
    """Larger root of the spike quadratic; (value, degenerate_flag).

    A negative discriminant means the eigenvalue is too small to support a
    spike under this noise level; the root is then clamped to the quadratic
    vertex and flagged rather than raised, so sequential scans can continue.
    """
    if l <= 0.0 or sigma2 <= 0.0:
        raise InvalidInputError("need l > 0 and sigma2 > 0")
    b = l + sigma2 * (1.0 - (p - k) / n)
    disc = b * b - 4.0 * l * sigma2
    if disc < 0.0:
        return b / 2.0, True
    return (b + math.sqrt(disc)) / 2.0, False


def estimate_noise_and_spikes(spectrum: Spectrum, k: int,
                              tol: float = DEFAULT_TOL,
                              max_iter: int = DEFAULT_MAX_ITER) -> NoiseFit:
    """Fixed-point solve of the coupled noise/spike system for hypothesis k.

    Starts from the trailing-mean noise estimate; on non-convergence or a
    non-positive noise iterate the initialiser is returned with
    converged=False rather than raising, so estimator scans degrade
    gracefully.
    """
    p, n = spectrum.p, spectrum.n
    if not 0 <= k <= min(p, n) - 1:
        raise InvalidInputError(f"k must lie in 0..{min(p, n) - 1}, got {k}")
    vals = spectrum.eigenvalues
    sigma2_init = mle_noise(spectrum, k)

    def fit(sigma2, rho, degenerate, converged, iterations):
        rho = np.asarray(rho, dtype=float)
        return NoiseFit(k=k, sigma2_hat=sigma2, rho_hat=rho,
                        lambda_hat=rho - sigma2, converged=converged,
                        iterations=iterations,
                        degenerate_roots=np.asarray(degenerate, dtype=bool),
                        p=p, n=n)

    if k == 0:
        return fit(sigma2_init, [], [], True, 0)

    leading = vals[:k]
    tail_sum = float(vals[k:].sum())

    def solve_all(sigma2):
        roots = np.empty(k)
        degenerate = np.zeros(k, dtype=bool)
        for j in range(k):
            roots[j], degenerate[j] = solve_rho(leading[j], sigma2, p, k, n)
        return roots, degenerate

    sigma2 = sigma2_init
    for iteration in range(1, max_iter + 1):
        rho, degenerate = solve_all(sigma2)
        sigma2_new = (tail_sum + float((leading - rho).sum())) / (p - k)
        if sigma2_new <= 0.0:
            return fit(sigma2_init, *solve_all(sigma2_init), False, iteration)
        if abs(sigma2_new - sigma2) < tol * sigma2_new:
            rho, degenerate = solve_all(sigma2_new)
            return fit(sigma2_new, rho, degenerate, True, iteration)
        sigma2 = sigma2_new

    return fit(sigma2_init, *solve_all(sigma2_init), False, max_iter)
