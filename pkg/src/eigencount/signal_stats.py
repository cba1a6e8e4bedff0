"""Interaction term, scale factor and decision statistic for the
signal-search test, together with the statistic's standard deviation and
detection threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .noise import NoiseFit
from .normal import normal_tail_inv
from .spectral import Spectrum

# Pairwise strength gaps below TIE_CLAMP_SCALE * max(lambda_hat, sigma2) are
# replaced by a sign-preserving clamp: the interaction sum is singular at
# exact ties, which the solver can emit for repeated population strengths.
TIE_CLAMP_SCALE = 1e-6
# Floor for the variance radicand once a strength falls below the
# fluctuation threshold; the delta_valid flag records the clamp.
RADICAND_FLOOR = 1e-12


@dataclass(frozen=True)
class SignalStat:
    """Decision statistic z and its ingredients for one tested index."""

    z: float
    v: float
    kappa: float
    delta: float
    delta_valid: bool


def interaction_term(i: int, lambda_hat: np.ndarray, sigma2: float, n: int) -> float:
    """Pairwise eigenvalue-interaction bias on the i-th (1-based) strength."""
    lam = np.asarray(lambda_hat, dtype=float)
    q = lam.size
    if not 1 <= i <= q:
        raise InvalidInputError(f"index must lie in 1..{q}, got {i}")
    if q == 1:
        return 0.0
    lam_i = lam[i - 1]
    clamp = TIE_CLAMP_SCALE * max(float(lam.max()), sigma2)
    total = 0.0
    for j in range(q):
        if j == i - 1:
            continue
        gap = lam_i - lam[j]
        if abs(gap) < clamp:
            # Sign-preserving clamp; an exact tie takes its sign from the
            # descending sort order, so the pair stays antisymmetric.
            gap = -clamp if j < i - 1 else clamp
        total += (lam[j] + sigma2) * (lam_i + sigma2) / gap
    return total / n


def kappa_factor(lambda_hat_i: float, sigma2: float, p: int, q: int, n: int) -> float:
    """Finite-sample inflation factor 1 + (p - q) sigma^2 / (n lambda)."""
    if lambda_hat_i <= 0.0:
        raise InvalidInputError("signal strength must be positive")
    return 1.0 + (p - q) * sigma2 / (n * lambda_hat_i)


def stat_std_dev(lambda_hat_i: float, sigma2: float, p: int, q: int, n: int,
                 beta: int = 1) -> tuple[float, bool]:
    """Standard deviation of the decision statistic; (value, valid_flag).

    For strengths at or below the fluctuation threshold the radicand is
    clamped to RADICAND_FLOOR and the flag is False.
    """
    kappa = kappa_factor(lambda_hat_i, sigma2, p, q, n)
    radicand = 1.0 - (p - q) / n * sigma2**2 / lambda_hat_i**2
    valid = radicand > 0.0
    if not valid:
        radicand = RADICAND_FLOOR
    delta = (lambda_hat_i + sigma2) / kappa * math.sqrt(2.0 / (beta * n) * radicand)
    return delta, valid


def decision_statistic(i: int, spectrum: Spectrum, fit: NoiseFit,
                       beta: int = 1) -> SignalStat:
    """z = (l_i - v_i) / kappa_i - sigma2: an estimate of the i-th strength."""
    if not 1 <= i <= fit.k:
        raise InvalidInputError(f"fit provides {fit.k} spikes, cannot test index {i}")
    sigma2 = fit.sigma2_hat
    lam_i = float(fit.lambda_hat[i - 1])
    v = interaction_term(i, fit.lambda_hat, sigma2, spectrum.n)
    kappa = kappa_factor(lam_i, sigma2, spectrum.p, fit.k, spectrum.n)
    delta, valid = stat_std_dev(lam_i, sigma2, spectrum.p, fit.k, spectrum.n, beta)
    z = (float(spectrum.eigenvalues[i - 1]) - v) / kappa - sigma2
    return SignalStat(z=z, v=v, kappa=kappa, delta=delta, delta_valid=valid)


def signal_threshold(fit: NoiseFit, i: int, gamma: float, alpha0: float,
                     beta: int = 1) -> float:
    """Detection-limit threshold for z: sigma2 sqrt(gamma) - delta Q^{-1}(alpha0).

    Q^{-1} is the upper-tail inverse, so for alpha0 > 0.5 the threshold sits
    above the raw detection limit by |Q^{-1}(alpha0)| standard deviations.
    """
    if not 0.0 < alpha0 < 1.0:
        raise InvalidInputError(f"alpha0 must lie in (0, 1), got {alpha0}")
    lam_i = float(fit.lambda_hat[i - 1])
    delta, _ = stat_std_dev(lam_i, fit.sigma2_hat, fit.p, fit.k, fit.n, beta)
    return fit.sigma2_hat * math.sqrt(gamma) - delta * normal_tail_inv(alpha0)
