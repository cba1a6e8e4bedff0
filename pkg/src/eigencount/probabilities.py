"""Closed-form miss/over-detection scores for the two sequential tests.

These scores drive the adaptive criterion selection: at each step k they
approximate how likely each test is to misclassify the k-th eigenvalue,
under the hypothesis that it comes from a signal (step 1) or from noise
(step 2, the "barred" variants).  The p_total of a score pair is a
comparison score, not a probability, and is never clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import InvalidInputError
from .noise import NoiseFit
from .normal import norm_cdf, normal_tail_inv
from .signal_stats import interaction_term, kappa_factor, stat_std_dev
from .spectral import Spectrum
from .tracy_widom import centering_mu, scaling_sigma, tw_cdf, tw_quantile


@lru_cache(maxsize=64)
def _s_alpha(alpha: float, beta: int) -> float:
    return tw_quantile(alpha, beta)


@dataclass(frozen=True)
class ProbPair:
    """Miss/false probabilities of one test variant at one step."""

    p_miss: float
    p_false: float
    saturated: bool = False

    def __post_init__(self):
        if not (0.0 <= self.p_miss <= 1.0 and 0.0 <= self.p_false <= 1.0):
            raise InvalidInputError("probabilities must lie in [0, 1]")

    @property
    def p_total(self) -> float:
        return self.p_miss + self.p_false


@dataclass(frozen=True)
class ThresholdContext:
    """Everything step k of the adaptive scan needs to score both tests."""

    k: int
    fit_k: NoiseFit
    fit_km1: NoiseFit
    spectrum: Spectrum
    gamma: float
    alpha: float
    alpha0: float
    beta: int = 1

    def __post_init__(self):
        if self.fit_k.k != self.k or self.fit_km1.k != self.k - 1:
            raise InvalidInputError("fits do not match the step index")
        if float(self.fit_k.lambda_hat[self.k - 1]) <= 0.0:
            raise InvalidInputError("tested strength must be positive")

    @property
    def lambda_k(self) -> float:
        return float(self.fit_k.lambda_hat[self.k - 1])

    @cached_property
    def v_k(self) -> float:
        return interaction_term(self.k, self.fit_k.lambda_hat,
                                self.fit_k.sigma2_hat, self.spectrum.n)

    @cached_property
    def kappa_k(self) -> float:
        return kappa_factor(self.lambda_k, self.fit_k.sigma2_hat,
                            self.spectrum.p, self.k, self.spectrum.n)

    @cached_property
    def _delta(self) -> tuple[float, bool]:
        return stat_std_dev(self.lambda_k, self.fit_k.sigma2_hat,
                            self.spectrum.p, self.k, self.spectrum.n, self.beta)

    @property
    def delta_k(self) -> float:
        return self._delta[0]

    @property
    def delta_valid(self) -> bool:
        return self._delta[1]

    def _edge(self, assume_signal: bool) -> tuple[float, float, float]:
        """(noise level, centering, scaling) for the TW argument of the
        requested variant: hypothesis-k quantities under the signal
        assumption, hypothesis-(k-1) quantities under the noise one."""
        n, p = self.spectrum.n, self.spectrum.p
        if assume_signal:
            return self.fit_k.sigma2_hat, centering_mu(n, p - self.k), \
                scaling_sigma(n, p - self.k)
        return self.fit_km1.sigma2_hat, centering_mu(n, p - self.k + 1), \
            scaling_sigma(n, p - self.k + 1)


def theta_rmt(ctx: ThresholdContext, assume_signal: bool = True) -> float:
    """Tracy-Widom threshold on l_k for the noise-eigenvalue test."""
    sigma2, mu, sc = ctx._edge(assume_signal)
    return sigma2 * (mu + _s_alpha(ctx.alpha, ctx.beta) * sc)


def theta_srmt(ctx: ThresholdContext) -> float:
    """Threshold on l_k equivalent to the signal-search test on z."""
    sigma2 = ctx.fit_k.sigma2_hat
    return (sigma2 * (1.0 + math.sqrt(ctx.gamma))
            - ctx.delta_k * normal_tail_inv(ctx.alpha0)) * ctx.kappa_k


def pe_rmt(ctx: ThresholdContext, with_interaction: bool,
           assume_signal: bool = True) -> ProbPair:
    """Misdetection score of the noise-eigenvalue (TW-threshold) test."""
    theta = theta_rmt(ctx, assume_signal)
    v = ctx.v_k if with_interaction else 0.0
    if not ctx.delta_valid:
        # Subcritical strength: the test cannot detect such a spike.
        p_miss, saturated = 1.0, True
    else:
        arg = -((theta + v) / ctx.kappa_k
                - (1.0 + math.sqrt(ctx.gamma)) * ctx.fit_k.sigma2_hat) / ctx.delta_k
        p_miss, saturated = norm_cdf(arg), False

    if with_interaction:
        sigma2, _, sc = ctx._edge(assume_signal)
        p_false = 1.0 - tw_cdf(_s_alpha(ctx.alpha, ctx.beta) - ctx.v_k / (sigma2 * sc),
                               ctx.beta)
    else:
        p_false = ctx.alpha
    return ProbPair(p_miss=p_miss, p_false=p_false, saturated=saturated)


def pe_srmt(ctx: ThresholdContext, with_interaction: bool,
            assume_signal: bool = True) -> ProbPair:
    """Misdetection score of the signal-search test."""
    if not ctx.delta_valid:
        # Subcritical strength: neither test can detect such a spike, so
        # both miss variants saturate.
        p_miss, saturated = 1.0, True
    elif not with_interaction:
        p_miss, saturated = 1.0 - ctx.alpha0, False
    else:
        p_miss = norm_cdf(normal_tail_inv(ctx.alpha0)
                          + ctx.v_k / (ctx.kappa_k * ctx.delta_k))
        saturated = False

    theta = theta_srmt(ctx)
    v = ctx.v_k if with_interaction else 0.0
    sigma2, mu, sc = ctx._edge(assume_signal)
    p_false = 1.0 - tw_cdf(((theta + v) / sigma2 - mu) / sc, ctx.beta)
    return ProbPair(p_miss=p_miss, p_false=p_false, saturated=saturated)
