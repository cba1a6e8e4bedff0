"""The six signal-count estimators.

Information-criterion estimators (AIC, MDL, modified AIC) minimise a
penalised likelihood over the hypothesised count k.  The sequential
estimators scan k upward and stop at the first rejected eigenvalue:

* rmt  -- Tracy-Widom threshold on l_k, calibrated to false-alarm alpha;
* srmt -- detection-limit threshold on the interaction-corrected statistic
          z_k, calibrated to detection probability alpha0;
* sns  -- per-step adaptive choice between the two tests driven by the
          closed-form misdetection scores.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field, fields

import numpy as np

from .errors import EigencountError, InvalidInputError, SolverError
from .noise import NoiseFit, estimate_noise_and_spikes
from .normal import normal_tail_inv
from .probabilities import (ThresholdContext, _s_alpha, pe_rmt, pe_srmt,
                            theta_rmt, theta_srmt)
from .signal_stats import decision_statistic
from .spectral import Spectrum
from .tracy_widom import centering_mu, scaling_sigma

LOG_CLAMP = -700.0


@dataclass(frozen=True)
class EstimatorConfig:
    """Shared knobs for every estimator."""

    alpha: float = 0.005
    alpha0: float = 0.995
    beta: int = 1
    solver_tol: float = 1e-8
    solver_max_iter: int = 200
    modified_aic_c: float = 2.0
    # Off by default: halves the eigenstructure parameter count in the
    # information criteria, the real-data degrees-of-freedom convention.
    real_dof: bool = False

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise InvalidInputError("alpha must lie in (0, 1)")
        if not 0.5 < self.alpha0 < 1.0:
            raise InvalidInputError("alpha0 must lie in (0.5, 1)")
        if self.beta not in (1, 2):
            raise InvalidInputError("beta must be 1 or 2")


@dataclass(frozen=True)
class TraceRow:
    """Per-step record of a sequential scan; unused fields stay None."""

    k: int
    l_k: float
    criterion: str
    accepted: bool
    sigma2_hat: float | None = None
    lambda_hat: tuple[float, ...] | None = None
    v_k: float | None = None
    kappa_k: float | None = None
    delta_k: float | None = None
    delta_valid: bool | None = None
    theta_rmt: float | None = None
    theta_rmt_noise: float | None = None
    theta_srmt: float | None = None
    z_k: float | None = None
    z_threshold: float | None = None
    pe_srmt_plain: float | None = None
    pe_rmt_inter: float | None = None
    pe_rmt_plain: float | None = None
    pe_srmt_inter: float | None = None
    pbar_rmt_inter: float | None = None
    pbar_rmt_plain: float | None = None
    pbar_srmt_inter: float | None = None
    pbar_srmt_plain: float | None = None
    degenerate: bool = False


TRACE_COLUMNS = tuple(f.name for f in fields(TraceRow))


@dataclass
class DecisionTrace:
    """Ordered per-k rows from one sequential estimator run."""

    method: str
    rows: list[TraceRow] = field(default_factory=list)

    def to_csv(self, stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for row in self.rows:
            record = []
            for name in TRACE_COLUMNS:
                value = getattr(row, name)
                if value is None:
                    record.append("")
                elif isinstance(value, bool):
                    record.append(str(int(value)))
                elif isinstance(value, tuple):
                    record.append(";".join(f"{v:.10g}" for v in value))
                elif isinstance(value, float):
                    record.append(f"{value:.10g}")
                else:
                    record.append(str(value))
            writer.writerow(record)

    def to_csv_string(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


@dataclass(frozen=True)
class ModelOrderEstimate:
    """Estimated signal count plus the evidence that produced it."""

    q_hat: int
    method: str
    trace: DecisionTrace | None = None
    degenerate: bool = False


def _clamped_log(x: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.maximum(np.log(np.maximum(x, 0.0)), LOG_CLAMP)


def _likelihood_terms(spectrum: Spectrum) -> tuple[np.ndarray, bool]:
    """n (p-k) ln(arithmetic/geometric mean of trailing eigenvalues), all k."""
    vals = spectrum.eigenvalues
    p, n = spectrum.p, spectrum.n
    kmax = min(p, n) - 1
    logs = _clamped_log(vals)
    degenerate = bool(np.any(vals <= 0.0))
    terms = np.empty(kmax + 1)
    tail_sum = np.cumsum(vals[::-1])[::-1]
    tail_log = np.cumsum(logs[::-1])[::-1]
    for k in range(kmax + 1):
        m = p - k
        ln_a = float(_clamped_log(np.array([tail_sum[k] / m]))[0])
        ln_g = tail_log[k] / m
        terms[k] = n * m * (ln_a - ln_g)
    return terms, degenerate


def _dof(k: np.ndarray, p: int, real_dof: bool) -> np.ndarray:
    dof = k * (2 * p - k)
    return dof / 2.0 if real_dof else dof.astype(float)


def _criterion_argmin(method: str, likelihood_factor: float, terms: np.ndarray,
                      penalty: np.ndarray, degenerate: bool) -> ModelOrderEstimate:
    scores = likelihood_factor * terms + penalty
    return ModelOrderEstimate(q_hat=int(np.argmin(scores)), method=method,
                              degenerate=degenerate)


def estimate_aic(spectrum: Spectrum, config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    config = config or EstimatorConfig()
    terms, degenerate = _likelihood_terms(spectrum)
    k = np.arange(terms.size)
    penalty = 2.0 * _dof(k, spectrum.p, config.real_dof)
    return _criterion_argmin("aic", 2.0, terms, penalty, degenerate)


def estimate_mdl(spectrum: Spectrum, config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    config = config or EstimatorConfig()
    terms, degenerate = _likelihood_terms(spectrum)
    k = np.arange(terms.size)
    penalty = 0.5 * _dof(k, spectrum.p, config.real_dof) * math.log(spectrum.n)
    return _criterion_argmin("mdl", 1.0, terms, penalty, degenerate)


def estimate_modified_aic(spectrum: Spectrum, c: float | None = None,
                          config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    config = config or EstimatorConfig()
    if c is None:
        c = config.modified_aic_c
    terms, degenerate = _likelihood_terms(spectrum)
    k = np.arange(terms.size)
    penalty = 2.0 * c * _dof(k, spectrum.p, config.real_dof)
    return _criterion_argmin("maic", 2.0, terms, penalty, degenerate)


def _rmt_threshold(fit: NoiseFit, alpha: float, beta: int) -> float:
    m = fit.p - fit.k
    return fit.sigma2_hat * (centering_mu(fit.n, m)
                             + _s_alpha(alpha, beta) * scaling_sigma(fit.n, m))


def estimate_rmt(spectrum: Spectrum, config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    """Sequential Tracy-Widom test: stop at the first sub-threshold l_k."""
    config = config or EstimatorConfig()
    trace = DecisionTrace(method="rmt")
    kmax = min(spectrum.p, spectrum.n) - 1
    q_hat = kmax
    for k in range(1, kmax + 1):
        fit = estimate_noise_and_spikes(spectrum, k, config.solver_tol,
                                        config.solver_max_iter)
        threshold = _rmt_threshold(fit, config.alpha, config.beta)
        l_k = float(spectrum.eigenvalues[k - 1])
        accepted = l_k > threshold
        trace.rows.append(TraceRow(
            k=k, l_k=l_k, criterion="rmt", accepted=accepted,
            sigma2_hat=fit.sigma2_hat, lambda_hat=tuple(fit.lambda_hat),
            theta_rmt=threshold, degenerate=fit.any_degenerate))
        if not accepted:
            q_hat = k - 1
            break
    return ModelOrderEstimate(q_hat=q_hat, method="rmt", trace=trace)


def _signal_search_step(spectrum: Spectrum, fit: NoiseFit, k: int,
                        config: EstimatorConfig):
    """Evaluate the signal-search test at step k; returns (accepted, stat, thr).

    A non-positive estimated strength cannot be a signal and has no defined
    statistic; it is rejected outright.
    """
    if float(fit.lambda_hat[k - 1]) <= 0.0:
        return False, None, None
    stat = decision_statistic(k, spectrum, fit, config.beta)
    threshold = (fit.sigma2_hat * math.sqrt(spectrum.gamma)
                 - stat.delta * normal_tail_inv(config.alpha0))
    return stat.z > threshold, stat, threshold


def estimate_signal_search(spectrum: Spectrum,
                           config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    """Sequential detection-limit test on the corrected statistic z_k."""
    config = config or EstimatorConfig()
    trace = DecisionTrace(method="srmt")
    kmax = min(spectrum.p, spectrum.n) - 1
    q_hat = kmax
    for k in range(1, kmax + 1):
        fit = estimate_noise_and_spikes(spectrum, k, config.solver_tol,
                                        config.solver_max_iter)
        accepted, stat, threshold = _signal_search_step(spectrum, fit, k, config)
        trace.rows.append(TraceRow(
            k=k, l_k=float(spectrum.eigenvalues[k - 1]), criterion="srmt",
            accepted=accepted, sigma2_hat=fit.sigma2_hat,
            lambda_hat=tuple(fit.lambda_hat),
            v_k=stat.v if stat else None, kappa_k=stat.kappa if stat else None,
            delta_k=stat.delta if stat else None,
            delta_valid=stat.delta_valid if stat else None,
            z_k=stat.z if stat else None, z_threshold=threshold,
            degenerate=fit.any_degenerate or stat is None))
        if not accepted:
            q_hat = k - 1
            break
    return ModelOrderEstimate(q_hat=q_hat, method="srmt", trace=trace)


def estimate_sns(spectrum: Spectrum, config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    """Adaptive scan: per step, pick the test whose misdetection score wins.

    Step 1 compares the four signal-assumption scores; if either plain score
    beats its interacted counterpart the eigenvalue is treated as noise and
    the TW test applies.  Otherwise step 2 compares the noise-assumption
    scores, with the comparison orientation depending on whether gamma < 1.
    """
    config = config or EstimatorConfig()
    trace = DecisionTrace(method="sns")
    kmax = min(spectrum.p, spectrum.n) - 1
    gamma = spectrum.gamma
    q_hat = kmax
    fit_km1 = estimate_noise_and_spikes(spectrum, 0, config.solver_tol,
                                        config.solver_max_iter)
    for k in range(1, kmax + 1):
        try:
            fit, criterion, accepted, row = _sns_step(spectrum, k, fit_km1, config,
                                                      gamma)
        except EigencountError as exc:
            raise SolverError(f"adaptive scan failed at k={k}: {exc}") from exc
        trace.rows.append(TraceRow(criterion=criterion, accepted=accepted, **row))
        if not accepted:
            q_hat = k - 1
            break
        fit_km1 = fit
    return ModelOrderEstimate(q_hat=q_hat, method="sns", trace=trace)


def _sns_step(spectrum: Spectrum, k: int, fit_km1: NoiseFit,
              config: EstimatorConfig, gamma: float):
    """One adaptive step: fit, criterion selection, chosen test applied."""
    fit = estimate_noise_and_spikes(spectrum, k, config.solver_tol,
                                    config.solver_max_iter)
    l_k = float(spectrum.eigenvalues[k - 1])
    row = {"k": k, "l_k": l_k, "sigma2_hat": fit.sigma2_hat,
           "lambda_hat": tuple(fit.lambda_hat),
           "degenerate": fit.any_degenerate}

    if float(fit.lambda_hat[k - 1]) <= 0.0:
        # No usable strength estimate: the signal-search scores are
        # undefined, fall back to the TW criterion.
        criterion = "rmt"
        row["degenerate"] = True
    else:
        ctx = ThresholdContext(k=k, fit_k=fit, fit_km1=fit_km1,
                               spectrum=spectrum, gamma=gamma,
                               alpha=config.alpha, alpha0=config.alpha0,
                               beta=config.beta)
        step1 = {
            "pe_srmt_plain": pe_srmt(ctx, with_interaction=False),
            "pe_rmt_inter": pe_rmt(ctx, with_interaction=True),
            "pe_rmt_plain": pe_rmt(ctx, with_interaction=False),
            "pe_srmt_inter": pe_srmt(ctx, with_interaction=True),
        }
        row.update({name: pair.p_total for name, pair in step1.items()})
        row.update(v_k=ctx.v_k, kappa_k=ctx.kappa_k, delta_k=ctx.delta_k,
                   delta_valid=ctx.delta_valid,
                   theta_rmt=theta_rmt(ctx, assume_signal=True),
                   theta_srmt=theta_srmt(ctx))
        if (step1["pe_srmt_plain"].p_total > step1["pe_rmt_inter"].p_total
                or step1["pe_rmt_plain"].p_total > step1["pe_srmt_inter"].p_total):
            criterion = "rmt"
        else:
            step2 = {
                "pbar_rmt_inter": pe_rmt(ctx, with_interaction=True,
                                         assume_signal=False),
                "pbar_rmt_plain": pe_rmt(ctx, with_interaction=False,
                                         assume_signal=False),
                "pbar_srmt_inter": pe_srmt(ctx, with_interaction=True,
                                           assume_signal=False),
                "pbar_srmt_plain": pe_srmt(ctx, with_interaction=False,
                                           assume_signal=False),
            }
            row.update({name: pair.p_total for name, pair in step2.items()})
            row.update(theta_rmt_noise=theta_rmt(ctx, assume_signal=False))
            if gamma < 1.0:
                pick_srmt = (step2["pbar_rmt_inter"].p_total
                             > step2["pbar_srmt_plain"].p_total)
            else:
                pick_srmt = (step2["pbar_srmt_inter"].p_total
                             > step2["pbar_rmt_plain"].p_total)
            criterion = "srmt" if pick_srmt else "rmt"

    if criterion == "rmt":
        threshold = _rmt_threshold(fit, config.alpha, config.beta)
        accepted = l_k > threshold
        row.update(theta_rmt=threshold)
    else:
        accepted, stat, threshold = _signal_search_step(spectrum, fit, k, config)
        row.update(z_k=stat.z if stat else None, z_threshold=threshold)
    return fit, criterion, accepted, row


ESTIMATORS = {
    "aic": lambda spectrum, config=None: estimate_aic(spectrum, config),
    "mdl": lambda spectrum, config=None: estimate_mdl(spectrum, config),
    "maic": lambda spectrum, config=None: estimate_modified_aic(spectrum, config=config),
    "rmt": estimate_rmt,
    "srmt": estimate_signal_search,
    "sns": estimate_sns,
}

METHOD_ORDER = ("aic", "mdl", "maic", "rmt", "srmt", "sns")


def estimate(spectrum: Spectrum, method: str,
             config: EstimatorConfig | None = None) -> ModelOrderEstimate:
    if method not in ESTIMATORS:
        raise InvalidInputError(
            f"unknown method {method!r}; expected one of {', '.join(METHOD_ORDER)}")
    return ESTIMATORS[method](spectrum, config)
