"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria execute.  Budgets (trial counts, tolerances) are fixed here; all
Monte Carlo runs are seeded and bit-reproducible.
"""

import subprocess
import sys
import time

import numpy as np

import eigencount as ec
from eigencount.probabilities import ThresholdContext, pe_rmt, pe_srmt
from eigencount.simulation import (ScenarioSpec, generate_snapshots, run_sweep,
                                   trial_rng)

TW_QUANTILE_ORACLE = {0.05: 0.97931605, 0.01: 2.02344928, 0.005: 2.42232659}


def report(number, passed, detail):
    status = "PASS" if passed else "FAIL"
    print(f"\nACCEPTANCE {number}: {status} — {detail}")
    assert passed, f"criterion {number}: {detail}"


def paired_sweep(lambdas, points, trials, seed, gamma=None):
    """Paired rmt/sns misdetection sweep over explicit (p, n) points."""
    rows = {}
    for p, n in points:
        spec = ScenarioSpec(lambdas=lambdas, p=p, n=n, trials=trials,
                            base_seed=seed, methods=("rmt", "sns"))
        res = run_sweep(spec, jobs=2)
        rows[(p, n)] = (res.row(p, "rmt"), res.row(p, "sns"))
    return rows


def spectra(model, n, trials, seed):
    for t in range(trials):
        snap = generate_snapshots(model, n, trial_rng(seed, t))
        yield ec.eig_sym_desc(ec.sample_covariance(snap.data), n)


def test_criterion_1_tracy_widom_engine():
    start = time.perf_counter()
    errors = {a: abs(ec.tw_quantile(a, 1) - s) for a, s in TW_QUANTILE_ORACLE.items()}
    xs = np.linspace(-12.0, 12.0, 10_000)
    monotone = bool(np.all(np.diff(ec.tw_cdf(xs, 1)) >= 0.0))
    elapsed = time.perf_counter() - start
    passed = all(e <= 1e-3 for e in errors.values()) and monotone and elapsed < 1.0
    report(1, passed,
           f"TW quantiles within {max(errors.values()):.2e} of oracle, "
           f"CDF monotone on 10^4 points, runtime {elapsed:.2f}s")


def test_criterion_2_overestimation_control():
    rows = paired_sweep((), [(40, 80), (60, 120), (60, 30)], trials=2000, seed=1)
    details = []
    passed = True
    for (p, n), (rmt, sns) in rows.items():
        gap = abs(sns.p_over - rmt.p_over)
        passed &= rmt.p_over <= 0.02 and gap <= 0.02
        details.append(f"(p={p},n={n}): rmt {rmt.p_over:.4f}, |sns-rmt| {gap:.4f}")
    report(2, passed, "pure noise, 2000 paired trials: " + "; ".join(details))


def test_criterion_3_strong_signal_parity():
    details = []
    passed = True
    for lam in ((15.0,), (20, 15, 12, 12, 10, 10, 10, 10)):
        spec = ScenarioSpec(lambdas=lam, p_list=(60,), gamma=0.5, trials=2000,
                            base_seed=31, methods=("rmt", "sns"))
        res = run_sweep(spec, jobs=2)
        rmt, sns = res.row(60, "rmt"), res.row(60, "sns")
        passed &= sns.p_e <= rmt.p_e + 0.02 and rmt.p_e <= 0.05 and sns.p_e <= 0.05
        details.append(f"q={len(lam)}: rmt {rmt.p_e:.4f}, sns {sns.p_e:.4f}")
    report(3, passed, "strong signals, p=60, 2000 trials: " + "; ".join(details))


def test_criterion_4_weak_signal_improvement():
    spec = ScenarioSpec(lambdas=(12, 10, 8, 6, 6, 5, 4, 4), p_list=(40, 60, 80),
                        gamma=0.5, trials=1000, base_seed=4, methods=("rmt", "sns"))
    res = run_sweep(spec, jobs=2)
    details = []
    passed = True
    for p in (40, 60, 80):
        rmt, sns = res.row(p, "rmt"), res.row(p, "sns")
        passed &= sns.p_e <= rmt.p_e + 0.02
        details.append(f"p={p}: rmt {rmt.p_e:.4f}, sns {sns.p_e:.4f}")
    gap = res.row(40, "rmt").p_e - res.row(40, "sns").p_e
    passed &= gap >= 0.05
    report(4, passed, f"weak signals, 1000 paired trials, gap at p=40 {gap:+.4f}: "
           + "; ".join(details))


def test_criterion_5_gamma_above_one_improvement():
    spec = ScenarioSpec(lambdas=(15, 15, 12, 12, 10, 10, 10, 8), p_list=(60, 80),
                        gamma=2.0, trials=1000, base_seed=5, methods=("rmt", "sns"))
    res = run_sweep(spec, jobs=2)
    rmt, sns = res.row(60, "rmt"), res.row(60, "sns")
    passed = sns.p_e < rmt.p_e
    report(5, passed,
           f"gamma=2, 1000 paired trials, p=60: rmt {rmt.p_e:.4f} vs sns {sns.p_e:.4f}")


def test_criterion_6_spike_fluctuation_law():
    p, n, trials = 100, 200, 2000
    model = ec.PopulationModel(np.array([5.0]), 1.0, p)
    top = np.array([s.eigenvalues[0] for s in spectra(model, n, trials, seed=6)])
    tau_ref, delta_ref = 6.588, 0.594
    mean_err = abs(top.mean() - tau_ref)
    mean_tol = 3.0 * delta_ref / np.sqrt(trials)
    sd_ratio = top.std() / delta_ref
    passed = mean_err <= mean_tol and abs(sd_ratio - 1.0) <= 0.15
    report(6, passed,
           f"lambda=5: |mean l1 - {tau_ref}| = {mean_err:.4f} (tol {mean_tol:.4f}), "
           f"sd/delta = {sd_ratio:.3f}")


def test_criterion_7_lawley_bias():
    p = n = 100
    trials = 2000
    model = ec.PopulationModel(np.array([5.0, 2.0]), 1.0, p)
    expected = [ec.lawley_expectation(j, model, n) for j in (1, 2)]
    top2 = np.array([s.eigenvalues[:2] for s in spectra(model, n, trials, seed=17)])
    details = []
    passed = True
    for j in (0, 1):
        err = abs(top2[:, j].mean() - expected[j])
        tol = 3.0 * top2[:, j].std() / np.sqrt(trials)
        passed &= err <= tol
        details.append(f"|E[l{j + 1}] - {expected[j]:.4f}| = {err:.4f} (tol {tol:.4f})")
    report(7, passed, "q=2 model, 2000 trials: " + "; ".join(details))


def test_criterion_8_noise_solver():
    p, n, trials = 100, 200, 1000
    model = ec.PopulationModel(np.array([]), 1.0, p)
    sigma2 = []
    residuals_ok = True
    for spectrum in spectra(model, n, trials, seed=8):
        fit0 = ec.estimate_noise_and_spikes(spectrum, 0)
        sigma2.append(fit0.sigma2_hat)
        # exercise the coupled system as well
        fit3 = ec.estimate_noise_and_spikes(spectrum, 3)
        for fit in (fit0, fit3):
            if not fit.converged:
                continue
            vals = spectrum.eigenvalues
            k = fit.k
            eq_noise = (vals[k:].sum() + (vals[:k] - fit.rho_hat).sum()) / (p - k)
            residuals_ok &= abs(fit.sigma2_hat - eq_noise) <= 1e-8 * fit.sigma2_hat
            for j in range(k):
                if fit.degenerate_roots[j]:
                    continue
                b = vals[j] + fit.sigma2_hat * (1 - (p - k) / n)
                res = fit.rho_hat[j] ** 2 - fit.rho_hat[j] * b + vals[j] * fit.sigma2_hat
                residuals_ok &= abs(res) <= 1e-8 * vals[j] ** 2
    mean_err = abs(np.mean(sigma2) - 1.0)
    passed = mean_err <= 0.01 and residuals_ok
    report(8, passed,
           f"pure noise, 1000 trials: |mean sigma2 - 1| = {mean_err:.5f}, "
           f"residual invariants {'hold' if residuals_ok else 'violated'}")


def test_criterion_9_analytical_bounds():
    rng = np.random.RandomState(90)
    checked = 0
    violations = 0
    while checked < 1000:
        q = rng.randint(2, 5)
        strengths = np.sort(rng.uniform(2.0, 12.0, size=q))[::-1]
        p = int(rng.choice([40, 60, 80]))
        n = 2 * p
        seed = rng.randint(0, 2**31)
        model = ec.PopulationModel(strengths, 1.0, p)
        snap = generate_snapshots(model, n, trial_rng(seed, 0))
        spectrum = ec.eig_sym_desc(ec.sample_covariance(snap.data), n)
        fit_k = ec.estimate_noise_and_spikes(spectrum, q)
        fit_km1 = ec.estimate_noise_and_spikes(spectrum, q - 1)
        if not (fit_k.converged and fit_km1.converged) or fit_k.lambda_hat[q - 1] <= 0:
            continue
        ctx = ThresholdContext(k=q, fit_k=fit_k, fit_km1=fit_km1, spectrum=spectrum,
                               gamma=spectrum.gamma, alpha=0.005, alpha0=0.995)
        if ctx.v_k >= 0.0 or not ctx.delta_valid:
            continue
        checked += 1
        if not pe_rmt(ctx, with_interaction=True).p_false < 0.005:
            violations += 1
        if not pe_srmt(ctx, with_interaction=True).p_miss < 1.0 - 0.995:
            violations += 1
    report(9, violations == 0,
           f"analytic bounds on {checked} random valid contexts: {violations} violations")


def test_criterion_10_deterministic_sweep_cli(tmp_path):
    outputs = []
    for jobs, name in (("1", "a.csv"), ("2", "b.csv"), ("2", "c.csv")):
        out = tmp_path / name
        cmd = [sys.executable, "-m", "eigencount", "sweep", "--preset", "fig1",
               "--trials", "40", "--seed", "7", "--methods", "rmt,sns",
               "--jobs", jobs, "--out", str(out)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outputs.append(out.read_bytes())
    passed = outputs[0] == outputs[1] == outputs[2]
    report(10, passed,
           "repeated seeded sweeps byte-identical across serial and parallel runs")
