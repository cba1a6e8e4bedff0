import io
import math

import numpy as np
import pytest

import eigencount as ec
from eigencount.errors import InvalidInputError
from eigencount.estimators import TRACE_COLUMNS
from eigencount.simulation import generate_snapshots, trial_rng
from tests.conftest import sampled_spectrum, spectrum_from_values


def criterion_table(values, n, penalty_fn):
    """Exhaustive information-criterion table, straight from the formulas."""
    values = np.asarray(values, dtype=float)
    p = values.size
    scores = []
    for k in range(min(p, n)):
        tail = values[k:]
        a = tail.mean()
        g = np.exp(np.log(tail).mean())
        scores.append(-2.0 * n * (p - k) * math.log(g / a) + penalty_fn(k, p))
    return np.array(scores)


def random_spectrum(rng, p=12, n=30):
    a = rng.randn(p, n)
    return ec.eig_sym_desc(ec.sample_covariance(a), n)


class TestInformationCriteria:
    def test_flat_spectrum_gives_zero(self):
        spectrum = spectrum_from_values(np.full(20, 3.7), 50)
        assert ec.estimate_aic(spectrum).q_hat == 0
        assert ec.estimate_mdl(spectrum).q_hat == 0
        assert ec.estimate_modified_aic(spectrum).q_hat == 0

    def test_toy_spectrum_matches_brute_force(self):
        values, n = np.array([8.0, 1.05, 0.95]), 500
        spectrum = spectrum_from_values(values, n)
        aic_scores = criterion_table(values, n, lambda k, p: 2.0 * k * (2 * p - k))
        assert ec.estimate_aic(spectrum).q_hat == int(np.argmin(aic_scores))
        maic_scores = criterion_table(values, n, lambda k, p: 4.0 * k * (2 * p - k))
        assert ec.estimate_modified_aic(spectrum, c=2.0).q_hat == int(np.argmin(maic_scores))
        # MDL keeps the classical single-likelihood form
        mdl_scores = criterion_table(values, n, lambda k, p: k * (2 * p - k) * math.log(n)) / 2.0
        assert ec.estimate_mdl(spectrum).q_hat == int(np.argmin(mdl_scores))

    def test_random_spectra_match_brute_force(self):
        rng = np.random.RandomState(31)
        for _ in range(30):
            spectrum = random_spectrum(rng)
            values, n = spectrum.eigenvalues, spectrum.n
            aic_scores = criterion_table(values, n, lambda k, p: 2.0 * k * (2 * p - k))
            assert ec.estimate_aic(spectrum).q_hat == int(np.argmin(aic_scores))

    def test_modified_aic_with_unit_constant_is_aic(self):
        rng = np.random.RandomState(32)
        for _ in range(100):
            spectrum = random_spectrum(rng, p=8, n=20)
            assert ec.estimate_modified_aic(spectrum, c=1.0).q_hat == \
                ec.estimate_aic(spectrum).q_hat

    def test_huge_penalty_forces_zero(self):
        rng = np.random.RandomState(33)
        for _ in range(10):
            spectrum = random_spectrum(rng)
            assert ec.estimate_modified_aic(spectrum, c=1e9).q_hat == 0

    def test_scale_invariance(self):
        rng = np.random.RandomState(34)
        for _ in range(25):
            spectrum = random_spectrum(rng)
            c = float(rng.uniform(0.01, 100.0))
            scaled = ec.Spectrum(spectrum.eigenvalues * c, spectrum.p, spectrum.n)
            for est in (ec.estimate_aic, ec.estimate_mdl, ec.estimate_modified_aic):
                assert est(spectrum).q_hat == est(scaled).q_hat

    def test_zero_eigenvalues_flagged_not_fatal(self):
        values = np.array([5.0, 2.0, 1.0, 0.0, 0.0])
        spectrum = spectrum_from_values(values, 3)
        result = ec.estimate_aic(spectrum)
        assert result.degenerate
        assert 0 <= result.q_hat <= 2

    def test_aic_overestimation_conventions(self):
        """With the classical complex-data penalty on real data the AIC is
        conservative on pure noise; the real-dof toggle halves the penalty
        and produces the well-known non-negligible over-estimation."""
        p, n, trials = 100, 200, 400
        model = ec.PopulationModel(np.array([]), 1.0, p)
        real_cfg = ec.EstimatorConfig(real_dof=True)
        over_default = over_real = 0
        for t in range(trials):
            snap = generate_snapshots(model, n, trial_rng(41, t))
            spectrum = ec.eig_sym_desc(ec.sample_covariance(snap.data), n)
            over_default += ec.estimate_aic(spectrum).q_hat > 0
            over_real += ec.estimate_aic(spectrum, real_cfg).q_hat > 0
        assert over_default / trials <= 0.02
        assert over_real / trials > 0.05

    def test_mdl_overestimation_negligible(self):
        p, n, trials = 100, 200, 400
        model = ec.PopulationModel(np.array([]), 1.0, p)
        over = 0
        for t in range(trials):
            snap = generate_snapshots(model, n, trial_rng(41, t))
            spectrum = ec.eig_sym_desc(ec.sample_covariance(snap.data), n)
            over += ec.estimate_mdl(spectrum).q_hat > 0
        assert over / trials <= 0.01


def idealised_spike_spectrum(strength, p, n, gamma):
    values = np.full(p, 1.0)
    values[0] = ec.spike_limit(strength, 1.0, gamma)
    return ec.Spectrum(values, p, n)


class TestRmtEstimator:
    def test_flat_spectrum(self):
        spectrum = spectrum_from_values(np.full(100, 1.0), 200)
        assert ec.estimate_rmt(spectrum).q_hat == 0

    def test_idealised_single_spike(self):
        spectrum = idealised_spike_spectrum(15.0, 100, 200, 0.5)
        result = ec.estimate_rmt(spectrum)
        assert result.q_hat == 1
        # hand composition of the k=1 threshold from the fitted noise level
        fit = ec.estimate_noise_and_spikes(spectrum, 1)
        threshold = fit.sigma2_hat * (ec.centering_mu(200, 99)
                                      + ec.tw_quantile(0.005, 1) * ec.scaling_sigma(200, 99))
        assert result.trace.rows[0].theta_rmt == pytest.approx(threshold, rel=1e-9)
        assert spectrum.eigenvalues[0] > threshold

    def test_pure_noise_overestimation_controlled(self):
        p, n, trials = 100, 200, 600
        model = ec.PopulationModel(np.array([]), 1.0, p)
        over = 0
        for t in range(trials):
            snap = generate_snapshots(model, n, trial_rng(141, t))
            over += ec.estimate_rmt(
                ec.eig_sym_desc(ec.sample_covariance(snap.data), n)).q_hat > 0
        assert over / trials <= 0.02


class TestSignalSearchEstimator:
    def test_flat_spectrum(self):
        spectrum = spectrum_from_values(np.full(100, 1.0), 200)
        assert ec.estimate_signal_search(spectrum).q_hat == 0

    def test_idealised_single_spike(self):
        spectrum = idealised_spike_spectrum(15.0, 100, 200, 0.5)
        assert ec.estimate_signal_search(spectrum).q_hat == 1

    def test_better_weak_signal_detection_than_rmt(self):
        """Paired draws with a strength just above the detection limit."""
        p, n, trials = 100, 200, 2000
        model = ec.PopulationModel(np.array([1.0]), 1.0, p)
        rmt_hits = srmt_hits = 0
        for t in range(trials):
            snap = generate_snapshots(model, n, trial_rng(321, t))
            spectrum = ec.eig_sym_desc(ec.sample_covariance(snap.data), n)
            rmt_hits += ec.estimate_rmt(spectrum).q_hat >= 1
            srmt_hits += ec.estimate_signal_search(spectrum).q_hat >= 1
        assert srmt_hits > rmt_hits


class TestSnsEstimator:
    def test_flat_spectrum_all_rmt_criterion(self):
        spectrum = spectrum_from_values(np.full(100, 1.0), 200)
        result = ec.estimate_sns(spectrum)
        assert result.q_hat == 0
        assert all(row.criterion == "rmt" for row in result.trace.rows)

    def test_idealised_strong_spike_walkthrough(self):
        spectrum = idealised_spike_spectrum(15.0, 100, 200, 0.5)
        result = ec.estimate_sns(spectrum)
        assert result.q_hat == 1
        assert result.trace.rows[1].k == 2
        assert result.trace.rows[1].criterion == "rmt"
        assert not result.trace.rows[1].accepted

    def test_trace_records_step_scores(self):
        spectrum = sampled_spectrum([6.0, 3.0], p=40, n=80, seed=88)
        result = ec.estimate_sns(spectrum)
        for row in result.trace.rows:
            assert row.criterion in ("rmt", "srmt")
            if row.criterion == "srmt":
                assert row.pbar_rmt_inter is not None

    def test_matches_paired_components_on_noise(self):
        """On pure noise the adaptive scan reduces to the TW test."""
        p, n = 60, 120
        model = ec.PopulationModel(np.array([]), 1.0, p)
        for t in range(200):
            snap = generate_snapshots(model, n, trial_rng(606, t))
            spectrum = ec.eig_sym_desc(ec.sample_covariance(snap.data), n)
            assert ec.estimate_sns(spectrum).q_hat == ec.estimate_rmt(spectrum).q_hat


class TestCommonProperties:
    def test_q_hat_range(self):
        rng = np.random.RandomState(35)
        for p, n in ((10, 30), (30, 10), (15, 15)):
            for _ in range(10):
                spectrum = random_spectrum(rng, p=p, n=n)
                for method in ec.METHOD_ORDER:
                    q_hat = ec.estimate(spectrum, method).q_hat
                    assert 0 <= q_hat <= min(p, n) - 1

    def test_determinism(self):
        spectrum = sampled_spectrum([8.0, 5.0, 2.0], p=50, n=100, seed=99)
        for method in ec.METHOD_ORDER:
            a = ec.estimate(spectrum, method)
            b = ec.estimate(spectrum, method)
            assert a.q_hat == b.q_hat
            if a.trace is not None:
                assert a.trace.to_csv_string() == b.trace.to_csv_string()

    def test_unknown_method_rejected(self):
        spectrum = spectrum_from_values(np.full(10, 1.0), 20)
        with pytest.raises(InvalidInputError):
            ec.estimate(spectrum, "esprit")

    def test_trace_terminal_row(self):
        spectrum = sampled_spectrum([9.0], p=30, n=60, seed=77)
        for method in ("rmt", "srmt", "sns"):
            trace = ec.estimate(spectrum, method).trace
            ks = [row.k for row in trace.rows]
            assert ks == sorted(ks)
            rejected = [row for row in trace.rows if not row.accepted]
            assert len(rejected) == 1 and rejected[0] is trace.rows[-1]

    def test_trace_csv_schema(self):
        spectrum = sampled_spectrum([9.0], p=30, n=60, seed=77)
        trace = ec.estimate_sns(spectrum).trace
        buf = io.StringIO()
        trace.to_csv(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == ",".join(TRACE_COLUMNS)
        assert len(lines) == len(trace.rows) + 1

    def test_config_validation(self):
        with pytest.raises(InvalidInputError):
            ec.EstimatorConfig(alpha=0.0)
        with pytest.raises(InvalidInputError):
            ec.EstimatorConfig(alpha0=0.4)
        with pytest.raises(InvalidInputError):
            ec.EstimatorConfig(beta=3)
