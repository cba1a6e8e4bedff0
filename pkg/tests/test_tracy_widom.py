"""Tracy-Widom table, interpolation and edge constants.

Frozen oracle values come from scripts/make_tw_table.py (Painleve II
integration) and were cross-checked against an independent Airy-kernel
Fredholm-determinant computation (agreement ~1e-8) and against published
high-precision moments of both laws.
"""

import math

import numpy as np
import pytest

import eigencount as ec
from eigencount.errors import InvalidInputError
from eigencount.spectral import PopulationModel, eig_sym_desc, sample_covariance
from eigencount.simulation import generate_snapshots, trial_rng
from eigencount.tracy_widom import TWTable, tw_table

# Oracle quantiles F_beta(s) = 1 - alpha.
QUANTILE_ORACLE = {
    (0.05, 1): 0.97931605,
    (0.01, 1): 2.02344928,
    (0.005, 1): 2.42232659,
    (0.05, 2): -0.23247447,
    (0.01, 2): 0.47763605,
    (0.005, 2): 0.74622708,
}
CDF_ORACLE = {
    (-1.2065, 1): 0.5196627313,
    (-3.0, 1): 0.0696001189,
    (0.0, 2): 0.9693728284,
}
# Published moments (Bornemann 2010).
MOMENTS = {1: (-1.2065335746, 1.6077810346), 2: (-1.7710868074, 0.8131947928)}


class TestCdf:
    def test_far_tails(self):
        for beta in (1, 2):
            assert ec.tw_cdf(-50.0, beta) == pytest.approx(0.0, abs=1e-9)
            assert ec.tw_cdf(50.0, beta) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("key", sorted(CDF_ORACLE))
    def test_against_oracle(self, key):
        (x, beta) = key
        assert ec.tw_cdf(x, beta) == pytest.approx(CDF_ORACLE[key], abs=1e-3)
        # the table itself is far more accurate than the contract demands
        assert ec.tw_cdf(x, beta) == pytest.approx(CDF_ORACLE[key], abs=1e-6)

    def test_monotone_on_dense_grid(self):
        xs = np.linspace(-12.0, 12.0, 10_000)
        for beta in (1, 2):
            values = ec.tw_cdf(xs, beta)
            assert np.all(np.diff(values) >= 0.0)
            assert np.all((values >= 0.0) & (values <= 1.0))

    def test_moments_from_table(self):
        xs = np.arange(-10.0, 10.0, 1e-3)
        for beta in (1, 2):
            cdf = ec.tw_cdf(xs, beta)
            pdf = np.gradient(cdf, xs)
            mean = np.trapezoid(xs * pdf, xs)
            var = np.trapezoid(xs**2 * pdf, xs) - mean**2
            ref_mean, ref_var = MOMENTS[beta]
            assert mean == pytest.approx(ref_mean, abs=2e-3)
            assert var == pytest.approx(ref_var, abs=2e-3)

    def test_unsupported_beta(self):
        with pytest.raises(InvalidInputError):
            ec.tw_cdf(0.0, 3)


class TestQuantile:
    @pytest.mark.parametrize("key", sorted(QUANTILE_ORACLE))
    def test_against_oracle(self, key):
        alpha, beta = key
        assert ec.tw_quantile(alpha, beta) == pytest.approx(QUANTILE_ORACLE[key], abs=1e-3)

    def test_quantile_cdf_consistency(self):
        for alpha in (0.3, 0.05, 0.005):
            for beta in (1, 2):
                s = ec.tw_quantile(alpha, beta)
                assert ec.tw_cdf(s, beta) == pytest.approx(1.0 - alpha, abs=1e-6)

    def test_round_trip_through_grid_points(self):
        xs = np.linspace(-4.0, 3.0, 40)
        for x in xs:
            alpha = 1.0 - ec.tw_cdf(x, 1)
            if 1e-8 < alpha < 1 - 1e-8:
                assert ec.tw_quantile(alpha, 1) == pytest.approx(x, abs=1e-4)

    def test_strictly_decreasing_in_alpha(self):
        alphas = np.linspace(0.001, 0.999, 60)
        values = [ec.tw_quantile(a, 1) for a in alphas]
        assert np.all(np.diff(values) < 0.0)

    @pytest.mark.parametrize("bad", [0.0, 1.0, -1.0, 2.0])
    def test_alpha_range(self, bad):
        with pytest.raises(InvalidInputError):
            ec.tw_quantile(bad, 1)


class TestEdgeConstants:
    def test_centering_example(self):
        # direct evaluation of the centering formula
        expected = (math.sqrt(199.5) + math.sqrt(99.5)) ** 2 / 200.0
        assert ec.centering_mu(200, 100) == pytest.approx(expected, rel=1e-14)
        assert ec.centering_mu(200, 100) == pytest.approx(2.90391, abs=1e-5)

    def test_centering_degenerate_point(self):
        assert ec.centering_mu(1, 1) == pytest.approx(2.0, rel=1e-12)

    def test_centering_square_limit(self):
        assert ec.centering_mu(10_000, 10_000) == pytest.approx(4.0, abs=0.01)

    def test_scaling_example(self):
        mu = ec.centering_mu(200, 100)
        expected = math.sqrt(mu / 200.0) * (1 / math.sqrt(199.5) + 1 / math.sqrt(99.5)) ** (1 / 3)
        assert ec.scaling_sigma(200, 100) == pytest.approx(expected, rel=1e-14)
        assert ec.scaling_sigma(200, 100) == pytest.approx(0.066893, abs=1e-4)

    def test_scaling_positive_and_decreasing_in_n(self):
        values = [ec.scaling_sigma(n, 100) for n in (100, 200, 400)]
        assert all(v > 0.0 for v in values)
        assert values[0] > values[1] > values[2]

    def test_input_validation(self):
        with pytest.raises(InvalidInputError):
            ec.centering_mu(0, 5)
        with pytest.raises(InvalidInputError):
            ec.scaling_sigma(5, 0)


class TestTableValidation:
    def test_embedded_tables_pass_invariants(self):
        for beta in (1, 2):
            table = tw_table(beta)
            assert table.cdf_values[0] < 1e-9
            assert table.cdf_values[-1] > 1.0 - 1e-9
            assert table.grid[0] <= -10.0 and table.grid[-1] >= 6.0

    def test_rejects_non_monotone_grid(self):
        x = np.array([0.0, 1.0, 0.5, 2.0])
        with pytest.raises(InvalidInputError):
            TWTable(1, x, np.linspace(0, 1, 4))

    def test_rejects_decreasing_cdf(self):
        x = np.linspace(-11, 7, 50)
        y = np.linspace(0, 1, 50) ** 2
        y[20] = y[22]
        y[21] = y[22] + 1e-3  # forces a later decrease
        with pytest.raises(InvalidInputError):
            TWTable(1, x, np.sort(y)[::-1])

    def test_rejects_heavy_tailed_endpoints(self):
        x = np.linspace(-11, 7, 50)
        y = np.linspace(0.01, 0.99, 50)
        with pytest.raises(InvalidInputError):
            TWTable(1, x, y)


def test_monte_carlo_edge_law():
    """Largest pure-noise eigenvalue exceeds the alpha=0.05 threshold at a
    rate near 0.05 (wide band for finite-size effects)."""
    p, n, trials = 100, 200, 3000
    model = PopulationModel(np.array([]), 1.0, p)
    threshold = ec.centering_mu(n, p) + ec.tw_quantile(0.05, 1) * ec.scaling_sigma(n, p)
    exceed = 0
    for t in range(trials):
        snap = generate_snapshots(model, n, trial_rng(905, t))
        spectrum = eig_sym_desc(sample_covariance(snap.data), n)
        exceed += spectrum.eigenvalues[0] > threshold
    assert 0.02 <= exceed / trials <= 0.09
