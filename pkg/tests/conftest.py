import numpy as np
import pytest

from eigencount import (PopulationModel, Spectrum, eig_sym_desc,
                        estimate_noise_and_spikes, sample_covariance)
from eigencount.simulation import generate_snapshots, trial_rng


def sampled_spectrum(strengths, p, n, seed, sigma2=1.0):
    """One random spectrum from the spiked model, via the package pipeline."""
    model = PopulationModel(np.asarray(strengths, dtype=float), sigma2, p)
    snap = generate_snapshots(model, n, trial_rng(seed, 0))
    return eig_sym_desc(sample_covariance(snap.data), n)


def spectrum_from_values(values, n):
    return Spectrum.from_values(np.asarray(values, dtype=float), n)


@pytest.fixture(scope="session")
def strong_two_spike_fit():
    """A converged fit with two clearly supercritical spikes (k = 2)."""
    spectrum = sampled_spectrum([8.0, 5.0], p=60, n=120, seed=1234)
    fit = estimate_noise_and_spikes(spectrum, 2)
    assert fit.converged and not fit.any_degenerate
    return spectrum, fit
