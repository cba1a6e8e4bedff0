"""Synthetic-data generation and Monte Carlo misdetection sweeps.

Snapshots are drawn from a zero-mean Gaussian with the diagonal population
covariance (spikes plus white noise floor); for eigenvalue-based estimators
this is statistically equivalent to mixing through an explicit array
response matrix.  Every trial owns a counter-based random stream keyed by
(base_seed, trial_index), so results are bit-reproducible and independent
of execution order -- trials can run in any order or in parallel.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import InvalidInputError
from .estimators import METHOD_ORDER, ESTIMATORS, EstimatorConfig
from .normal import norm_ppf_array
from .spectral import PopulationModel, SnapshotMatrix, eig_sym_desc, sample_covariance

DESK_TRIALS = 1000
FULL_TRIALS = 3000

# Figure presets: the spike-eigenvalue vectors and sweep geometry of the
# benchmark scenarios.  Sweep grids are not part of the scenario definition;
# the desk grids keep an acceptance run in the minutes range and the full
# grids extend the same sweeps upward.
_PRESETS = {
    "fig1": {"gamma": 0.5, "lambda": ()},
    "fig2": {"gamma": 0.5, "lambda": (15.0,)},
    "fig3": {"gamma": 0.5, "lambda": (20.0, 15.0, 12.0, 12.0, 10.0, 10.0, 10.0, 10.0)},
    "fig4": {"gamma": 0.5, "lambda": (12.0, 10.0, 8.0, 6.0, 6.0, 5.0, 4.0, 4.0),
             "desk_grid": (40, 60, 80)},
    "fig5": {"gamma": 2.0, "lambda": ()},
    "fig6": {"gamma": 2.0, "lambda": (20.0,)},
    "fig7": {"gamma": 2.0, "lambda": (15.0, 15.0, 12.0, 12.0, 10.0, 10.0, 10.0, 8.0),
             "desk_grid": (60, 80, 100)},
    "fig8": {"p": 60, "lambda": ()},
    "fig9": {"p": 60, "lambda": (20.0,)},
    "fig10": {"p": 60, "lambda": (40.0, 25.0, 20.0, 20.0, 15.0, 15.0, 12.0, 10.0)},
    "fig11": {"p": 60, "lambda": (15.0, 12.0, 10.0, 10.0, 8.0, 6.0, 5.0, 4.0, 4.0, 2.5)},
}
_DESK_P_GRID = (20, 40, 60)
_FULL_P_GRID = (20, 40, 60, 100, 140, 200)
_DESK_N_GRID = (30, 60, 120)
_FULL_N_GRID = (30, 60, 120, 240, 480)

PRESET_NAMES = tuple(_PRESETS)


@dataclass(frozen=True)
class ScenarioSpec:
    """One Monte Carlo experiment: population, sweep axis, trial budget.

    lambdas are the spike eigenvalues of the population covariance, the
    convention the benchmark scenarios are printed in (the noise eigenvalues
    all equal sigma2); the corresponding signal strength of each spike is
    lambda - sigma2, so every entry must exceed sigma2.
    """

    lambdas: tuple[float, ...] = ()
    sigma2: float = 1.0
    p: int | None = None
    n: int | None = None
    gamma: float | None = None
    p_list: tuple[int, ...] | None = None
    n_list: tuple[int, ...] | None = None
    trials: int = FULL_TRIALS
    base_seed: int = 0
    methods: tuple[str, ...] = METHOD_ORDER
    config: EstimatorConfig = field(default_factory=EstimatorConfig)

    def __post_init__(self):
        if self.sigma2 <= 0.0:
            raise InvalidInputError("sigma2 must be positive")
        if any(l <= self.sigma2 for l in self.lambdas):
            raise InvalidInputError(
                "spike eigenvalues must exceed sigma2 (their strength is lambda - sigma2)")
        if self.trials < 1:
            raise InvalidInputError("need at least one trial")
        if self.base_seed < 0:
            raise InvalidInputError("base_seed must be non-negative")
        unknown = [m for m in self.methods if m not in ESTIMATORS]
        if unknown:
            raise InvalidInputError(f"unknown methods: {', '.join(unknown)}")
        if not self.methods:
            raise InvalidInputError("need at least one method")

    def sweep_points(self) -> list[tuple[int, int, int]]:
        """Resolve the sweep axis to concrete (sweep_value, p, n) points."""
        if self.p_list:
            if self.gamma is None or self.gamma <= 0.0:
                raise InvalidInputError("a p sweep needs a positive gamma")
            return [(p, p, max(1, round(p / self.gamma))) for p in self.p_list]
        if self.n_list:
            if self.p is None:
                raise InvalidInputError("an n sweep needs a fixed p")
            return [(n, self.p, n) for n in self.n_list]
        if self.p is None:
            raise InvalidInputError("scenario fixes neither p nor p_list")
        if self.n is not None:
            return [(self.p, self.p, self.n)]
        if self.gamma is None or self.gamma <= 0.0:
            raise InvalidInputError("need n or a positive gamma")
        return [(self.p, self.p, max(1, round(self.p / self.gamma)))]

    @property
    def q(self) -> int:
        return len(self.lambdas)

    def model(self, p: int) -> PopulationModel:
        if self.q >= p:
            raise InvalidInputError(f"{self.q} spikes need a larger p, got p={p}")
        strengths = sorted((l - self.sigma2 for l in self.lambdas), reverse=True)
        return PopulationModel(np.array(strengths), self.sigma2, p)


@dataclass(frozen=True)
class SweepRow:
    sweep_value: int
    method: str
    trials: int
    count_under: int
    count_over: int

    @property
    def p_under(self) -> float:
        return self.count_under / self.trials

    @property
    def p_over(self) -> float:
        return self.count_over / self.trials

    @property
    def p_e(self) -> float:
        return self.p_under + self.p_over


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]

    CSV_HEADER = "sweep_value,method,trials,count_under,count_over,p_under,p_over,p_e"

    def to_csv_string(self) -> str:
        lines = [self.CSV_HEADER]
        for r in self.rows:
            lines.append(f"{r.sweep_value},{r.method},{r.trials},"
                         f"{r.count_under},{r.count_over},"
                         f"{r.p_under:.6f},{r.p_over:.6f},{r.p_e:.6f}")
        return "\n".join(lines) + "\n"

    def row(self, sweep_value: int, method: str) -> SweepRow:
        for r in self.rows:
            if r.sweep_value == sweep_value and r.method == method:
                return r
        raise KeyError((sweep_value, method))


def trial_rng(base_seed: int, trial_index: int) -> np.random.Generator:
    """Counter-based stream for one trial, independent of every other.

    The two-word key keeps streams distinct across base seeds as well as
    across trials (an xor-combined single word would reuse streams between
    nearby seeds).
    """
    key = np.array([base_seed & 0xFFFFFFFFFFFFFFFF,
                    trial_index & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def generate_snapshots(model: PopulationModel, n: int,
                       rng: np.random.Generator) -> SnapshotMatrix:
    """n Gaussian observations with the model's diagonal covariance.

    Uniform draws are mapped through the package's inverse-normal kernel in
    a fixed row-major order, so the matrix depends only on the stream state.
    """
    u = rng.random(size=(model.p, n))
    z = norm_ppf_array(np.maximum(u, 2.0**-64))
    scale = np.sqrt(model.covariance_diagonal())
    return SnapshotMatrix.from_array(z * scale[:, None])


def run_trial(spec: ScenarioSpec, trial_index: int,
              p: int | None = None, n: int | None = None) -> dict[str, int]:
    """One paired trial: one draw, one spectrum, every estimator on it.

    p and n default to the scenario's own geometry, which must then resolve
    to a single point; sweeps pass each point explicitly.
    """
    if p is None or n is None:
        points = spec.sweep_points()
        if len(points) != 1:
            raise InvalidInputError("sweep scenarios must pass (p, n) explicitly")
        _, p, n = points[0]
    model = spec.model(p)
    rng = trial_rng(spec.base_seed, trial_index)
    snapshots = generate_snapshots(model, n, rng)
    spectrum = eig_sym_desc(sample_covariance(snapshots.data), n)
    return {m: ESTIMATORS[m](spectrum, spec.config).q_hat for m in spec.methods}


def _count_chunk(args) -> dict[str, list[int]]:
    spec, p, n, q_true, indices = args
    counts = {m: [0, 0] for m in spec.methods}
    for idx in indices:
        q_hats = run_trial(spec, idx, p, n)
        for m, q_hat in q_hats.items():
            if q_hat < q_true:
                counts[m][0] += 1
            elif q_hat > q_true:
                counts[m][1] += 1
    return counts


def run_sweep(spec: ScenarioSpec, jobs: int = 1) -> SweepResult:
    """Run all trials at every sweep point and aggregate misdetections.

    Aggregation is a commutative count merge, so the result is identical
    for any execution order and any number of worker processes.
    """
    q_true = spec.q
    rows = []
    for sweep_value, p, n in spec.sweep_points():
        totals = {m: [0, 0] for m in spec.methods}
        indices = list(range(spec.trials))
        if jobs > 1:
            chunks = [(spec, p, n, q_true, indices[i::jobs]) for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                partials = list(pool.map(_count_chunk, chunks))
        else:
            partials = [_count_chunk((spec, p, n, q_true, indices))]
        for partial in partials:
            for m, (under, over) in partial.items():
                totals[m][0] += under
                totals[m][1] += over
        for m in spec.methods:
            rows.append(SweepRow(sweep_value=sweep_value, method=m,
                                 trials=spec.trials, count_under=totals[m][0],
                                 count_over=totals[m][1]))
    rows.sort(key=lambda r: (r.sweep_value, r.method))
    return SweepResult(rows=tuple(rows))


def preset_scenario(name: str, trials: int | None = None, base_seed: int = 0,
                    methods: tuple[str, ...] = METHOD_ORDER,
                    full_scale: bool = False,
                    config: EstimatorConfig | None = None) -> ScenarioSpec:
    """Build a ScenarioSpec for one of the named benchmark figures."""
    if name not in _PRESETS:
        raise InvalidInputError(
            f"unknown preset {name!r}; expected one of {', '.join(PRESET_NAMES)}")
    preset = _PRESETS[name]
    if trials is None:
        trials = FULL_TRIALS if full_scale else DESK_TRIALS
    kwargs = dict(lambdas=preset["lambda"], trials=trials,
                  base_seed=base_seed, methods=methods,
                  config=config or EstimatorConfig())
    if "gamma" in preset:
        default = _FULL_P_GRID if full_scale else preset.get("desk_grid", _DESK_P_GRID)
        kwargs.update(gamma=preset["gamma"], p_list=tuple(default))
    else:
        default = _FULL_N_GRID if full_scale else _DESK_N_GRID
        kwargs.update(p=preset["p"], n_list=tuple(default))
    return ScenarioSpec(**kwargs)


def parse_scenario(text: str) -> ScenarioSpec:
    """Parse the flat key=value scenario format.

    Keys: preset, p, p_list, n, n_list, gamma, lambda, sigma2, trials, seed,
    methods.  '#' starts a comment; a preset line supplies defaults that the
    remaining keys override.
    """
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidInputError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        entries[key] = value

    def ints(value):
        return tuple(int(v) for v in value.split(",") if v.strip())

    def floats(value):
        return tuple(float(v) for v in value.split(",") if v.strip())

    known = {"preset", "p", "p_list", "n", "n_list", "gamma", "lambda",
             "sigma2", "trials", "seed", "methods"}
    for key in entries:
        if key not in known:
            raise InvalidInputError(f"unknown scenario key {key!r}")

    if "preset" in entries:
        spec = preset_scenario(entries.pop("preset"))
    else:
        spec = ScenarioSpec()

    updates = {}
    if "lambda" in entries:
        updates["lambdas"] = floats(entries["lambda"])
    if "sigma2" in entries:
        updates["sigma2"] = float(entries["sigma2"])
    if "trials" in entries:
        updates["trials"] = int(entries["trials"])
    if "seed" in entries:
        updates["base_seed"] = int(entries["seed"])
    if "methods" in entries:
        updates["methods"] = tuple(m.strip() for m in entries["methods"].split(","))
    if "gamma" in entries:
        updates["gamma"] = float(entries["gamma"])
    if "p" in entries:
        updates["p"] = int(entries["p"])
    if "n" in entries:
        value = entries["n"]
        if "," in value:
            updates["n_list"] = ints(value)
        else:
            updates["n"] = int(value)
    if "p_list" in entries:
        updates["p_list"] = ints(entries["p_list"])
    if "n_list" in entries:
        updates["n_list"] = ints(entries["n_list"])
    spec = replace(spec, **updates)
    spec.sweep_points()  # validate the geometry eagerly
    return spec
