"""Tracy-Widom distribution (beta = 1, 2) and the edge centering/scaling.

The CDF is evaluated from an embedded table (see scripts/make_tw_table.py
for regeneration) through a shape-preserving monotone cubic interpolant,
so the interpolated CDF is itself monotone and the quantile is well
defined.  Outside the table the CDF saturates to 0 / 1; the tabulated
endpoints already carry less than 1e-9 of probability mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _tw_data
from .errors import InvalidInputError

# Below this the stored CDF sits in the denormal/underflow regime where
# float64 cannot keep consecutive values distinct.
_STRICT_FLOOR = 1e-280


def _pchip_slopes(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Fritsch-Butland tangents: monotone data give a monotone interpolant."""
    h = np.diff(x)
    d = np.diff(y) / h
    m = np.zeros_like(y)
    left, right = d[:-1], d[1:]
    mask = left * right > 0.0
    w1 = 2.0 * h[1:] + h[:-1]
    w2 = h[1:] + 2.0 * h[:-1]
    with np.errstate(divide="ignore", invalid="ignore"):
        harmonic = (w1 + w2) / (w1 / left + w2 / right)
    m[1:-1] = np.where(mask, harmonic, 0.0)

    # One-sided endpoint formula, clipped to preserve monotonicity.
    def endpoint(h0, h1, d0, d1):
        t = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1)
        if t * d0 <= 0.0:
            return 0.0
        if d0 * d1 < 0.0 and abs(t) > 3.0 * abs(d0):
            return 3.0 * d0
        return t

    m[0] = endpoint(h[0], h[1], d[0], d[1])
    m[-1] = endpoint(h[-1], h[-2], d[-1], d[-2])
    return m


@dataclass(frozen=True)
class TWTable:
    """Tabulated CDF of the Tracy-Widom law for one beta."""

    beta: int
    grid: np.ndarray
    cdf_values: np.ndarray
    _slopes: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.beta not in (1, 2):
            raise InvalidInputError(f"beta must be 1 or 2, got {self.beta}")
        grid = np.asarray(self.grid, dtype=float)
        cdf = np.asarray(self.cdf_values, dtype=float)
        if grid.ndim != 1 or grid.shape != cdf.shape or grid.size < 4:
            raise InvalidInputError("grid and cdf_values must be matching 1-D arrays")
        if not np.all(np.diff(grid) > 0.0):
            raise InvalidInputError("grid must be strictly increasing")
        if np.any(np.diff(cdf) < 0.0):
            raise InvalidInputError("cdf_values must be non-decreasing")
        # Strict monotonicity is only representable where float64 resolves
        # the tails: the far-left beta=2 tail underflows toward 0 and the
        # far-right tail saturates at 1.
        visible = (cdf > _STRICT_FLOOR) & (cdf < 1.0 - 1e-13)
        if np.any(np.diff(cdf[visible]) <= 0.0):
            raise InvalidInputError("cdf_values must be strictly increasing")
        if grid[0] > -10.0 or grid[-1] < 6.0:
            raise InvalidInputError("grid must cover at least [-10, 6]")
        if cdf[0] >= 1e-9 or cdf[-1] <= 1.0 - 1e-9:
            raise InvalidInputError("tabulated endpoints must carry <1e-9 tail mass")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "cdf_values", cdf)
        object.__setattr__(self, "_slopes", _pchip_slopes(grid, cdf))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x)
        out = np.empty_like(x)
        below = x <= self.grid[0]
        above = x >= self.grid[-1]
        out[below] = 0.0
        out[above] = 1.0
        inside = ~(below | above)
        if np.any(inside):
            xi = x[inside]
            idx = np.searchsorted(self.grid, xi, side="right") - 1
            h = self.grid[idx + 1] - self.grid[idx]
            t = (xi - self.grid[idx]) / h
            y0, y1 = self.cdf_values[idx], self.cdf_values[idx + 1]
            m0, m1 = self._slopes[idx] * h, self._slopes[idx + 1] * h
            # Evaluate the Hermite cubic as y0 plus an increment polynomial:
            # all arithmetic then happens at the increment scale, so rounding
            # cannot break monotonicity even where y1 - y0 is a few ulps.
            delta = y1 - y0
            c2 = 3.0 * delta - 2.0 * m0 - m1
            c3 = m0 + m1 - 2.0 * delta
            increment = t * (m0 + t * (c2 + t * c3))
            out[inside] = np.clip(y0 + increment, y0, y1)
        out = np.clip(out, 0.0, 1.0)
        return float(out[0]) if scalar else out


def _build_tables() -> dict[int, TWTable]:
    grid = np.array(_tw_data.GRID)
    return {
        1: TWTable(1, grid, np.array(_tw_data.CDF_BETA1)),
        2: TWTable(2, grid, np.array(_tw_data.CDF_BETA2)),
    }


_TABLES = _build_tables()


def tw_table(beta: int) -> TWTable:
    if beta not in _TABLES:
        raise InvalidInputError(f"beta must be 1 or 2, got {beta}")
    return _TABLES[beta]


def tw_cdf(x, beta: int = 1):
    """F_beta(x); accepts scalars or arrays."""
    return tw_table(beta).cdf(x)


def tw_quantile(alpha: float, beta: int = 1) -> float:
    """The threshold s(alpha) with F_beta(s) = 1 - alpha, by bisection."""
    if not 0.0 < alpha < 1.0:
        raise InvalidInputError(f"alpha must lie in (0, 1), got {alpha}")
    table = tw_table(beta)
    target = 1.0 - alpha
    lo, hi = table.grid[0], table.grid[-1]
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if table.cdf(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def centering_mu(n: int, p: int) -> float:
    """Edge centering constant for an n-sample, p-dimensional white Wishart."""
    if n < 1 or p < 1:
        raise InvalidInputError("n and p must be >= 1")
    return (math.sqrt(n - 0.5) + math.sqrt(p - 0.5)) ** 2 / n


def scaling_sigma(n: int, p: int) -> float:
    """Edge scaling constant matching centering_mu."""
    if n < 1 or p < 1:
        raise InvalidInputError("n and p must be >= 1")
    mu = centering_mu(n, p)
    return math.sqrt(mu / n) * (1.0 / math.sqrt(n - 0.5) + 1.0 / math.sqrt(p - 0.5)) ** (1.0 / 3.0)
