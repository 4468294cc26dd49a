"""Deterministic Monte Carlo experiment grids.

Seeding contract: every (dimension, trial) cell derives its generator seed as

    cell_seed(base_seed, dim, trial) = mix(mix(mix(base_seed) ^ dim) ^ trial)

where ``mix`` is the splitmix64 finalizer. The hash is fixed; changing it
invalidates golden files. The norm order k and the sample count n are
deliberately not part of the hash: sweeps over k reuse the same points, and
sweeps over n see prefix-nested datasets (draws fill row-major), so "more
samples" literally means a superset of the same points.

Runners execute cells sequentially in (dim, trial, n, k) order and are pure:
the same grid always produces the same row list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Dataset, UniformSpec, generate_uniform
from .exceptions import ParameterError
from .metrics import Metric, concentration_stats, pairwise_cosine_stats
from .pca import ccr_curve, spectrum_hdlss
from .theory import (
    chebyshev_expected_max,
    cosine_limit,
    eigen_mean_limit,
    minkowski_normalized_limit,
    rdr_bounds,
)

_MASK64 = (1 << 64) - 1


def _mix(z: int) -> int:
    """splitmix64 finalizer: a fixed 64-bit avalanche."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def cell_seed(base_seed: int, dim: int, trial: int) -> int:
    """Stable 64-bit seed for one (dimension, trial) cell."""
    h = _mix(int(base_seed) & _MASK64)
    h = _mix(h ^ (int(dim) & _MASK64))
    return _mix(h ^ (int(trial) & _MASK64))


@dataclass(frozen=True)
class ExperimentGrid:
    """The (dimension x trial) plan shared by all experiment runners.

    ``n`` may be a single sample count or a list of counts (a sample-size
    sweep). ``ks`` only matters to the Minkowski runner, ``(s, t)`` to the
    Chebyshev and cosine runners; the Minkowski and PCA runners always draw
    U(0, 1) coordinates, the setting their reference formulas assume.
    """

    dims: tuple[int, ...]
    n: tuple[int, ...] = (100,)
    trials: int = 8
    base_seed: int = 0
    ks: tuple[float, ...] = (2.0,)
    s: float = 0.0
    t: float = 1.0

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ParameterError("dims must not be empty")
        if any(d < 1 for d in dims):
            raise ParameterError(f"dimensions must be >= 1, got {dims}")
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise ParameterError(f"dims must be strictly ascending, got {dims}")
        ns = (int(self.n),) if np.isscalar(self.n) else tuple(int(v) for v in self.n)
        if not ns or any(v < 1 for v in ns):
            raise ParameterError(f"sample counts must be >= 1, got {ns}")
        ks = (float(self.ks),) if np.isscalar(self.ks) else tuple(float(v) for v in self.ks)
        if not ks or any(k < 1 for k in ks):
            raise ParameterError(f"norm orders must be >= 1, got {ks}")
        if self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "n", ns)
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "base_seed", int(self.base_seed) & _MASK64)


@dataclass(frozen=True)
class ExperimentRow:
    """One cell's statistics plus the matching theory values.

    Only the fields meaningful to the producing runner are set; the rest stay
    None. Theory fields depend on (dim, k, n, s, t) only, never on the trial.
    """

    dim: int
    trial: int
    n: int | None = None
    k: float | None = None
    d_min: float | None = None
    d_max: float | None = None
    rdr: float | None = None
    mean: float | None = None
    variance: float | None = None
    limit: float | None = None
    lower_bound: float | None = None
    upper_bound: float | None = None
    expected_max: float | None = None
    mean_eigenvalue: float | None = None
    zero_count: int | None = None
    ccr_descending_at_n: float | None = None
    ccr_ascending_at_gap: float | None = None


def _cells(grid: ExperimentGrid):
    for dim in grid.dims:
        for trial in range(grid.trials):
            seed = cell_seed(grid.base_seed, dim, trial)
            for n in grid.n:
                yield dim, trial, n, seed


def run_minkowski_experiment(grid: ExperimentGrid) -> list[ExperimentRow]:
    """Relative-distance-ratio concentration under L_k norms.

    Points are IID U(0, 1), the query is the origin. Each row carries the
    normalized-distance limit and the RDR envelope for its (dim, k, n).
    """
    rows = []
    for dim, trial, n, seed in _cells(grid):
        data = generate_uniform(n, dim, UniformSpec(0.0, 1.0, seed))
        origin = np.zeros(dim)
        for k in grid.ks:
            stats = concentration_stats(data, origin, Metric.minkowski(k))
            bounds = rdr_bounds(k, n, dim)
            rows.append(
                ExperimentRow(
                    dim=dim,
                    trial=trial,
                    n=n,
                    k=k,
                    d_min=stats.d_min,
                    d_max=stats.d_max,
                    rdr=stats.rdr,
                    mean=stats.mean,
                    variance=stats.variance,
                    limit=minkowski_normalized_limit(k),
                    lower_bound=bounds.lower,
                    upper_bound=bounds.upper,
                )
            )
    return rows


def run_chebyshev_experiment(grid: ExperimentGrid) -> list[ExperimentRow]:
    """Largest-coordinate distances to the origin for U(s, t) data, 0 <= s < t.

    ``expected_max`` is the single-point expectation (t*dim + s)/(dim + 1);
    the per-cell mean estimates it, the min/max trace the n-sample envelope.
    """
    if grid.s < 0 or grid.s >= grid.t:
        raise ParameterError(
            f"chebyshev experiment requires 0 <= s < t, got s={grid.s}, t={grid.t}"
        )
    rows = []
    for dim, trial, n, seed in _cells(grid):
        data = generate_uniform(n, dim, UniformSpec(grid.s, grid.t, seed))
        stats = concentration_stats(data, np.zeros(dim), Metric.chebyshev())
        rows.append(
            ExperimentRow(
                dim=dim,
                trial=trial,
                n=n,
                d_min=stats.d_min,
                d_max=stats.d_max,
                rdr=stats.rdr,
                mean=stats.mean,
                variance=stats.variance,
                expected_max=chebyshev_expected_max(grid.s, grid.t, dim),
            )
        )
    return rows


def run_cosine_experiment(grid: ExperimentGrid) -> list[ExperimentRow]:
    """Pairwise cosine similarities of U(s, t) data against their limit."""
    if grid.s >= grid.t:
        raise ParameterError(
            f"cosine experiment requires s < t, got s={grid.s}, t={grid.t}"
        )
    limit = cosine_limit(grid.s, grid.t)
    rows = []
    for dim, trial, n, seed in _cells(grid):
        data = generate_uniform(n, dim, UniformSpec(grid.s, grid.t, seed))
        stats = pairwise_cosine_stats(data)
        rows.append(
            ExperimentRow(
                dim=dim,
                trial=trial,
                n=n,
                d_min=stats.d_min,
                d_max=stats.d_max,
                rdr=stats.rdr,
                mean=stats.mean,
                variance=stats.variance,
                limit=limit,
            )
        )
    return rows


def run_pca_experiment(grid: ExperimentGrid) -> list[ExperimentRow]:
    """Covariance spectrum diagnostics for U(0, 1) data.

    Emits the average eigenvalue against its (n-1)/(12n) limit, the zero
    count, the descending contribution after n components, and the ascending
    contribution of the dim - n smallest ones (None when dim <= n).
    """
    rows = []
    for dim, trial, n, seed in _cells(grid):
        data = generate_uniform(n, dim, UniformSpec(0.0, 1.0, seed))
        spectrum = spectrum_hdlss(data)
        desc = ccr_curve(spectrum, ascending=False)
        asc = ccr_curve(spectrum, ascending=True)
        gap = dim - n
        rows.append(
            ExperimentRow(
                dim=dim,
                trial=trial,
                n=n,
                mean_eigenvalue=spectrum.total / dim,
                limit=eigen_mean_limit(n, 1.0 / 12.0),
                zero_count=spectrum.zero_count,
                ccr_descending_at_n=float(desc[min(n, dim) - 1]),
                ccr_ascending_at_gap=float(asc[gap - 1]) if gap >= 1 else None,
            )
        )
    return rows
