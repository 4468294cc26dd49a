"""Data model and deterministic data generation.

The random source is pinned to numpy's PCG64 bit generator: it is named,
seedable, and produces the same stream on every platform, which the golden-file
tests and the reproducible experiment grids depend on. All draws use the
half-open interval [s, t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .exceptions import ParameterError, ValidationError

#: Name of the pinned bit generator backing every random draw.
BIT_GENERATOR = "PCG64"

_MAX_SEED = 2**64


@dataclass(frozen=True)
class UniformSpec:
    """Parameters of an IID uniform draw on [s, t) with a fixed seed."""

    s: float
    t: float
    seed: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.s) and math.isfinite(self.t)):
            raise ParameterError("uniform bounds must be finite")
        if not self.s < self.t:
            raise ParameterError(f"uniform bounds require s < t, got s={self.s}, t={self.t}")
        if not 0 <= int(self.seed) < _MAX_SEED:
            raise ParameterError("seed must be a 64-bit unsigned integer")


def validate_dataset(values, labels=None) -> list[str]:
    """Collect every dataset invariant violation without raising.

    Accepts a raw matrix-like (plus optional labels) or an already built
    :class:`Dataset`, whose constructor guarantees an empty result. Violations
    name offending coordinates, e.g. ``"non-finite entry at row 1, column 0"``.
    """
    if isinstance(values, Dataset):
        return []
    out: list[str] = []
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2:
        return [f"values must be a 2-D matrix, got shape {arr.shape}"]
    n, d = arr.shape
    if n == 0 or d == 0:
        out.append("empty dataset")
    for i, j in np.argwhere(~np.isfinite(arr)):
        out.append(f"non-finite entry at row {int(i)}, column {int(j)}")
    if labels is not None and len(labels) != n:
        out.append(f"label list has {len(labels)} entries for {n} samples")
    return out


@dataclass(frozen=True)
class Dataset:
    """An n_samples x n_features real matrix, optionally labelled per sample.

    Immutable after construction: the stored array is a read-only copy, safe
    to share across threads.
    """

    values: np.ndarray
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float, copy=True)
        labels = tuple(str(x) for x in self.labels) if self.labels is not None else None
        problems = validate_dataset(arr, labels)
        if problems:
            raise ValidationError("invalid dataset: " + "; ".join(problems))
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "labels", labels)

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    @property
    def n_features(self) -> int:
        return self.values.shape[1]


def generate_uniform(n: int, d: int, spec: UniformSpec) -> Dataset:
    """Draw an n x d dataset of IID U(s, t) entries, bit-reproducibly.

    The same (n, d, spec) always yields the same matrix, and smaller n are
    row-prefixes of larger n under the same seed (draws fill row-major).
    """
    if n < 1 or d < 1:
        raise ParameterError(f"n and d must be >= 1, got n={n}, d={d}")
    rng = np.random.Generator(np.random.PCG64(int(spec.seed)))
    values = rng.uniform(spec.s, spec.t, size=(n, d))
    # uniform(s, t) can round up to t for draws within one ulp of 1; keep [s, t).
    hit = values >= spec.t
    if hit.any():
        values[hit] = np.nextafter(spec.t, spec.s)
    return Dataset(values)


class DensityResult(NamedTuple):
    """Sample density in linear and natural-log scale."""

    density: float
    log_density: float


def sample_density(n: int, intervals_per_feature: int, d: int) -> DensityResult:
    """Samples per feature-space cell when each of d features has m intervals.

    The linear value n / m**d is computed with exact integer powers, so it
    neither overflows nor loses the small-d values; past roughly m**d > 1e308
    it underflows cleanly to 0.0 and the log value carries the magnitude.
    """
    if n < 1 or intervals_per_feature < 1 or d < 1:
        raise ParameterError("n, intervals_per_feature and d must all be >= 1")
    log_density = math.log(n) - d * math.log(intervals_per_feature)
    if log_density < -745.0:  # below the smallest subnormal: skip the big power
        density = 0.0
    else:
        density = n / intervals_per_feature**d
    return DensityResult(density, log_density)
