"""Distance and similarity kernels, and concentration statistics.

The Minkowski kernel is evaluated in max-scaled form, (max |diff|) *
(sum (|diff|/max)**k)**(1/k), so large exponents (k up to 64 and beyond)
neither overflow nor lose the dominant coordinate.

Naming note: for ``kind="cosine"`` every vector reported here is the cosine
*similarity* (inner product over the norm product). Colloquial usage often
says "cosine distance" for the same quantity; the convergence constants this
library predicts are similarity values, so that is what is stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Dataset
from .exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    InsufficientDataError,
    ParameterError,
)
from .validation import check_vector

_KINDS = ("minkowski", "chebyshev", "cosine")


@dataclass(frozen=True)
class Metric:
    """A distance/similarity kind plus its order k (Minkowski only)."""

    kind: str
    k: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown metric kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind == "minkowski":
            if self.k is None:
                raise ParameterError("minkowski metric requires k")
            if not (math.isfinite(self.k) and self.k >= 1):
                raise ParameterError(f"minkowski order must satisfy k >= 1, got {self.k}")
        elif self.k is not None:
            raise ParameterError(f"metric kind {self.kind!r} takes no k")

    @classmethod
    def minkowski(cls, k: float) -> "Metric":
        return cls("minkowski", float(k))

    @classmethod
    def chebyshev(cls) -> "Metric":
        return cls("chebyshev")

    @classmethod
    def cosine(cls) -> "Metric":
        return cls("cosine")


@dataclass(frozen=True)
class ConcentrationStats:
    """Summary of the metric values between a point set and a query.

    ``rdr`` is the relative spread (d_max - d_min) / d_min, the contrast
    measure that collapses to 0 when distances concentrate. It is None
    (undefined) whenever d_min <= 0: for distances that means a zero minimum,
    for cosine similarities that the minimum is not positive.

    ``variance`` is the population variance (divide by n).
    ``n`` counts the summarized values: the sample count for query statistics,
    the pair count for pairwise statistics.
    """

    d: int
    n: int
    d_min: float
    d_max: float
    mean: float
    variance: float
    rdr: float | None

    @property
    def rdr_defined(self) -> bool:
        return self.rdr is not None


def minkowski_distance(a, b, k: float) -> float:
    """L_k norm of a - b: (sum |a_i - b_i|**k)**(1/k), for k >= 1."""
    k = float(k)
    if not (math.isfinite(k) and k >= 1):
        raise ParameterError(f"minkowski order must satisfy k >= 1, got {k}")
    av = check_vector(a, name="a")
    bv = check_vector(b, name="b", expected_length=av.shape[0])
    absd = np.abs(av - bv)
    m = float(absd.max(initial=0.0))
    if m == 0.0:
        return 0.0
    return m * float(np.sum((absd / m) ** k)) ** (1.0 / k)


def chebyshev_distance(a, b) -> float:
    """Largest absolute coordinate difference between a and b."""
    av = check_vector(a, name="a")
    bv = check_vector(b, name="b", expected_length=av.shape[0])
    return float(np.abs(av - bv).max(initial=0.0))


def cosine_similarity(a, b) -> float:
    """Inner product of a and b over the product of their euclidean norms.

    Clamped to [-1, 1] to absorb rounding. Raises DegenerateInputError when
    either vector has zero norm.
    """
    av = check_vector(a, name="a")
    bv = check_vector(b, name="b", expected_length=av.shape[0])
    na2 = float(av @ av)
    nb2 = float(bv @ bv)
    if na2 == 0.0 or nb2 == 0.0:
        which = "a" if na2 == 0.0 else "b"
        raise DegenerateInputError(f"cosine similarity undefined: vector {which} has zero norm")
    # sqrt of the product, not product of sqrts: exact when na2 * nb2 is a square
    return float(np.clip(float(av @ bv) / math.sqrt(na2 * nb2), -1.0, 1.0))


def query_distances(data: Dataset, q, metric: Metric) -> np.ndarray:
    """Metric value between every sample and the query point.

    For ``kind="cosine"`` the returned values are similarities. Degenerate
    samples (zero norm under cosine) are reported with their row index.
    """
    x = data.values
    qv = check_vector(q, name="query")
    if qv.shape[0] != data.n_features:
        raise DimensionMismatchError(
            f"query has length {qv.shape[0]} but the dataset has {data.n_features} features"
        )
    if metric.kind == "cosine":
        norms2 = np.einsum("ij,ij->i", x, x)
        qn2 = float(qv @ qv)
        if qn2 == 0.0:
            raise DegenerateInputError("cosine similarity undefined: query has zero norm")
        zero = np.flatnonzero(norms2 == 0.0)
        if zero.size:
            raise DegenerateInputError(
                f"cosine similarity undefined: sample {int(zero[0])} has zero norm"
            )
        return np.clip((x @ qv) / np.sqrt(norms2 * qn2), -1.0, 1.0)
    diffs = np.abs(x - qv)
    if metric.kind == "chebyshev":
        return diffs.max(axis=1)
    k = float(metric.k)  # type: ignore[arg-type]
    m = diffs.max(axis=1)
    out = np.zeros(data.n_samples)
    nz = m > 0.0
    if np.any(nz):
        scaled = diffs[nz] / m[nz, None]
        out[nz] = m[nz] * np.sum(scaled**k, axis=1) ** (1.0 / k)
    return out


def _stats_from_values(values: np.ndarray, d: int) -> ConcentrationStats:
    d_min = float(values.min())
    d_max = float(values.max())
    rdr = (d_max - d_min) / d_min if d_min > 0.0 else None
    return ConcentrationStats(
        d=d,
        n=int(values.size),
        d_min=d_min,
        d_max=d_max,
        mean=float(values.mean()),
        variance=float(values.var()),
        rdr=rdr,
    )


def concentration_stats(data: Dataset, q, metric: Metric) -> ConcentrationStats:
    """Min/max/mean/variance and relative spread of the query distances."""
    if data.n_samples < 2:
        raise InsufficientDataError(
            f"concentration statistics need at least 2 samples, got {data.n_samples}"
        )
    return _stats_from_values(query_distances(data, q, metric), data.n_features)


def pairwise_cosine_stats(data: Dataset) -> ConcentrationStats:
    """Concentration statistics over all n(n-1)/2 unordered pair similarities."""
    if data.n_samples < 2:
        raise InsufficientDataError(
            f"pairwise statistics need at least 2 samples, got {data.n_samples}"
        )
    x = data.values
    norms = np.linalg.norm(x, axis=1)
    zero = np.flatnonzero(norms == 0.0)
    if zero.size:
        raise DegenerateInputError(
            f"cosine similarity undefined: sample {int(zero[0])} has zero norm"
        )
    unit = x / norms[:, None]
    gram = unit @ unit.T
    iu = np.triu_indices(data.n_samples, k=1)
    sims = np.clip(gram[iu], -1.0, 1.0)
    return _stats_from_values(sims, data.n_features)
