"""Population covariance, symmetric eigendecomposition, and spectrum diagnostics.

Layout convention: datasets store samples as rows and features as columns, so
the population covariance is C = Xc' Xc / n for the column-centered matrix Xc.
The 1/n normalization (not 1/(n-1)) is deliberate; the (n-1)/n factor in
:func:`dimcurse.theory.eigen_mean_limit` depends on it.

The eigensolver is a cyclic Jacobi iteration: sweeps of plane rotations that
annihilate off-diagonal entries until the off-diagonal Frobenius norm falls
below 1e-12 of the input's Frobenius norm. Jacobi is slower than
tridiagonalization but simple, robust, and accurate on symmetric matrices of
the sizes this library meets (up to ~2000 x 2000). For wide data (more
features than samples) :func:`spectrum_hdlss` goes through the n x n Gram
matrix of centered samples, whose eigenvalues are the nonzero covariance
eigenvalues, and pads the exact zeros, keeping the cost O(n^3 + d n^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Dataset
from .exceptions import (
    DegenerateInputError,
    InsufficientDataError,
    NumericalFailureError,
    ParameterError,
    ValidationError,
)

#: Eigenvalues below this fraction of the largest one count as zero.
ZERO_EIGENVALUE_RTOL = 1e-10

#: Off-diagonal Frobenius norm target, relative to the input Frobenius norm.
JACOBI_RTOL = 1e-12

#: Hard cap on Jacobi sweeps before declaring non-convergence.
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenSpectrum:
    """Descending eigenvalues of a covariance matrix plus derived diagnostics.

    ``ccr`` and ``zero_count`` are derived at construction: ccr[j] is the sum
    of the first j+1 eigenvalues over the total (None when the spectrum sums
    to zero), zero_count counts eigenvalues below ZERO_EIGENVALUE_RTOL of the
    largest. ``eigenvectors``, when requested, holds orthonormal columns
    aligned with ``eigenvalues``.

    Eigenvalues of positive semidefinite input are nonnegative up to rounding;
    the solver clamps negatives within the zero band to exact zeros.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    ccr: np.ndarray | None = field(init=False, default=None)
    zero_count: int = field(init=False, default=0)

    def __post_init__(self) -> None:
        vals = np.array(self.eigenvalues, dtype=float)
        if vals.ndim != 1:
            raise ValidationError(f"eigenvalues must be a vector, got shape {vals.shape}")
        if not np.all(np.isfinite(vals)):
            raise ValidationError("eigenvalues must be finite")
        if vals.size > 1 and np.any(np.diff(vals) > 0):
            raise ValidationError("eigenvalues must be sorted in nonincreasing order")
        vals.setflags(write=False)
        cs = np.cumsum(vals)
        total = float(cs[-1]) if cs.size else 0.0
        ccr = None
        if total > 0.0:
            ccr = cs / total
            ccr.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "ccr", ccr)
        object.__setattr__(self, "zero_count", _count_zero(vals))

    @property
    def total(self) -> float:
        return float(self.eigenvalues.sum())

    def __len__(self) -> int:
        return int(self.eigenvalues.shape[0])


def covariance(data: Dataset) -> np.ndarray:
    """Population covariance matrix (features x features, 1/n normalization)."""
    if data.n_samples < 2:
        raise InsufficientDataError(
            f"covariance needs at least 2 samples, got {data.n_samples}"
        )
    x = data.values
    xc = x - x.mean(axis=0)
    c = (xc.T @ xc) / data.n_samples
    return (c + c.T) * 0.5  # kill matmul rounding asymmetry


def _jacobi(a: np.ndarray, compute_vectors: bool, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Diagonalize a symmetric matrix in place by cyclic plane rotations.

    Returns (eigenvalues, eigenvectors-or-None), unsorted. The caller owns
    ``a`` (it is destroyed). Raises NumericalFailureError when the off-diagonal
    mass has not reached JACOBI_RTOL x the initial Frobenius norm within
    ``max_sweeps`` sweeps.
    """
    d = a.shape[0]
    v = np.eye(d) if compute_vectors else None
    fro0 = float(np.linalg.norm(a))
    if d < 2 or fro0 == 0.0:
        return np.diagonal(a).copy(), v
    target = JACOBI_RTOL * fro0
    # Entries at or below this can never push the off-norm back above target.
    skip = target / d
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diagonal(a))))
        if off < target:
            return np.diagonal(a).copy(), v
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = np.copysign(1.0, tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q]
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                # closed-form block results are exact; the rotated ones carry
                # the c/s rounding
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q]
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    off = float(np.linalg.norm(a - np.diag(np.diagonal(a))))
    if off < target:
        return np.diagonal(a).copy(), v
    raise NumericalFailureError(
        f"jacobi iteration did not converge after {max_sweeps} sweeps "
        f"(off-diagonal norm {off:.3e}, target {target:.3e})"
    )


def _count_zero(vals: np.ndarray) -> int:
    if vals.size == 0:
        return 0
    lam_max = float(vals.max())
    if lam_max <= 0.0:
        return int(np.count_nonzero(vals == 0.0))
    return int(np.count_nonzero(vals < ZERO_EIGENVALUE_RTOL * lam_max))


def _build_spectrum(values: np.ndarray, vectors: np.ndarray | None = None) -> EigenSpectrum:
    """Sort descending, clamp the negative zero band, and wrap up."""
    vals = np.asarray(values, dtype=float).copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    if vectors is not None:
        vectors = np.ascontiguousarray(vectors[:, order])
        vectors.setflags(write=False)
    lam_max = float(vals[0]) if vals.size else 0.0
    if lam_max > 0.0:
        band = (vals < 0.0) & (vals >= -ZERO_EIGENVALUE_RTOL * lam_max)
        vals[band] = 0.0
    return EigenSpectrum(eigenvalues=vals, eigenvectors=vectors)


def eigen_symmetric(m, *, compute_vectors: bool = False) -> EigenSpectrum:
    """Full spectrum of a symmetric matrix via cyclic Jacobi rotations.

    Input must be square, finite, and symmetric within 1e-12 relative to its
    largest entry. Set ``compute_vectors`` to accumulate the (orthonormal)
    eigenvector matrix; spectra-only callers skip that cost.
    """
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"matrix must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("matrix has non-finite entries")
    amax = float(np.abs(arr).max(initial=0.0))
    asym = float(np.abs(arr - arr.T).max(initial=0.0))
    if asym > 1e-12 * amax:
        raise ValidationError(
            f"matrix is not symmetric: max |A - A'| = {asym:.3e} "
            f"exceeds 1e-12 x max |A| = {1e-12 * amax:.3e}"
        )
    work = (arr + arr.T) * 0.5
    vals, vecs = _jacobi(work, compute_vectors)
    return _build_spectrum(vals, vecs)


def spectrum_hdlss(data: Dataset) -> EigenSpectrum:
    """Covariance spectrum with a fast path for wide data (d > n).

    When the dataset has more features than samples the spectrum is taken
    from the n x n Gram matrix of centered samples and padded with exactly
    d - n zero eigenvalues; the result matches the dense route. Narrow data
    delegates to the dense route. Eigenvectors are never accumulated here.
    """
    if data.n_samples < 2:
        raise InsufficientDataError(
            f"covariance needs at least 2 samples, got {data.n_samples}"
        )
    n, d = data.n_samples, data.n_features
    if d <= n:
        return eigen_symmetric(covariance(data))
    x = data.values
    xc = x - x.mean(axis=0)
    g = (xc @ xc.T) / n
    g = (g + g.T) * 0.5
    vals, _ = _jacobi(g, compute_vectors=False)
    return _build_spectrum(np.concatenate([vals, np.zeros(d - n)]))


def ccr_curve(spectrum: EigenSpectrum, ascending: bool = False) -> np.ndarray:
    """Cumulative eigenvalue contribution in descending or ascending order."""
    vals = spectrum.eigenvalues[::-1] if ascending else spectrum.eigenvalues
    cs = np.cumsum(vals)
    total = float(cs[-1]) if cs.size else 0.0
    if total <= 0.0:
        raise DegenerateInputError("cumulative contribution undefined: spectrum sums to zero")
    return cs / total


def zero_eigenvalue_count(spectrum: EigenSpectrum) -> int:
    """Eigenvalues below ZERO_EIGENVALUE_RTOL of the largest one.

    An identically zero spectrum counts in full.
    """
    return _count_zero(spectrum.eigenvalues)


def pcs_to_reach(spectrum: EigenSpectrum, threshold: float) -> int:
    """Smallest number of leading components whose contribution reaches threshold."""
    if not 0.0 < threshold <= 1.0:
        raise ParameterError(f"threshold must be in (0, 1], got {threshold}")
    ccr = ccr_curve(spectrum, ascending=False)
    return int(np.searchsorted(ccr, threshold, side="left")) + 1


def smallest_contribution_curve(data: Dataset) -> np.ndarray:
    """Share of the smallest eigenvalue in the leading-feature covariances.

    Element i is lambda_min / sum(lambda) for the covariance of the first
    i+1 features (the dataset's native column order; the curve depends on
    it). Eigenvalue interlacing makes the curve nonincreasing.
    """
    c = covariance(data)
    d = data.n_features
    out = np.empty(d)
    for dp in range(1, d + 1):
        sub = np.array(c[:dp, :dp])
        spectrum = _build_spectrum(_jacobi(sub, compute_vectors=False)[0])
        total = spectrum.total
        if total <= 0.0:
            raise DegenerateInputError(
                f"the first {dp} feature(s) have zero total variance"
            )
        out[dp - 1] = float(spectrum.eigenvalues[-1]) / total
    return out
