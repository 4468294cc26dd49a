"""Fit-shaped front ends over the functional API.

Both estimators follow the scikit-learn conventions (constructor stores
hyperparameters untouched, ``fit`` learns ``*_`` attributes and returns self,
``get_params``/``set_params`` expose the constructor arguments), so they work
with ``sklearn.base.clone``, pipelines, and model-selection utilities without
this package depending on scikit-learn.
"""

from __future__ import annotations

import inspect

import numpy as np

from .core import Dataset
from .exceptions import ParameterError
from .metrics import Metric, concentration_stats, query_distances
from .pca import ccr_curve, covariance, eigen_symmetric, pcs_to_reach, spectrum_hdlss
from .validation import check_is_fitted, check_matrix, check_vector


class BaseDiagnostic:
    """Minimal estimator plumbing: parameter introspection and repr."""

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [name for name in sig.parameters if name != "self"]

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = self._param_names()
        for name, value in params.items():
            if name not in valid:
                raise ParameterError(
                    f"invalid parameter {name!r} for {type(self).__name__}; "
                    f"valid parameters: {valid}"
                )
            setattr(self, name, value)
        return self

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


class ConcentrationAnalyzer(BaseDiagnostic):
    """Measure how much a metric still discriminates on a dataset.

    Parameters
    ----------
    metric : {"minkowski", "chebyshev", "cosine"}
    k : float, order of the Minkowski norm (ignored otherwise)
    query : "centroid", "origin", or an explicit coordinate vector

    After ``fit(X)`` the summary lives in ``stats_`` with scalar shortcuts
    ``min_``, ``max_``, ``mean_``, ``variance_`` and ``rdr_`` (None when the
    relative spread is undefined). ``distances_`` holds the per-sample values
    (similarities under the cosine metric).
    """

    def __init__(self, metric: str = "minkowski", k: float = 2.0, query="centroid"):
        self.metric = metric
        self.k = k
        self.query = query

    def _metric(self) -> Metric:
        if self.metric == "minkowski":
            return Metric.minkowski(self.k)
        return Metric(self.metric)

    def _query_vector(self, x: np.ndarray) -> np.ndarray:
        if isinstance(self.query, str):
            if self.query == "origin":
                return np.zeros(x.shape[1])
            if self.query == "centroid":
                return x.mean(axis=0)
            raise ParameterError(
                f"query must be 'origin', 'centroid' or a vector, got {self.query!r}"
            )
        return check_vector(self.query, name="query", expected_length=x.shape[1])

    def fit(self, X, y=None):
        metric = self._metric()
        x = check_matrix(X, min_samples=2)
        data = Dataset(x)
        q = self._query_vector(x)
        self.query_vector_ = q
        self.distances_ = query_distances(data, q, metric)
        self.stats_ = concentration_stats(data, q, metric)
        self.min_ = self.stats_.d_min
        self.max_ = self.stats_.d_max
        self.mean_ = self.stats_.mean
        self.variance_ = self.stats_.variance
        self.rdr_ = self.stats_.rdr
        self.n_features_in_ = x.shape[1]
        return self


class SpectrumAnalyzer(BaseDiagnostic):
    """Covariance eigenvalue spectrum of a dataset, sklearn-PCA style.

    Parameters
    ----------
    method : {"auto", "dense"}
        "auto" routes wide data (more features than samples) through the Gram
        matrix of centered samples; "dense" always decomposes the full
        covariance. ``compute_vectors=True`` forces the dense route since the
        fast path does not build eigenvectors.
    compute_vectors : bool
        Accumulate eigenvectors so ``transform`` can rotate data onto the
        principal axes.

    Fitted attributes: ``eigenvalues_`` (descending), ``ccr_`` (cumulative
    contribution, None for an all-zero spectrum), ``zero_count_``, ``mean_``
    (per-feature means), ``components_`` (rows are eigenvectors, only with
    ``compute_vectors=True``), ``n_features_in_``.
    """

    def __init__(self, method: str = "auto", compute_vectors: bool = False):
        self.method = method
        self.compute_vectors = compute_vectors

    def fit(self, X, y=None):
        if self.method not in ("auto", "dense"):
            raise ParameterError(f"method must be 'auto' or 'dense', got {self.method!r}")
        x = check_matrix(X, min_samples=2)
        data = Dataset(x)
        if self.compute_vectors or self.method == "dense":
            spectrum = eigen_symmetric(covariance(data), compute_vectors=self.compute_vectors)
        else:
            spectrum = spectrum_hdlss(data)
        self.spectrum_ = spectrum
        self.eigenvalues_ = spectrum.eigenvalues
        self.ccr_ = spectrum.ccr
        self.zero_count_ = spectrum.zero_count
        self.mean_ = x.mean(axis=0)
        if spectrum.eigenvectors is not None:
            self.components_ = spectrum.eigenvectors.T
        self.n_features_in_ = x.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, ("spectrum_",))
        if not hasattr(self, "components_"):
            raise ParameterError("transform requires compute_vectors=True at fit time")
        x = check_matrix(X)
        if x.shape[1] != self.n_features_in_:
            raise ParameterError(
                f"X has {x.shape[1]} features, fit saw {self.n_features_in_}"
            )
        return (x - self.mean_) @ self.components_.T

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X, y).transform(X)

    def pcs_to_reach(self, threshold: float) -> int:
        """Leading components needed to reach the given contribution ratio."""
        check_is_fitted(self, ("spectrum_",))
        return pcs_to_reach(self.spectrum_, threshold)

    def ccr(self, ascending: bool = False) -> np.ndarray:
        check_is_fitted(self, ("spectrum_",))
        return ccr_curve(self.spectrum_, ascending=ascending)
