"""Input validation helpers shared by the functional API and the estimators."""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionMismatchError, NotFittedError, ValidationError


def check_matrix(
    x,
    *,
    name: str = "X",
    min_samples: int = 1,
    min_features: int = 1,
) -> np.ndarray:
    """Coerce ``x`` to a finite 2-D float64 array.

    Raises:
        ValidationError: wrong rank, non-finite entries, or too few
            rows/columns. Non-finite errors name the first offending
            (row, column) pair.
    """
    try:
        arr = np.asarray(x, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} is not numeric: {exc}") from exc
    if arr.ndim != 2:
        raise ValidationError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    n, d = arr.shape
    if n < min_samples:
        raise ValidationError(f"{name} needs at least {min_samples} row(s), got {n}")
    if d < min_features:
        raise ValidationError(f"{name} needs at least {min_features} column(s), got {d}")
    if not np.all(np.isfinite(arr)):
        i, j = (int(v) for v in np.argwhere(~np.isfinite(arr))[0])
        raise ValidationError(f"{name} has a non-finite entry at row {i}, column {j}")
    return arr


def check_vector(x, *, name: str = "vector", expected_length: int | None = None) -> np.ndarray:
    """Coerce ``x`` to a finite 1-D float64 array, optionally of fixed length."""
    try:
        arr = np.asarray(x, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} is not numeric: {exc}") from exc
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if expected_length is not None and arr.shape[0] != expected_length:
        raise DimensionMismatchError(
            f"{name} has length {arr.shape[0]}, expected {expected_length}"
        )
    if not np.all(np.isfinite(arr)):
        i = int(np.argwhere(~np.isfinite(arr))[0][0])
        raise ValidationError(f"{name} has a non-finite entry at index {i}")
    return arr


def check_is_fitted(estimator, attributes: tuple[str, ...]) -> None:
    """Raise NotFittedError unless all fitted attributes are present."""
    missing = [a for a in attributes if not hasattr(estimator, a)]
    if missing:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit() before using "
            f"{missing[0]!r}"
        )
