"""Closed-form limits and bounds that simulations are compared against.

All functions here are total, pure, and cheap on their stated domains. The
hypotheses:

* Minkowski results assume IID U(0, 1) coordinates and a query at the origin.
* Chebyshev results assume IID U(s, t) coordinates with 0 <= s <= t and a
  query at the origin, where the distance is the largest coordinate.
* The cosine limit assumes two independent points with IID U(s, t)
  coordinates, s < t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ParameterError


@dataclass(frozen=True)
class RdrBounds:
    """Asymptotic envelope for the relative distance ratio of n points.

    ``upper / lower`` equals n(n-1)/2 exactly; both shrink as d**-0.5. The
    envelope is asymptotic in d: containment of a simulated ratio is expected
    for large dimensions (hundreds and up), not small ones.
    """

    lower: float
    upper: float
    d: int
    k: float
    n: int


def minkowski_normalized_limit(k: float) -> float:
    """Limit of distance / d**(1/k) for U(0,1) coordinates, origin query.

    Equals (1/(k+1))**(1/k); increasing in k and approaching 1.
    """
    k = float(k)
    if not (math.isfinite(k) and k >= 1):
        raise ParameterError(f"norm order must satisfy k >= 1, got {k}")
    return (1.0 / (k + 1.0)) ** (1.0 / k)


def rdr_bounds(k: float, n: int, d: int) -> RdrBounds:
    """Lower/upper envelope of the relative distance ratio at dimension d.

    lower = 2 / sqrt(pi d (2k+1)),  upper = n(n-1) / sqrt(pi d (2k+1)).
    """
    k = float(k)
    if not (math.isfinite(k) and k >= 1):
        raise ParameterError(f"norm order must satisfy k >= 1, got {k}")
    if n < 2:
        raise ParameterError(f"point count must be >= 2, got {n}")
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    root = math.sqrt(math.pi * d * (2.0 * k + 1.0))
    return RdrBounds(lower=2.0 / root, upper=n * (n - 1) / root, d=d, k=k, n=n)


def _check_chebyshev_bounds(s: float, t: float) -> None:
    if not (math.isfinite(s) and math.isfinite(t)):
        raise ParameterError("uniform bounds must be finite")
    if s < 0 or s > t:
        raise ParameterError(
            f"chebyshev predictors require 0 <= s <= t, got s={s}, t={t}"
        )


def chebyshev_expected_max(s: float, t: float, d: int) -> float:
    """Expected largest coordinate of one point with d IID U(s, t) coordinates.

    Equals (t d + s) / (d + 1): nondecreasing in d, tending to t.
    """
    _check_chebyshev_bounds(s, t)
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    return (t * d + s) / (d + 1.0)


def chebyshev_variance(s: float, t: float, d: int) -> float:
    """Variance of the largest of d IID U(s, t) coordinates.

    This is E(z^2) - E(z)^2 with E(z) = (td+s)/(d+1) and
    E(z^2) = s^2 + 2sd(t-s)/(d+1) + d(t-s)^2/(d+2), algebraically reduced to
    d (t-s)^2 / ((d+1)^2 (d+2)) to avoid the cancellation the raw difference
    hits for large d. Tends to 0 as d grows.
    """
    _check_chebyshev_bounds(s, t)
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    return d * (t - s) ** 2 / ((d + 1.0) ** 2 * (d + 2.0))


def cosine_limit(s: float, t: float) -> float:
    """High-dimension limit of the cosine similarity of two IID U(s, t) points.

    Equals 3/4 * (1 + st / (s^2 + st + t^2)); zero for symmetric ranges
    (s = -t), 3/4 for nonnegative ranges starting at 0.
    """
    if not (math.isfinite(s) and math.isfinite(t)):
        raise ParameterError("uniform bounds must be finite")
    if not s < t:
        raise ParameterError(f"cosine limit requires s < t, got s={s}, t={t}")
    denom = s * s + s * t + t * t
    return 0.75 * (1.0 + s * t / denom)


def eigen_mean_limit(n: int, var_x: float) -> float:
    """High-dimension limit of the average covariance eigenvalue.

    For n samples of IID coordinates with variance var_x, (1/d) * sum of the
    population-covariance eigenvalues tends to (n-1)/n * var_x.
    """
    if n < 2:
        raise ParameterError(f"sample count must be >= 2, got {n}")
    if not (math.isfinite(var_x) and var_x >= 0):
        raise ParameterError(f"variance must be finite and >= 0, got {var_x}")
    return (n - 1) / n * var_x
