import math

import numpy as np
import pytest

from dimcurse import (
    Dataset,
    DegenerateInputError,
    DimensionMismatchError,
    InsufficientDataError,
    Metric,
    ParameterError,
    chebyshev_distance,
    concentration_stats,
    cosine_similarity,
    minkowski_distance,
    pairwise_cosine_stats,
    query_distances,
)


class TestKernels:
    def test_minkowski_345_triangle(self):
        assert minkowski_distance((1, 2), (4, 6), 2) == 5.0

    def test_minkowski_manhattan(self):
        assert minkowski_distance((1, 2), (4, 6), 1) == 7.0

    @pytest.mark.parametrize("k", [1, 2, 3.5, 64])
    def test_minkowski_identity(self, k):
        v = (0.3, 0.7, 0.1)
        assert minkowski_distance(v, v, k) == 0.0

    def test_minkowski_rejects_small_k(self):
        with pytest.raises(ParameterError):
            minkowski_distance((1,), (2,), 0.5)

    def test_minkowski_rejects_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            minkowski_distance((1, 2), (1, 2, 3), 2)

    def test_minkowski_huge_k_no_overflow(self):
        # max-scaled evaluation: 1e200 ** 64 would overflow a plain sum
        assert minkowski_distance((1e200, 0.0), (0.0, 0.0), 64) == pytest.approx(1e200)

    def test_chebyshev_examples(self):
        assert chebyshev_distance((1, 2), (4, 6)) == 4.0
        assert chebyshev_distance((5, 5, 5), (5, 5, 5)) == 0.0
        assert chebyshev_distance((0, 0, 0), (0.2, 0.9, 0.4)) == 0.9

    def test_cosine_orthogonal(self):
        assert cosine_similarity((1, 0), (0, 1)) == 0.0

    def test_cosine_parallel(self):
        assert cosine_similarity((1, 1), (2, 2)) == 1.0

    def test_cosine_zero_norm_rejected(self):
        with pytest.raises(DegenerateInputError):
            cosine_similarity((1, 0), (0, 0))

    def test_metric_type_validation(self):
        with pytest.raises(ParameterError):
            Metric("euclidean")
        with pytest.raises(ParameterError):
            Metric("minkowski")  # k required
        with pytest.raises(ParameterError):
            Metric("minkowski", 0.3)
        with pytest.raises(ParameterError):
            Metric("chebyshev", 2.0)  # k forbidden
        assert Metric.minkowski(2).k == 2.0


class TestMetricProperties:
    """Metric axioms on random vectors, fixed seeds."""

    @pytest.mark.parametrize("k", [1.0, 1.5, 2.0, 3.0, 64.0])
    def test_axioms(self, k):
        rng = np.random.default_rng(int(k * 10))
        for _ in range(25):
            d = int(rng.integers(1, 12))
            a, b, c = rng.normal(size=(3, d)) * 3
            dab = minkowski_distance(a, b, k)
            assert dab >= 0.0
            assert dab == pytest.approx(minkowski_distance(b, a, k), rel=1e-12)
            assert minkowski_distance(a, a, k) == 0.0
            dac = minkowski_distance(a, c, k)
            dcb = minkowski_distance(c, b, k)
            assert dab <= dac + dcb + 1e-9

    def test_chebyshev_axioms(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            d = int(rng.integers(1, 12))
            a, b, c = rng.normal(size=(3, d))
            assert chebyshev_distance(a, b) == chebyshev_distance(b, a)
            assert chebyshev_distance(a, b) <= chebyshev_distance(a, c) + chebyshev_distance(c, b) + 1e-12

    def test_large_k_approaches_chebyshev(self):
        # gap shrinks monotonically in k; at k=64 the relative gap is at most
        # d**(1/64) - 1 (the classical norm-equivalence envelope)
        rng = np.random.default_rng(123)
        for _ in range(20):
            d = int(rng.integers(2, 33))
            a, b = rng.uniform(-5, 5, size=(2, d))
            cheb = chebyshev_distance(a, b)
            gaps = [minkowski_distance(a, b, k) - cheb for k in (2, 4, 8, 16, 64)]
            assert all(g >= -1e-12 for g in gaps)
            assert all(g2 <= g1 + 1e-12 for g1, g2 in zip(gaps, gaps[1:]))
            assert gaps[-1] <= (d ** (1 / 64) - 1) * cheb + 1e-12

    def test_cosine_scale_invariance(self):
        rng = np.random.default_rng(77)
        for _ in range(25):
            d = int(rng.integers(1, 20))
            a, b = rng.normal(size=(2, d))
            if np.linalg.norm(a) == 0 or np.linalg.norm(b) == 0:
                continue
            alpha, beta = rng.uniform(0.01, 100, size=2)
            assert cosine_similarity(alpha * a, beta * b) == pytest.approx(
                cosine_similarity(a, b), abs=1e-12
            )


class TestQueryDistances:
    def test_hand_example(self):
        data = Dataset([[3, 4], [6, 8]])
        out = query_distances(data, (0, 0), Metric.minkowski(2))
        assert out.tolist() == [5.0, 10.0]

    def test_chebyshev_zero(self):
        out = query_distances(Dataset([[1, 1]]), (1, 1), Metric.chebyshev())
        assert out.tolist() == [0.0]

    def test_wrong_query_length(self):
        with pytest.raises(DimensionMismatchError):
            query_distances(Dataset([[1, 2]]), (1, 2, 3), Metric.chebyshev())

    def test_cosine_zero_norm_sample_named(self):
        data = Dataset([[1, 0], [0, 0], [0, 1]])
        with pytest.raises(DegenerateInputError, match="sample 1"):
            query_distances(data, (1, 1), Metric.cosine())

    def test_cosine_zero_norm_query(self):
        with pytest.raises(DegenerateInputError, match="query"):
            query_distances(Dataset([[1, 0]]), (0, 0), Metric.cosine())

    @pytest.mark.parametrize(
        "metric",
        [Metric.minkowski(1), Metric.minkowski(2), Metric.minkowski(3.5), Metric.chebyshev()],
    )
    def test_matches_scalar_kernel(self, metric):
        rng = np.random.default_rng(5)
        data = Dataset(rng.uniform(-2, 2, size=(20, 6)))
        q = rng.uniform(-2, 2, size=6)
        out = query_distances(data, q, metric)
        for i in range(20):
            if metric.kind == "chebyshev":
                want = chebyshev_distance(data.values[i], q)
            else:
                want = minkowski_distance(data.values[i], q, metric.k)
            assert out[i] == pytest.approx(want, rel=1e-12)


class TestConcentrationStats:
    def test_hand_example(self):
        st = concentration_stats(Dataset([[3, 4], [6, 8]]), (0, 0), Metric.minkowski(2))
        assert (st.d_min, st.d_max, st.rdr) == (5.0, 10.0, 1.0)
        assert st.rdr_defined

    def test_cosine_zero_min_flags_undefined(self):
        st = concentration_stats(Dataset([[1, 0], [0, 1]]), (1, 0), Metric.cosine())
        assert st.d_min == 0.0
        assert st.rdr is None
        assert not st.rdr_defined

    def test_identical_rows_rdr_zero(self):
        st = concentration_stats(Dataset([[1, 1], [1, 1]]), (0, 0), Metric.minkowski(1))
        assert st.rdr == 0.0

    def test_needs_two_samples(self):
        with pytest.raises(InsufficientDataError):
            concentration_stats(Dataset([[1, 2]]), (0, 0), Metric.chebyshev())

    def test_agrees_with_bruteforce_recomputation(self):
        rng = np.random.default_rng(11)
        for metric in (Metric.minkowski(1), Metric.minkowski(2), Metric.chebyshev(), Metric.cosine()):
            data = Dataset(rng.uniform(0.1, 2, size=(30, 5)))
            q = rng.uniform(0.1, 2, size=5)
            st = concentration_stats(data, q, metric)
            vals = query_distances(data, q, metric)
            assert st.d_min == vals.min()
            assert st.d_max == vals.max()
            assert st.mean == pytest.approx(float(np.mean(vals)), rel=1e-14)
            assert st.variance == pytest.approx(float(np.mean((vals - vals.mean()) ** 2)), abs=1e-14)
            if vals.min() > 0:
                assert st.rdr == (vals.max() - vals.min()) / vals.min()


class TestPairwiseCosine:
    def test_three_vectors(self):
        st = pairwise_cosine_stats(Dataset([[1, 0], [0, 1], [1, 1]]))
        assert st.d_min == 0.0
        assert st.d_max == pytest.approx(math.sqrt(2) / 2, rel=1e-15)
        assert st.n == 3  # three unordered pairs

    def test_colinear_rows(self):
        st = pairwise_cosine_stats(Dataset([[2, 0], [3, 0]]))
        assert st.d_min == st.d_max == 1.0
        assert st.variance == 0.0

    def test_antiparallel_rows(self):
        st = pairwise_cosine_stats(Dataset([[1, 0], [-1, 0]]))
        assert st.d_min == st.d_max == -1.0

    def test_zero_norm_row_named(self):
        with pytest.raises(DegenerateInputError, match="sample 2"):
            pairwise_cosine_stats(Dataset([[1, 0], [0, 1], [0, 0]]))

    def test_needs_two_samples(self):
        with pytest.raises(InsufficientDataError):
            pairwise_cosine_stats(Dataset([[1, 0]]))

    def test_matches_scalar_kernel_over_pairs(self):
        rng = np.random.default_rng(13)
        data = Dataset(rng.normal(size=(12, 4)))
        st = pairwise_cosine_stats(data)
        sims = [
            cosine_similarity(data.values[i], data.values[j])
            for i in range(12)
            for j in range(i + 1, 12)
        ]
        assert st.n == len(sims)
        assert st.d_min == pytest.approx(min(sims), abs=1e-12)
        assert st.d_max == pytest.approx(max(sims), abs=1e-12)
        assert st.mean == pytest.approx(float(np.mean(sims)), abs=1e-12)
