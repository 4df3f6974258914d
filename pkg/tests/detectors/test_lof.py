"""Tests for the local outlier factor against a direct-definition oracle."""

import numpy as np
import pytest

from src.detectors.lof import (
    fit_lof,
    lof_decide,
    lof_factor,
    lof_factors,
    lof_training_factors,
    verdict_from_factor,
)
from src.errors import DetectorFitError
from src.models.detectors import LofConfig
from src.models.verdict import Verdict


def _dist(a, b):
    return float(np.sqrt(np.sum((a - b) * (a - b))))


def _reference_state(refs: np.ndarray, k: int) -> tuple[list[float], list[float]]:
    n = len(refs)
    kdist = [sorted(_dist(refs[i], refs[j]) for j in range(n) if j != i)[k - 1] for i in range(n)]
    lrd = []
    for i in range(n):
        hood = [j for j in range(n) if j != i and _dist(refs[i], refs[j]) <= kdist[i]]
        lrd.append(1.0 / np.mean([max(kdist[j], _dist(refs[i], refs[j])) for j in hood]))
    return kdist, lrd


def _oracle(refs: np.ndarray, queries: np.ndarray, k: int) -> list[float]:
    n = len(refs)
    kdist, lrd = _reference_state(refs, k)
    factors = []
    for q in queries:
        d = [_dist(q, r) for r in refs]
        kq = sorted(d)[k - 1]
        hood = [j for j in range(n) if d[j] <= kq]
        lrd_q = 1.0 / np.mean([max(kdist[j], d[j]) for j in hood])
        factors.append(np.mean([lrd[j] for j in hood]) / lrd_q)
    return factors


class TestFit:
    def test_all_duplicates_have_infinite_density(self):
        """Test that duplicate references get the infinite-density sentinel."""
        model = fit_lof(np.full((5, 2), 3.0), LofConfig(k=2))
        assert model.lrd == [None] * 5

    def test_grid_interior_density_is_inverse_spacing(self):
        """Test the density of an interior grid point."""
        spacing = 0.25
        model = fit_lof(spacing * np.arange(11.0).reshape(-1, 1), LofConfig(k=2))

        assert model.lrd[5] == pytest.approx(1 / spacing)
        assert model.k_distances[5] == pytest.approx(spacing)

    @pytest.mark.parametrize("n", [2, 3])
    def test_needs_more_than_k_samples(self, n):
        """Test that k must be below the sample count."""
        with pytest.raises(DetectorFitError):
            fit_lof(np.arange(float(n)).reshape(-1, 1), LofConfig(k=3))


class TestFactor:
    def test_three_point_reference(self):
        """Test the factor of a far query against three references."""
        model = fit_lof([[0.0], [1.0], [2.0]], LofConfig(k=2))

        # k-distances (2, 1, 2), densities (2/3, 1/2, 2/3); the query reaches {1, 2}
        assert lof_factor(model, [10.0]) == pytest.approx(119 / 24)

    def test_duplicate_query_in_duplicate_model(self):
        """Test that infinite over infinite density counts as 1."""
        model = fit_lof(np.full((5, 2), 3.0), LofConfig(k=2))
        assert lof_factor(model, [3.0, 3.0]) == pytest.approx(1.0)

    def test_matches_oracle_with_duplicates(self):
        """Test random datasets with duplicates against the direct definition."""
        rng = np.random.default_rng(17)
        for _ in range(100):
            k = int(rng.choice([2, 5, 10]))
            n = int(rng.integers(k + 3, 51))
            refs = rng.normal(size=(n, int(rng.integers(1, 4))))
            # disjoint duplicate pairs keep every k-distance positive
            slots = rng.permutation(n)[:4]
            refs[slots[1]] = refs[slots[0]]
            refs[slots[3]] = refs[slots[2]]
            queries = np.vstack([rng.normal(size=(4, refs.shape[1])), refs[slots[0]], refs[slots[2]] + 5.0])

            model = fit_lof(refs, LofConfig(k=k))

            np.testing.assert_allclose(lof_factors(model, queries), _oracle(refs, queries, k), rtol=1e-9)

    def test_grid_center_is_one(self):
        """Test that the center of a regular grid has factor 1."""
        xs, ys = np.meshgrid(np.arange(11.0), np.arange(11.0))
        grid = np.column_stack([xs.ravel(), ys.ravel()])
        model = fit_lof(grid, LofConfig(k=4))

        assert lof_factor(model, [5.0, 5.0]) == pytest.approx(1.0)
        assert lof_training_factors(model)[60] == pytest.approx(1.0)

    def test_uniform_cluster_center(self):
        """Test that the center of a uniform cluster is close to 1."""
        refs = np.random.default_rng(3).uniform(0.0, 1.0, size=(400, 2))
        model = fit_lof(refs, LofConfig(k=10))
        assert lof_factor(model, [0.5, 0.5]) == pytest.approx(1.0, abs=0.2)

    def test_translation_rotation_and_scale_invariance(self):
        """Test that factors survive a shift, an orthogonal map and a uniform scale."""
        rng = np.random.default_rng(8)
        refs = rng.normal(size=(40, 3))
        queries = rng.normal(size=(5, 3)) * 2

        base = lof_factors(fit_lof(refs, LofConfig(k=5)), queries)
        shifted = lof_factors(fit_lof(refs + 7.5, LofConfig(k=5)), queries + 7.5)
        scaled = lof_factors(fit_lof(refs * 4.0, LofConfig(k=5)), queries * 4.0)

        rotation, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        rotated = lof_factors(fit_lof(refs @ rotation, LofConfig(k=5)), queries @ rotation)

        np.testing.assert_allclose(shifted, base, rtol=1e-9)
        np.testing.assert_allclose(scaled, base, rtol=1e-9)
        np.testing.assert_allclose(rotated, base, rtol=1e-9)

    def test_training_factors_exclude_self(self):
        """Test training factors computed with each point left out."""
        refs = np.random.default_rng(21).normal(size=(25, 2))
        model = fit_lof(refs, LofConfig(k=4))

        kdist, lrd = _reference_state(refs, 4)
        expected = []
        for i in range(len(refs)):
            hood = [j for j in range(len(refs)) if j != i and _dist(refs[i], refs[j]) <= kdist[i]]
            lrd_i = 1.0 / np.mean([max(kdist[j], _dist(refs[i], refs[j])) for j in hood])
            expected.append(np.mean([lrd[j] for j in hood]) / lrd_i)

        np.testing.assert_allclose(lof_training_factors(model), expected, rtol=1e-9)


class TestDecide:
    @pytest.mark.parametrize("factor,expected", [
        (2.3, Verdict.ABNORMAL),
        (1.0, Verdict.NORMAL),
        (1.5, Verdict.NORMAL),
    ])
    def test_threshold_rule(self, factor, expected):
        """Test the strict threshold rule."""
        assert verdict_from_factor(factor, 1.5) == expected

    def test_far_query_is_abnormal(self):
        """Test that a far query is flagged at the default threshold."""
        model = fit_lof([[0.0], [1.0], [2.0]], LofConfig(k=2))
        assert lof_decide(model, [10.0], 1.5) == Verdict.ABNORMAL
        assert lof_decide(model, [1.0], 1.5) == Verdict.NORMAL
