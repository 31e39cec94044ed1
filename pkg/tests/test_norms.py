from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import brute_norm, random_nonzero_sequence, random_space
from morrey import (
    DomainError,
    ResourceError,
    SpaceParams,
    SparseSequence,
    Window,
    combine,
    n_max,
    norm,
    norm_naive,
    norm_prefix,
    padded_cells,
    window_value,
)

WITNESS_X = SparseSequence(1, {(0,): 1.0, (4,): 1.0})
SP121 = SpaceParams(1, 2, 1)


class TestSpaceParams:
    def test_validation(self):
        SpaceParams(1, 1, 1)
        SpaceParams(2.5, 7.5, 3)
        with pytest.raises(DomainError):
            SpaceParams(0.5, 2, 1)
        with pytest.raises(DomainError):
            SpaceParams(3, 2, 1)
        with pytest.raises(DomainError):
            SpaceParams(1, 2, 0)
        with pytest.raises(DomainError):
            SpaceParams(1, math.inf, 1)

    def test_require_strict(self):
        SpaceParams(1, 2, 1).require_strict()
        with pytest.raises(DomainError):
            SpaceParams(2, 2, 1).require_strict()


class TestWindowValue:
    def test_covering_window_of_two_unit_sites(self):
        # (n+1)^{1/q-1/p} * 2^{1/p} with n = 4, p = 1, q = 2.
        value = window_value(WITNESS_X, Window((2,), 2), SP121)
        assert value == pytest.approx(5**-0.5 * 2.0, rel=1e-12)

    def test_window_missing_support(self):
        assert window_value(WITNESS_X, Window((10,), 1), SP121) == 0.0

    def test_singleton_window_gives_absolute_value(self):
        x = SparseSequence(2, {(3, -1): -2.5})
        assert window_value(x, Window((3, -1), 0), SpaceParams(1.5, 3, 2)) == pytest.approx(2.5, rel=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            window_value(WITNESS_X, Window((0, 0), 1), SP121)


class TestNMax:
    def test_examples(self):
        assert n_max(WITNESS_X) == 2
        assert n_max(SparseSequence(1, {(7,): 3.0})) == 0
        two = SparseSequence(2, {(0, 0): 1.0, (2, 0): 1.0})
        assert n_max(two) == 1
        # radius-1 window centered (1, 0) indeed covers both sites
        w = Window((1, 0), 1)
        assert w.contains((0, 0)) and w.contains((2, 0))

    def test_zero_sequence_rejected(self):
        with pytest.raises(DomainError):
            n_max(SparseSequence(1, {}))


class TestNaiveEngine:
    def test_two_unit_sites_beyond_threshold(self):
        assert norm_naive(WITNESS_X, SP121).norm == 1.0

    def test_single_site_of_two(self):
        plus = SparseSequence(1, {(0,): 2.0})
        assert norm_naive(plus, SP121).norm == pytest.approx(2.0, rel=1e-12)

    def test_adjacent_unit_sites(self):
        x = SparseSequence(1, {(0,): 1.0, (1,): 1.0})
        expected = 2.0 / math.sqrt(3.0)
        assert norm_naive(x, SP121).norm == pytest.approx(expected, rel=1e-12)
        assert brute_norm(x, SP121) == pytest.approx(expected, rel=1e-12)

    def test_zero_sequence(self):
        res = norm_naive(SparseSequence(2, {}), SpaceParams(1, 2, 2))
        assert res.norm == 0.0
        assert res.argmax.window == Window((0, 0), 0)

    def test_matches_brute_oracle(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim, max_points=5, coord_range=3)
            sp = random_space(rng, dim, p_max=5.0)
            got = norm_naive(x, sp).norm
            assert got == pytest.approx(brute_norm(x, sp), rel=1e-12)


class TestPrefixEngine:
    def test_agrees_with_naive_on_named_cases(self):
        cases = [
            (WITNESS_X, SP121),
            (SparseSequence(1, {(0,): 2.0}), SP121),
            (SparseSequence(1, {(0,): 1.0, (1,): 1.0}), SP121),
        ]
        for x, sp in cases:
            assert norm_prefix(x, sp).norm == pytest.approx(norm_naive(x, sp).norm, rel=1e-12)

    def test_plain_lp_when_p_equals_q(self):
        x = SparseSequence(1, {(0,): 3.0, (7,): 4.0})
        assert norm_prefix(x, SpaceParams(2, 2, 1)).norm == pytest.approx(5.0, rel=1e-12)

    def test_zero_sequence(self):
        assert norm_prefix(SparseSequence(3, {}), SpaceParams(1, 2, 3)).norm == 0.0

    def test_budget_overflow_raises(self):
        x = SparseSequence(1, {(0,): 1.0, (1000,): 1.0})
        with pytest.raises(ResourceError):
            norm_prefix(x, SP121, cell_budget=100)

    def test_multidimensional_vectorized_path(self):
        rng = np.random.default_rng(22)
        for dim in (2, 3):
            for _ in range(10):
                x = random_nonzero_sequence(rng, dim, max_points=8, coord_range=4)
                sp = random_space(rng, dim)
                assert norm_prefix(x, sp).norm == pytest.approx(norm_naive(x, sp).norm, rel=1e-12)


class TestDispatch:
    def test_auto_picks_prefix_for_singleton(self):
        res = norm(SparseSequence(1, {(5,): 1.0}), SP121)
        assert res.engine == "prefix"

    def test_auto_falls_back_to_naive_on_tiny_budget(self):
        x = SparseSequence(1, {(0,): 1.0, (50,): 1.0})
        res = norm(x, SP121, cell_budget=10)
        assert res.engine == "naive"
        assert padded_cells(x) > 10

    def test_explicit_engines(self):
        assert norm(WITNESS_X, SP121, engine="naive").engine == "naive"
        assert norm(WITNESS_X, SP121, engine="prefix").engine == "prefix"
        with pytest.raises(DomainError):
            norm(WITNESS_X, SP121, engine="fancy")

    def test_engines_agree_on_random_inputs(self):
        rng = np.random.default_rng(23)
        for _ in range(60):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim)
            sp = random_space(rng, dim)
            a = norm(x, sp, engine="naive").norm
            b = norm(x, sp, engine="prefix").norm
            assert b == pytest.approx(a, rel=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            norm(WITNESS_X, SpaceParams(1, 2, 2))


class TestNormAxioms:
    def test_absolute_homogeneity(self):
        rng = np.random.default_rng(24)
        for _ in range(40):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim, max_points=6)
            sp = random_space(rng, dim)
            base = norm(x, sp).norm
            for lam in (-2.0, 0.5, 3.0):
                scaled = norm(x.scale(lam), sp).norm
                assert scaled == pytest.approx(abs(lam) * base, rel=1e-10)
            assert norm(x.scale(0.0), sp).norm == 0.0

    def test_triangle_inequality(self):
        rng = np.random.default_rng(25)
        for _ in range(40):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim, max_points=6)
            y = random_nonzero_sequence(rng, dim, max_points=6)
            sp = random_space(rng, dim)
            lhs = norm(combine(x, y, 1), sp).norm
            assert lhs <= norm(x, sp).norm + norm(y, sp).norm + 1e-10

    def test_monotone_decreasing_in_q(self):
        rng = np.random.default_rng(26)
        for _ in range(30):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim, max_points=6)
            p = float(rng.uniform(1.0, 4.0))
            q1 = float(rng.uniform(p, 6.0))
            q2 = float(rng.uniform(q1, 8.0))
            n1 = norm(x, SpaceParams(p, q1, dim)).norm
            n2 = norm(x, SpaceParams(p, q2, dim)).norm
            assert n1 >= n2 - 1e-10 * max(n1, n2)

    def test_p_equals_q_reduces_to_plain_sum(self):
        rng = np.random.default_rng(27)
        for _ in range(30):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim, max_points=8)
            p = float(rng.uniform(1.0, 6.0))
            sp = SpaceParams(p, p, dim)
            plain = math.fsum(abs(v) ** p for v in x.entries.values()) ** (1.0 / p)
            assert norm(x, sp).norm == pytest.approx(plain, rel=1e-12)


class TestArgmaxContract:
    def test_reported_window_reproduces_norm(self):
        rng = np.random.default_rng(28)
        for engine in ("naive", "prefix"):
            for _ in range(25):
                dim = int(rng.integers(1, 4))
                x = random_nonzero_sequence(rng, dim, max_points=8)
                sp = random_space(rng, dim)
                res = norm(x, sp, engine=engine)
                assert res.argmax.value == res.norm
                recomputed = window_value(x, res.argmax.window, sp)
                assert recomputed == pytest.approx(res.norm, rel=1e-12)

    def test_tie_break_prefers_smallest_radius_then_center(self):
        # Two symmetric sites give equal singleton values; both engines must
        # report the lexicographically first window.
        x = SparseSequence(1, {(-3,): 1.0, (3,): 1.0})
        for engine in ("naive", "prefix"):
            res = norm(x, SP121, engine=engine)
            assert res.argmax.window == Window((-3,), 0)


class TestRadiusBound:
    def test_wider_enumeration_never_beats_reported_norm(self):
        rng = np.random.default_rng(29)
        for _ in range(30):
            dim = int(rng.integers(1, 4))
            x = random_nonzero_sequence(rng, dim, max_points=6, coord_range=4)
            sp = random_space(rng, dim)
            base = norm_naive(x, sp)
            extended = norm_naive(x, sp, max_radius=3 * n_max(x))
            assert extended.norm == base.norm
