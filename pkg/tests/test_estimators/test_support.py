"""支撑识别测试"""
import itertools

import pytest
import numpy as np
from hypothesis import given, settings as hyp_settings, strategies as st

from src.estimators import acquire_row_support, auto_cluster, identify_common_columns_fixed


def _exhaustive_rows(observations, p_br):
    power = np.sum(np.abs(observations) ** 2, axis=(0, 1))
    best, best_power = None, -1.0
    # 按字典序枚举，功率相同时保留索引较小的子集
    for subset in itertools.combinations(range(power.size), p_br):
        captured = power[list(subset)].sum()
        if captured > best_power:
            best, best_power = subset, captured
    return np.array(best)


def _brute_force_common(gamma, p_j, p_c):
    n, j_users = gamma.shape
    counts = {index: 0 for index in range(n)}
    for j in range(j_users):
        smallest = sorted(range(n), key=lambda i: (gamma[i, j], i))[:p_j]
        for index in smallest:
            counts[index] += 1
    ranked = sorted(range(n), key=lambda i: (-counts[i], gamma[i].sum(), i))
    return np.array(sorted(ranked[:p_c]), dtype=np.int64)


class TestAcquireRowSupport:
    """公共行支撑获取测试"""

    def test_single_nonzero_row(self):
        """测试单用户单非零行"""
        observations = np.zeros((1, 6, 5), dtype=np.complex128)
        observations[0, :, 3] = 1.0
        np.testing.assert_array_equal(acquire_row_support(observations, 1), [3])

    def test_ties_prefer_lower_index(self):
        """测试功率相同时索引小者优先"""
        observations = np.ones((2, 4, 6), dtype=np.complex128)
        np.testing.assert_array_equal(acquire_row_support(observations, 3), [0, 1, 2])

    def test_noiseless_trial_matches_truth(self, generated_trial, small_config):
        """测试生成数据上的行支撑与真值一致"""
        truth, _, meas = generated_trial
        rows = acquire_row_support(meas.observations, small_config.paths_bs_ris)
        np.testing.assert_array_equal(rows, truth.true_row_support)

    @hyp_settings(max_examples=60, deadline=None)
    @given(st.integers(1, 3), st.integers(1, 12), st.data())
    def test_matches_exhaustive_search(self, users, m, data):
        """测试与穷举子集搜索一致"""
        p_br = data.draw(st.integers(1, m))
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = np.random.default_rng(seed)
        # 取整数功率制造并列
        observations = rng.integers(0, 3, size=(users, 2, m)).astype(np.complex128)

        rows = acquire_row_support(observations, p_br)

        np.testing.assert_array_equal(rows, _exhaustive_rows(observations, p_br))

    @hyp_settings(max_examples=40, deadline=None)
    @given(st.integers(1, 4), st.integers(8, 32), st.integers(2, 12), st.integers(0, 2**32 - 1))
    def test_rows_above_noise_floor_found(self, users, t, m, seed):
        """测试信号能量远高于噪声底的行总被选中"""
        rng = np.random.default_rng(seed)
        shape = (users, t, m)
        observations = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
        row = int(rng.integers(m))
        signal = rng.standard_normal((users, t)) + 1j * rng.standard_normal((users, t))
        # 信号能量为每列噪声能量标准差的50倍
        signal *= np.sqrt(50.0 * np.sqrt(users * t) / np.sum(np.abs(signal) ** 2))
        observations[:, :, row] += signal

        np.testing.assert_array_equal(acquire_row_support(observations, 1), [row])


class TestIdentifyCommonColumns:
    """已知 P_c 的公共列识别测试"""

    def test_identical_columns(self):
        """测试所有用户 γ 相同时返回 γ 最小的 P_c 个索引"""
        column = np.array([5.0, 0.1, 3.0, 0.2, 0.3, 9.0])
        gamma = np.tile(column[:, None], (1, 4))
        np.testing.assert_array_equal(identify_common_columns_fixed(gamma, 3, 2), [1, 3])

    def test_planted_common_columns(self, rng):
        """测试植入的公共列被正确识别"""
        n, j_users = 32, 6
        gamma = rng.uniform(1e3, 1e4, size=(n, j_users))
        common = [4, 9, 20]
        gamma[common, :] = 1e-3
        for j in range(j_users):
            unique = rng.choice(np.setdiff1d(np.arange(n), common), size=2, replace=False)
            gamma[unique, j] = 1e-3
        np.testing.assert_array_equal(identify_common_columns_fixed(gamma, 5, 3), common)

    def test_zero_common_columns(self, rng):
        """测试 P_c=0 返回空集"""
        result = identify_common_columns_fixed(rng.uniform(size=(8, 3)), 3, 0)
        assert result.size == 0

    @hyp_settings(max_examples=80, deadline=None)
    @given(st.integers(1, 16), st.integers(1, 4), st.data())
    def test_matches_brute_force(self, n, j_users, data):
        """测试与暴力频次计数一致"""
        p_j = data.draw(st.integers(1, n))
        p_c = data.draw(st.integers(0, p_j))
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = np.random.default_rng(seed)
        # 离散取值制造频次与 γ 和的并列
        gamma = rng.integers(1, 4, size=(n, j_users)).astype(np.float64)

        result = identify_common_columns_fixed(gamma, p_j, p_c)

        np.testing.assert_array_equal(result, _brute_force_common(gamma, p_j, p_c))


class TestAutoCluster:
    """自动聚类测试"""

    def test_all_equal(self):
        """测试 γ 全相等时每行全部成簇"""
        gamma = np.full((5, 4), 0.7)
        np.testing.assert_allclose(auto_cluster(gamma, 5.0, 5.0), gamma)

    def test_single_small_user(self):
        """测试只有一个用户 γ 很小时簇大小为1"""
        gamma = np.full((3, 4), 1e6)
        gamma[1, 2] = 1e-3
        cluster = auto_cluster(gamma, 5.0, 5.0)

        expected = np.zeros_like(gamma)
        expected[1, 2] = 1e-3
        np.testing.assert_allclose(cluster, expected)

    def test_planted_two_clusters(self):
        """测试植入的两簇结构被逐行恢复"""
        n, j_users = 6, 6
        group_a, group_b = [0, 2, 3], [1, 4, 5]
        gamma = np.full((n, j_users), 1e6)
        gamma[0, group_a] = 0.01
        gamma[2, group_a] = 0.01
        gamma[3, group_b] = 0.02
        gamma[5, group_b] = 0.02

        cluster = auto_cluster(gamma, 5.0, 5.0)

        for row, group, value in [(0, group_a, 0.01), (2, group_a, 0.01), (3, group_b, 0.02), (5, group_b, 0.02)]:
            np.testing.assert_array_equal(np.flatnonzero(cluster[row]), group)
            np.testing.assert_allclose(cluster[row, group], value)
        assert not cluster[[1, 4]].any()

    def test_prefix_mean(self):
        """测试前缀取均值"""
        gamma = np.array([[1.0, 2.0, 100.0]])
        np.testing.assert_allclose(auto_cluster(gamma, 5.0, 5.0), [[1.5, 1.5, 0.0]])

    def test_row_above_threshold_skipped(self):
        """测试行最小值超过 V₁·δ 时跳过"""
        gamma = np.array([[1.0, 1.0], [10.0, 10.0]])
        cluster = auto_cluster(gamma, 5.0, 5.0)
        assert not cluster[1].any()
