"""多径参数采样测试"""
import pytest
import numpy as np
from hypothesis import given, settings as hyp_settings, strategies as st

from src.channel import (
    Scenario,
    SystemConfig,
    sample_paths,
    sample_paths_scenario1,
    sample_paths_scenario2,
)
from src.utils.errors import GenerationError


def _scenario2(users, clusters, **update):
    return SystemConfig(bs_rows=4, bs_cols=4, ris_rows=8, ris_cols=8, users=users,
                        scenario=Scenario.TWO, clusters=clusters, **update)


def _common_to_all(paths):
    shared = set(paths.user_arrivals[0].tolist())
    for row in paths.user_arrivals[1:]:
        shared &= set(row.tolist())
    return shared


class TestScenarioOne:
    """场景1采样测试"""

    def test_shapes(self, desk_config, rng):
        """测试输出形状"""
        paths = sample_paths_scenario1(desk_config, rng)
        assert paths.bs_gains.shape == (5,)
        assert paths.user_arrivals.shape == (8, 10)
        assert paths.user_gains.shape == (8, 10)
        assert paths.users == 8

    def test_common_frequencies_shared_by_all(self, desk_config, rng):
        """测试恰有 P_c 个频率被所有用户共享"""
        paths = sample_paths_scenario1(desk_config, rng)
        shared = set(paths.user_arrivals[0])
        for row in paths.user_arrivals[1:]:
            shared &= set(row)
        assert len(shared) == desk_config.common_columns
        assert shared == set(paths.cluster_shared[0].tolist())

    def test_user_frequencies_distinct(self, desk_config, rng):
        """测试每个用户的频率互异"""
        paths = sample_paths_scenario1(desk_config, rng)
        for row in paths.user_arrivals:
            assert np.unique(row).size == desk_config.paths_ris_user

    def test_bs_angles_distinct(self, desk_config, rng):
        """测试BS角度互异"""
        paths = sample_paths_scenario1(desk_config, rng)
        assert np.unique(paths.bs_angles).size == desk_config.paths_bs_ris

    def test_zero_common(self, rng):
        """测试 P_c=0"""
        cfg = SystemConfig(bs_rows=4, bs_cols=4, ris_rows=8, ris_cols=8, users=4, common_columns=0)
        paths = sample_paths_scenario1(cfg, rng)
        assert paths.cluster_shared[0].size == 0

    def test_full_overlap(self, rng):
        """测试 P_c=P_j 时所有用户频率相同"""
        cfg = SystemConfig(bs_rows=4, bs_cols=4, ris_rows=8, ris_cols=8, users=4,
                           paths_ris_user=4, common_columns=4)
        paths = sample_paths_scenario1(cfg, rng)
        for row in paths.user_arrivals:
            assert set(row) == set(paths.user_arrivals[0])

    def test_exhausts_pool(self, rng):
        """测试独有频率恰好用尽候选集合"""
        cfg = SystemConfig(bs_rows=2, bs_cols=2, ris_rows=2, ris_cols=2, users=2,
                           paths_bs_ris=1, paths_ris_user=4, common_columns=1)
        paths = sample_paths_scenario1(cfg, rng)
        assert paths.user_arrivals.shape == (2, 4)

    def test_wrong_scenario_rejected(self, desk_config_scenario2, rng):
        """测试场景不符时报错"""
        with pytest.raises(GenerationError):
            sample_paths_scenario1(desk_config_scenario2, rng)


class TestScenarioTwo:
    """场景2采样测试"""

    def test_every_cluster_nonempty(self, desk_config_scenario2, rng):
        """测试每个簇非空"""
        for _ in range(20):
            paths = sample_paths_scenario2(desk_config_scenario2, rng)
            assert np.unique(paths.cluster_of).size == desk_config_scenario2.clusters

    def test_cluster_members_share(self, desk_config_scenario2, rng):
        """测试同簇用户共享簇内频率"""
        paths = sample_paths_scenario2(desk_config_scenario2, rng)
        for j, k in enumerate(paths.cluster_of):
            assert set(paths.cluster_shared[k]) <= set(paths.user_arrivals[j])

    def test_shared_sets_disjoint(self, desk_config_scenario2, rng):
        """测试所有共享集合两两不相交"""
        paths = sample_paths_scenario2(desk_config_scenario2, rng)
        everything = np.concatenate(paths.cluster_shared + paths.cross_shared)
        assert np.unique(everything).size == everything.size

    def test_cross_shared_only_in_adjacent_clusters(self, desk_config_scenario2, rng):
        """测试相邻簇共享频率只出现在对应两个簇的用户中"""
        cfg = desk_config_scenario2.model_copy(update={"cross_cluster_prob": 1.0})
        paths = sample_paths_scenario2(cfg, rng)
        for k, shared in enumerate(paths.cross_shared):
            for j, cluster in enumerate(paths.cluster_of):
                present = set(shared) & set(paths.user_arrivals[j])
                if cluster in (k, k + 1):
                    assert present == set(shared)
                else:
                    assert not present

    def test_user_frequencies_distinct(self, desk_config_scenario2, rng):
        """测试每个用户的频率互异且为 P_j 个"""
        paths = sample_paths_scenario2(desk_config_scenario2, rng)
        for row in paths.user_arrivals:
            assert np.unique(row).size == desk_config_scenario2.paths_ris_user

    def test_no_cross_sharing(self, desk_config_scenario2, rng):
        """测试 p_cross=0 时没有相邻簇共享"""
        cfg = desk_config_scenario2.model_copy(update={"cross_cluster_prob": 0.0})
        paths = sample_paths_scenario2(cfg, rng)
        assert all(s.size == 0 for s in paths.cross_shared)

    def test_dispatch(self, desk_config, desk_config_scenario2, rng):
        """测试按场景分派"""
        assert sample_paths(desk_config, rng).cluster_of is None
        assert sample_paths(desk_config_scenario2, rng).cluster_of is not None


class TestScenarioTwoLimits:
    """场景2的簇数极限与全体公共频率"""

    @hyp_settings(max_examples=30, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 2**32 - 1))
    def test_single_cluster_reduces_to_scenario_one(self, users, seed):
        """测试 K=1 时全部用户共享簇内频率，与 P_c=v 的场景1一致"""
        cfg = _scenario2(users, 1)
        paths = sample_paths_scenario2(cfg, np.random.default_rng(seed))

        np.testing.assert_array_equal(paths.cluster_of, np.zeros(users))
        assert paths.cross_shared == []
        shared = set(paths.cluster_shared[0].tolist())
        assert 1 <= len(shared) <= cfg.paths_ris_user
        assert shared <= _common_to_all(paths)
        for row in paths.user_arrivals:
            assert np.unique(row).size == cfg.paths_ris_user
            # 独有频率不与共享频率重合
            assert len(set(row.tolist()) - shared) == cfg.paths_ris_user - len(shared)

    @hyp_settings(max_examples=30, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2**32 - 1))
    def test_singleton_clusters(self, users, seed):
        """测试 K=J 时每簇一个用户，跨用户共享只来自相邻簇"""
        cfg = _scenario2(users, users, paths_ris_user=4)
        paths = sample_paths_scenario2(cfg, np.random.default_rng(seed))

        np.testing.assert_array_equal(np.sort(paths.cluster_of), np.arange(users))
        member = {int(k): j for j, k in enumerate(paths.cluster_of)}
        for k, shared in enumerate(paths.cluster_shared):
            for j in range(users):
                present = set(shared.tolist()) & set(paths.user_arrivals[j].tolist())
                assert present == (set(shared.tolist()) if j == member[k] else set())

    @hyp_settings(max_examples=30, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2**32 - 1))
    def test_singleton_clusters_without_cross_sharing(self, users, seed):
        """测试 K=J 且 p_cross=0 时所有共享频率都只属于一个用户"""
        cfg = _scenario2(users, users, paths_ris_user=4, cross_cluster_prob=0.0)
        paths = sample_paths_scenario2(cfg, np.random.default_rng(seed))

        pool = np.concatenate(paths.cluster_shared)
        holders = [sum(freq in row for row in paths.user_arrivals) for freq in pool]
        assert holders == [1] * pool.size

    def test_no_frequency_common_to_all_users(self, rng):
        """测试 K=3、J=16 时没有被全部用户共享的频率"""
        cfg = _scenario2(16, 3)
        for _ in range(50):
            paths = sample_paths_scenario2(cfg, rng)
            assert all(np.unique(row).size == cfg.paths_ris_user for row in paths.user_arrivals)
            assert _common_to_all(paths) == set()
