"""
多径参数采样
两种共享场景下的网格角度、路径增益与簇划分
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.utils.errors import GenerationError
from .config import Scenario, SystemConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathEnsemble:
    """
    一次信道实现的全部多径参数

    角度与频率均以扁平网格索引表示：BS侧为 [0, M)，RIS侧为 [0, N)。
    """
    bs_gains: np.ndarray          # (P_BR,) complex
    bs_angles: np.ndarray         # (P_BR,) BS网格索引，互异
    ris_departure: np.ndarray     # (P_BR,) RIS出射频率
    user_gains: np.ndarray        # (J, P_j) complex
    user_arrivals: np.ndarray     # (J, P_j) RIS入射频率，用户内互异
    cluster_of: Optional[np.ndarray] = None                  # (J,) 场景2簇编号
    cluster_shared: List[np.ndarray] = field(default_factory=list)  # 每簇共享频率
    cross_shared: List[np.ndarray] = field(default_factory=list)    # 相邻簇 (k,k+1) 共享频率

    @property
    def users(self) -> int:
        return self.user_arrivals.shape[0]


def _complex_gaussian(rng: np.random.Generator, variance: float, size) -> np.ndarray:
    scale = np.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))

def _draw_distinct(rng: np.random.Generator, pool: np.ndarray, count: int, what: str) -> np.ndarray:
    if count > pool.size:
        raise GenerationError(f"{what}: 需要 {count} 个互异索引，但可选只有 {pool.size} 个")
    if count == 0:
        return np.empty(0, dtype=np.int64)
    return rng.choice(pool, size=count, replace=False).astype(np.int64)

def _sample_bs_ris(cfg: SystemConfig, rng: np.random.Generator):
    bs_angles = _draw_distinct(rng, np.arange(cfg.bs_antennas), cfg.paths_bs_ris, "BS角度")
    departure = _draw_distinct(rng, np.arange(cfg.ris_elements), cfg.paths_bs_ris, "RIS出射频率")
    gains = _complex_gaussian(rng, cfg.gain_variance_bs_ris(), cfg.paths_bs_ris)
    return gains, bs_angles, departure

def _fill_unique(rng: np.random.Generator, cfg: SystemConfig, fixed: np.ndarray,
                 excluded: np.ndarray) -> np.ndarray:
    """在排除共享频率后补齐到 P_j 条用户独有路径"""
    pool = np.setdiff1d(np.arange(cfg.ris_elements), excluded)
    unique = _draw_distinct(rng, pool, cfg.paths_ris_user - fixed.size, "用户独有频率")
    return np.concatenate([fixed, unique])

def sample_paths_scenario1(cfg: SystemConfig, rng: np.random.Generator) -> PathEnsemble:
    """
    场景1：P_c 个入射频率被所有用户共享，其余 P_j−P_c 个各用户独立采样

    Args:
        cfg: 系统配置（scenario 必须为 ONE）
        rng: 随机数流

    Returns:
        PathEnsemble
    """
    if cfg.scenario != Scenario.ONE:
        raise GenerationError(f"sample_paths_scenario1 需要场景1，实际为 {cfg.scenario}")

    bs_gains, bs_angles, departure = _sample_bs_ris(cfg, rng)
    shared = _draw_distinct(rng, np.arange(cfg.ris_elements), cfg.common_columns, "公共频率")

    arrivals = np.empty((cfg.users, cfg.paths_ris_user), dtype=np.int64)
    for j in range(cfg.users):
        arrivals[j] = _fill_unique(rng, cfg, shared, shared)
    user_gains = _complex_gaussian(rng, cfg.gain_variance_ris_user(), (cfg.users, cfg.paths_ris_user))

    logger.debug(f"场景1路径采样完成: P_BR={cfg.paths_bs_ris}, P_j={cfg.paths_ris_user}, P_c={cfg.common_columns}")
    return PathEnsemble(
        bs_gains=bs_gains,
        bs_angles=bs_angles,
        ris_departure=departure,
        user_gains=user_gains,
        user_arrivals=arrivals,
        cluster_shared=[shared],
    )

def _assign_clusters(cfg: SystemConfig, rng: np.random.Generator) -> np.ndarray:
    # 均匀随机分簇，出现空簇则重抽
    for _ in range(10_000):
        assignment = rng.integers(0, cfg.clusters, size=cfg.users)
        if np.unique(assignment).size == cfg.clusters:
            return assignment
    raise GenerationError(f"无法把 {cfg.users} 个用户分成 {cfg.clusters} 个非空簇")

def sample_paths_scenario2(cfg: SystemConfig, rng: np.random.Generator) -> PathEnsemble:
    """
    场景2：用户随机分为K簇

    - 簇内共享 v ~ U[1, cluster_shared_max] 个入射频率
    - 相邻簇 (k, k+1) 以概率 cross_cluster_prob 额外共享若干频率
    - 其余频率为用户独有
    所有共享频率集合两两不相交，独有频率从共享频率之外抽取。
    """
    if cfg.scenario != Scenario.TWO:
        raise GenerationError(f"sample_paths_scenario2 需要场景2，实际为 {cfg.scenario}")

    bs_gains, bs_angles, departure = _sample_bs_ris(cfg, rng)
    cluster_of = _assign_clusters(cfg, rng)
    shared_max = cfg.cluster_shared_max or cfg.paths_ris_user

    shared_counts = rng.integers(1, shared_max + 1, size=cfg.clusters)
    budget = cfg.paths_ris_user - shared_counts
    cross_counts = np.zeros(max(cfg.clusters - 1, 0), dtype=np.int64)
    for k in range(cfg.clusters - 1):
        available = min(budget[k], budget[k + 1])
        if available >= 1 and rng.random() < cfg.cross_cluster_prob:
            cross_counts[k] = rng.integers(1, available + 1)
            budget[k] -= cross_counts[k]
            budget[k + 1] -= cross_counts[k]

    # 一次性抽取所有共享频率，保证互不相交
    total_shared = int(shared_counts.sum() + cross_counts.sum())
    pool = _draw_distinct(rng, np.arange(cfg.ris_elements), total_shared, "簇共享频率")
    offsets = np.cumsum(np.concatenate([[0], shared_counts, cross_counts]))
    cluster_shared = [pool[offsets[k]:offsets[k + 1]] for k in range(cfg.clusters)]
    cross_shared = [pool[offsets[cfg.clusters + k]:offsets[cfg.clusters + k + 1]]
                    for k in range(cfg.clusters - 1)]

    arrivals = np.empty((cfg.users, cfg.paths_ris_user), dtype=np.int64)
    for j in range(cfg.users):
        k = cluster_of[j]
        parts = [cluster_shared[k]]
        if k > 0:
            parts.append(cross_shared[k - 1])
        if k < cfg.clusters - 1:
            parts.append(cross_shared[k])
        fixed = np.concatenate(parts)
        arrivals[j] = _fill_unique(rng, cfg, fixed, pool)
    user_gains = _complex_gaussian(rng, cfg.gain_variance_ris_user(), (cfg.users, cfg.paths_ris_user))

    logger.debug(
        f"场景2路径采样完成: K={cfg.clusters}, 簇内共享数={shared_counts.tolist()}, "
        f"相邻簇共享数={cross_counts.tolist()}"
    )
    return PathEnsemble(
        bs_gains=bs_gains,
        bs_angles=bs_angles,
        ris_departure=departure,
        user_gains=user_gains,
        user_arrivals=arrivals,
        cluster_of=cluster_of,
        cluster_shared=cluster_shared,
        cross_shared=cross_shared,
    )

def sample_paths(cfg: SystemConfig, rng: np.random.Generator) -> PathEnsemble:
    """按配置场景分派"""
    if cfg.scenario == Scenario.ONE:
        return sample_paths_scenario1(cfg, rng)
    return sample_paths_scenario2(cfg, rng)
