"""
UAMPSBL-PCI 估计器

在公共行支撑上逐行求解多用户MMV问题，并在第 I_fs 次迭代执行快速扫描：
- 场景1：按频次识别 P_c 个公共列，此后这些列的先验方差 1/γ 取用户间平均
- 场景2：自动聚类，此后把聚类值写回 γ
"""

import logging
from typing import Optional

import numpy as np

from src.channel import Scenario, SystemConfig
from src.utils.errors import ShapeMismatchError
from .hyperparams import CommonColumnMode, EstimateResult, SblHyperparams
from .support import auto_cluster, identify_common_columns_fixed
from .uamp_sbl import UampSblSolver

logger = logging.getLogger(__name__)


def couple_common_columns(gamma: np.ndarray, common: np.ndarray) -> np.ndarray:
    """
    公共列上的 γ 耦合

    γ(n,:) = 1 / mean_j(1/γ(n,j))，即对先验方差做用户间平均。

    Args:
        gamma: 精度矩阵 (N, J)
        common: 公共列索引

    Returns:
        耦合后的新矩阵，非公共列不变
    """
    coupled = gamma.copy()
    if common.size:
        coupled[common, :] = 1.0 / np.mean(1.0 / gamma[common, :], axis=1, keepdims=True)
    return coupled


class FixedCommonColumnCoupling:
    """已知 P_c 的快速扫描与 γ 耦合"""

    def __init__(self, fast_scan_iteration: int, p_j: int, p_c: int):
        self.fast_scan_iteration = fast_scan_iteration
        self.p_j = p_j
        self.p_c = p_c
        self.common: Optional[np.ndarray] = None

    def __call__(self, iteration: int, gamma: np.ndarray) -> np.ndarray:
        if iteration == self.fast_scan_iteration:
            self.common = identify_common_columns_fixed(gamma, self.p_j, self.p_c)
        elif iteration > self.fast_scan_iteration and self.common is not None and self.common.size:
            gamma = couple_common_columns(gamma, self.common)
        return gamma


class AutoClusterCoupling:
    """自动聚类的快速扫描与 γ 覆写"""

    def __init__(self, fast_scan_iteration: int, v1: float, v2: float):
        self.fast_scan_iteration = fast_scan_iteration
        self.v1 = v1
        self.v2 = v2
        self.cluster: Optional[np.ndarray] = None

    def __call__(self, iteration: int, gamma: np.ndarray) -> np.ndarray:
        if iteration == self.fast_scan_iteration:
            self.cluster = auto_cluster(gamma, self.v1, self.v2)
        elif iteration > self.fast_scan_iteration and self.cluster is not None:
            mask = self.cluster != 0
            if np.any(mask):
                gamma = gamma.copy()
                gamma[mask] = self.cluster[mask]
        return gamma


def default_mode(cfg: SystemConfig) -> CommonColumnMode:
    """场景1用固定 P_c，场景2用自动聚类"""
    return CommonColumnMode.FIXED_PC if cfg.scenario == Scenario.ONE else CommonColumnMode.AUTO_CLUSTER

def uampsbl_pci(observations: np.ndarray, sensing: np.ndarray, cfg: SystemConfig, hp: SblHyperparams,
                row_support: np.ndarray, mode: CommonColumnMode) -> EstimateResult:
    """
    UAMPSBL-PCI信道估计

    Args:
        observations: Y̌ (J, T, M)
        sensing: Ω̌ (T, N)
        cfg: 系统配置（提供 P_j、P_c）
        hp: 超参数
        row_support: 公共行支撑 ℝ
        mode: 公共列识别方式

    Returns:
        EstimateResult，ℝ 之外的行为零
    """
    if observations.ndim != 3 or observations.shape[1] != sensing.shape[0]:
        raise ShapeMismatchError(f"观测形状 {observations.shape} 与感知矩阵 {sensing.shape} 不符")
    j_users, _, m = observations.shape
    if np.any(row_support < 0) or np.any(row_support >= m):
        raise ShapeMismatchError(f"行支撑越界: {row_support.tolist()}，M={m}")

    # SVD只做一次，所有公共行共享
    solver = UampSblSolver(sensing, hp)
    estimate = np.zeros((j_users, sensing.shape[1], m), dtype=np.complex128)
    iterations = np.zeros(row_support.size, dtype=np.int64)
    common_columns = {}

    for alpha, row in enumerate(row_support):
        if mode == CommonColumnMode.FIXED_PC:
            coupling = FixedCommonColumnCoupling(hp.fast_scan_iteration, cfg.paths_ris_user, cfg.common_columns)
        else:
            coupling = AutoClusterCoupling(hp.fast_scan_iteration, hp.magnification_v1, hp.magnification_v2)

        z_alpha = observations[:, :, row].T
        outcome = solver.solve(z_alpha, hp.epsilon_init_pci, coupling)
        estimate[:, :, row] = outcome.x.T
        iterations[alpha] = outcome.iterations

        found = coupling.common if mode == CommonColumnMode.FIXED_PC else coupling.cluster
        if found is not None:
            common_columns[int(row)] = found
        logger.debug(f"公共行 {row}: 迭代 {outcome.iterations} 次, 收敛={outcome.converged}")

    return EstimateResult(
        algorithm=f"pci_{mode.value}",
        angular_hermitian=estimate,
        iterations=iterations,
        row_support=np.asarray(row_support),
        common_columns=common_columns,
    )
