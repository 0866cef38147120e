"""
级联信道组装
由多径参数构造 H_BR、h_j、级联信道 H_j 及其角度域表示 Ȟ_j = Uᴴ·H_j·V
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.numerics import UnitaryDictionary, dft_dictionary, add_frequencies, mirror_frequency
from src.utils.errors import AssemblyError
from .config import SystemConfig
from .paths import PathEnsemble

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChannelRealization:
    """一次信道实现的真值"""
    h_bs_ris: np.ndarray              # (M, N)
    h_ris_user: np.ndarray            # (J, N)
    cascaded: np.ndarray              # (J, M, N)
    angular: np.ndarray               # (J, M, N)
    true_row_support: np.ndarray      # (P_BR,) 升序
    true_column_supports: np.ndarray  # (J, P_BR, P_j)，行顺序与 true_row_support 一致，列升序

    @property
    def users(self) -> int:
        return self.cascaded.shape[0]

    def angular_hermitian(self) -> np.ndarray:
        """估计目标 Ȟ_jᴴ，形状 (J, N, M)"""
        return np.conj(np.transpose(self.angular, (0, 2, 1)))


def make_dictionaries(cfg: SystemConfig) -> Tuple[UnitaryDictionary, UnitaryDictionary]:
    """BS侧 U (M×M) 与 RIS侧 V (N×N) 字典"""
    return dft_dictionary(cfg.bs_rows, cfg.bs_cols), dft_dictionary(cfg.ris_rows, cfg.ris_cols)

def _steering_matrix(indices: np.ndarray, dictionary: UnitaryDictionary) -> np.ndarray:
    # 网格导向矢量即字典对应列
    return dictionary.matrix[:, indices]

def angular_columns(paths: PathEnsemble, cfg: SystemConfig) -> np.ndarray:
    """
    每个 (用户, BS-RIS路径, RIS-用户路径) 组合在角度域中的列号

    出射与入射频率按因子模加后，由于式中使用转置 rᵀ，列号为其镜像 -k。

    Returns:
        (J, P_BR, P_j) 整数数组
    """
    combined = add_frequencies(
        paths.ris_departure[None, :, None],
        paths.user_arrivals[:, None, :],
        cfg.ris_rows,
        cfg.ris_cols,
    )
    # (dep+arr) mod N 在行/列两个因子上分别取模；rᵀ 左乘后非零列落在其镜像 -k 处
    return mirror_frequency(combined, cfg.ris_rows, cfg.ris_cols)

def assemble_channels(paths: PathEnsemble, cfg: SystemConfig,
                      dicts: Tuple[UnitaryDictionary, UnitaryDictionary]) -> ChannelRealization:
    """
    组装空间域与角度域级联信道

    Args:
        paths: 多径参数
        cfg: 系统配置
        dicts: (U, V) 字典

    Returns:
        ChannelRealization
    """
    u_dict, v_dict = dicts
    m, n = cfg.bs_antennas, cfg.ris_elements
    if u_dict.size != m or v_dict.size != n:
        raise AssemblyError(f"字典尺寸 ({u_dict.size}, {v_dict.size}) 与配置 (M={m}, N={n}) 不符")
    p_br = paths.bs_gains.size
    if paths.bs_angles.size != p_br or paths.ris_departure.size != p_br:
        raise AssemblyError("BS-RIS路径参数长度不一致")
    if paths.user_gains.shape != paths.user_arrivals.shape:
        raise AssemblyError("RIS-用户路径增益与频率形状不一致")
    j_users, p_j = paths.user_arrivals.shape

    b = _steering_matrix(paths.bs_angles, u_dict)          # (M, P_BR)
    r_dep = _steering_matrix(paths.ris_departure, v_dict)  # (N, P_BR)
    h_bs_ris = np.sqrt(m * n / p_br) * (b * paths.bs_gains[None, :]) @ r_dep.T

    h_ris_user = np.empty((j_users, n), dtype=np.complex128)
    for j in range(j_users):
        r_arr = _steering_matrix(paths.user_arrivals[j], v_dict)
        h_ris_user[j] = np.sqrt(n / p_j) * r_arr @ paths.user_gains[j]

    # H_j = H_BR·diag(h_j)
    cascaded = h_bs_ris[None, :, :] * h_ris_user[:, None, :]
    u_h = u_dict.matrix.conj().T
    angular = u_h @ cascaded @ v_dict.matrix

    rows = np.sort(paths.bs_angles)
    order = np.argsort(paths.bs_angles, kind="stable")
    columns = np.sort(angular_columns(paths, cfg)[:, order, :], axis=2)

    logger.debug(f"信道组装完成: J={j_users}, 每用户非零元素 {p_br * p_j} 个")
    return ChannelRealization(
        h_bs_ris=h_bs_ris,
        h_ris_user=h_ris_user,
        cascaded=cascaded,
        angular=angular,
        true_row_support=rows,
        true_column_supports=columns,
    )
