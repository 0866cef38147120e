"""
支撑识别
公共行支撑获取、已知 P_c 的公共列识别、未知簇结构的自动聚类
"""

import logging

import numpy as np

logger = logging.getLogger(__name__)

def acquire_row_support(observations: np.ndarray, p_br: int) -> np.ndarray:
    """
    公共行支撑获取

    r(m) = Σ_j ‖Y̌_j(:,m)‖²，取最大的 P_BR 个；功率相同时索引小者优先。

    Args:
        observations: Y̌ (J, T, M)
        p_br: BS-RIS路径数

    Returns:
        升序排列的行索引 (P_BR,)
    """
    power = np.sum(np.abs(observations) ** 2, axis=(0, 1))
    order = np.argsort(-power, kind="stable")
    if 0 < p_br < power.size:
        margin = power[order[p_br - 1]] - power[order[p_br]]
        logger.debug(f"行支撑: 入选最弱行与落选最强行的功率差 {margin:.3e}")
    return np.sort(order[:p_br])

def identify_common_columns_fixed(gamma: np.ndarray, p_j: int, p_c: int) -> np.ndarray:
    """
    已知公共列数 P_c 的快速扫描

    D(:,j) 取每个用户 γ 最小的 P_j 个索引，再按出现频次取前 P_c 个；
    频次相同时按 γ 在用户间之和升序，再按索引升序。

    Args:
        gamma: 精度矩阵 (N, J)

    Returns:
        升序排列的公共列索引 (P_c,)
    """
    if p_c <= 0:
        return np.empty(0, dtype=np.int64)
    n = gamma.shape[0]
    smallest = np.argsort(gamma, axis=0, kind="stable")[:p_j, :]
    counts = np.bincount(smallest.ravel(), minlength=n)
    aggregate = np.sum(gamma, axis=1)
    # lexsort 以最后一个键为主键
    order = np.lexsort((np.arange(n), aggregate, -counts))
    return np.sort(order[:p_c]).astype(np.int64)

def auto_cluster(gamma: np.ndarray, v1: float, v2: float) -> np.ndarray:
    """
    自动聚类机制

    以全局最小 γ 为阈值 δ；逐行升序排序，行最小值超过 V₁·δ 则跳过，
    否则在下一个值小于 V₂ 倍当前均值时持续扩展前缀，前缀内元素赋均值。

    Args:
        gamma: 精度矩阵 (N, J)
        v1, v2: 放大系数

    Returns:
        与 gamma 同形的聚类值矩阵，未聚类位置为 0
    """
    n, j_users = gamma.shape
    cluster = np.zeros_like(gamma, dtype=np.float64)
    delta = float(np.min(gamma))
    for row in range(n):
        index = np.argsort(gamma[row], kind="stable")
        q = gamma[row, index]
        if q[0] > v1 * delta:
            continue
        total = mean = float(q[0])
        size = 1
        while size <= j_users - 1 and q[size] < v2 * mean:
            total += float(q[size])
            size += 1
            mean = total / size
        cluster[row, index[:size]] = total / size
    return cluster
