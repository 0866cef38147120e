"""
对照算法：传统OMP与已知支撑的Oracle LS
"""

import logging

import numpy as np
from scipy import linalg

from src.channel import ChannelRealization
from src.utils.errors import ShapeMismatchError
from .hyperparams import EstimateResult

logger = logging.getLogger(__name__)

# 受限最小二乘的对角正则
REGULARIZATION = 1e-12

def restricted_least_squares(sensing: np.ndarray, y: np.ndarray, support: np.ndarray) -> np.ndarray:
    """在 support 指定的感知矩阵列上求最小二乘（法方程，对角加 1e-12 正则）"""
    atoms = sensing[:, support]
    gram = atoms.conj().T @ atoms + REGULARIZATION * np.eye(support.size)
    return linalg.solve(gram, atoms.conj().T @ y, assume_a="her")

def omp_column(sensing: np.ndarray, y: np.ndarray, sparsity: int, residual_tol: float):
    """
    单列OMP

    Returns:
        (x, 选中原子列表)
    """
    n = sensing.shape[1]
    x = np.zeros(n, dtype=np.complex128)
    y_norm = float(np.linalg.norm(y))
    if y_norm == 0.0:
        return x, []

    support = []
    coefficients = np.zeros(0, dtype=np.complex128)
    residual = y.copy()
    while len(support) < sparsity and np.linalg.norm(residual) > residual_tol * y_norm:
        correlation = np.abs(sensing.conj().T @ residual)
        correlation[support] = -1.0
        support.append(int(np.argmax(correlation)))
        index = np.asarray(support)
        coefficients = restricted_least_squares(sensing, y, index)
        residual = y - sensing[:, index] @ coefficients
    if support:
        x[np.asarray(support)] = coefficients
    return x, support

def omp_baseline(observations: np.ndarray, sensing: np.ndarray, sparsity_per_column: int,
                 residual_tol: float) -> EstimateResult:
    """
    传统OMP：每个用户的每一列独立做贪婪恢复

    Args:
        observations: Y̌ (J, T, M)
        sensing: Ω̌ (T, N)
        sparsity_per_column: 每列最多选取的原子数
        residual_tol: 相对残差停止阈值
    """
    if observations.ndim != 3 or observations.shape[1] != sensing.shape[0]:
        raise ShapeMismatchError(f"观测形状 {observations.shape} 与感知矩阵 {sensing.shape} 不符")
    if sparsity_per_column > sensing.shape[0]:
        raise ShapeMismatchError(f"稀疏度 {sparsity_per_column} 超过导频数 T={sensing.shape[0]}")
    j_users, _, m = observations.shape
    estimate = np.zeros((j_users, sensing.shape[1], m), dtype=np.complex128)
    atoms = np.zeros((j_users, m), dtype=np.int64)
    for j in range(j_users):
        for col in range(m):
            x, support = omp_column(sensing, observations[j, :, col], sparsity_per_column, residual_tol)
            estimate[j, :, col] = x
            atoms[j, col] = len(support)
    return EstimateResult(algorithm="omp", angular_hermitian=estimate, iterations=atoms.ravel())

def oracle_ls(observations: np.ndarray, sensing: np.ndarray, truth: ChannelRealization) -> EstimateResult:
    """
    Oracle LS：在真实稀疏位置上做最小二乘，作为性能下界

    Args:
        observations: Y̌ (J, T, M)
        sensing: Ω̌ (T, N)
        truth: 提供真实行/列支撑
    """
    if observations.ndim != 3 or observations.shape[1] != sensing.shape[0]:
        raise ShapeMismatchError(f"观测形状 {observations.shape} 与感知矩阵 {sensing.shape} 不符")
    j_users, _, m = observations.shape
    estimate = np.zeros((j_users, sensing.shape[1], m), dtype=np.complex128)
    for j in range(j_users):
        for alpha, row in enumerate(truth.true_row_support):
            support = np.asarray(truth.true_column_supports[j, alpha], dtype=np.int64)
            if support.size == 0:
                continue
            estimate[j, support, row] = restricted_least_squares(sensing, observations[j, :, row], support)
    return EstimateResult(
        algorithm="oracle",
        angular_hermitian=estimate,
        iterations=np.zeros(0, dtype=np.int64),
        row_support=truth.true_row_support,
    )
