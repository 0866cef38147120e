"""
复数稠密线性代数内核
"""

import logging
from typing import Tuple

import numpy as np

from src.utils.errors import InvalidDimensionError, NumericalFailureError

logger = logging.getLogger(__name__)

def as_complex_matrix(value, name: str = "matrix") -> np.ndarray:
    """
    转换为二维 complex128 矩阵并检查有限性

    Args:
        value: 类数组输入
        name: 报错时使用的名称

    Returns:
        行优先存储的复数矩阵
    """
    matrix = np.asarray(value, dtype=np.complex128)
    if matrix.ndim == 1:
        matrix = matrix.reshape(-1, 1)
    if matrix.ndim != 2:
        raise InvalidDimensionError(f"{name} 必须是二维矩阵，实际维度 {matrix.ndim}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidDimensionError(f"{name} 含有 NaN/Inf")
    return np.ascontiguousarray(matrix)

def kron(a, b) -> np.ndarray:
    """标准Kronecker积，行列数分别相乘"""
    return np.kron(as_complex_matrix(a, "a"), as_complex_matrix(b, "b"))

def economy_svd(m) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    经济型SVD: m = U·diag(s)·Vᴴ

    Args:
        m: 非空复数矩阵 (rows × cols)

    Returns:
        (U, s, V)，U 为 rows×r，V 为 cols×r，r = min(rows, cols)，
        奇异值非负且非增
    """
    matrix = as_complex_matrix(m, "m")
    if matrix.size == 0:
        raise InvalidDimensionError("SVD输入为空矩阵")
    try:
        u, s, vh = np.linalg.svd(matrix, full_matrices=False)
    except np.linalg.LinAlgError as e:
        raise NumericalFailureError(f"SVD不收敛: {e}") from e
    return u, s, vh.conj().T

def frobenius_sq(m) -> float:
    """Frobenius范数平方"""
    return float(np.vdot(m, m).real)
