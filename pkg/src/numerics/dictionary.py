"""
角度域字典模块
UPA的Kronecker分解DFT字典、导向矢量与空间频率索引运算
"""

from dataclasses import dataclass

import numpy as np

from src.utils.errors import InvalidAngleError, InvalidDimensionError
from .linalg import kron


@dataclass(frozen=True)
class GridAngle:
    """离散网格上的角度（行/列空间频率索引）"""
    row_index: int
    col_index: int

    def flat(self, cols_factor: int) -> int:
        """对应字典列号 row_index·L_c + col_index"""
        return self.row_index * cols_factor + self.col_index

    @classmethod
    def from_flat(cls, index: int, cols_factor: int) -> "GridAngle":
        return cls(int(index) // cols_factor, int(index) % cols_factor)


@dataclass(frozen=True)
class UnitaryDictionary:
    """两个归一化DFT矩阵的Kronecker积 (L×L)"""
    rows_factor: int
    cols_factor: int
    matrix: np.ndarray

    @property
    def size(self) -> int:
        return self.rows_factor * self.cols_factor


def _dft_matrix(size: int) -> np.ndarray:
    # F[l, k] = exp(-j2π·l·k/L)/√L
    grid = np.arange(size)
    return np.exp(-2j * np.pi * np.outer(grid, grid) / size) / np.sqrt(size)

def _check_factors(rows_factor: int, cols_factor: int) -> None:
    if rows_factor < 1 or cols_factor < 1:
        raise InvalidDimensionError(f"字典维度必须≥1: ({rows_factor}, {cols_factor})")

def dft_dictionary(rows_factor: int, cols_factor: int) -> UnitaryDictionary:
    """
    构造UPA角度域字典

    Args:
        rows_factor: 阵列行数 L_r
        cols_factor: 阵列列数 L_c

    Returns:
        UnitaryDictionary，第 g 列等于对应网格角度的导向矢量
    """
    _check_factors(rows_factor, cols_factor)
    matrix = kron(_dft_matrix(rows_factor), _dft_matrix(cols_factor))
    return UnitaryDictionary(rows_factor, cols_factor, matrix)

def steering_vector(grid: GridAngle, rows_factor: int, cols_factor: int) -> np.ndarray:
    """
    半波长间距UPA的归一化导向矢量

    空间频率恰好落在DFT网格上（行方向相位增量 2π·k/L_r，列方向 2π·k/L_c），
    因此结果与字典的一列完全相同。
    """
    _check_factors(rows_factor, cols_factor)
    if not (0 <= grid.row_index < rows_factor and 0 <= grid.col_index < cols_factor):
        raise InvalidAngleError(
            f"网格角度 ({grid.row_index}, {grid.col_index}) 超出 [0,{rows_factor})×[0,{cols_factor})"
        )
    s_r = np.exp(-2j * np.pi * grid.row_index * np.arange(rows_factor) / rows_factor)
    s_c = np.exp(-2j * np.pi * grid.col_index * np.arange(cols_factor) / cols_factor)
    return np.kron(s_r, s_c) / np.sqrt(rows_factor * cols_factor)

def add_frequencies(a, b, rows_factor: int, cols_factor: int) -> np.ndarray:
    """
    两个RIS空间频率（扁平索引）按行/列因子分别模加

    导向矢量逐元素相乘等价于各因子频率模加，合成矢量仍在网格上。
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    rows = (a // cols_factor + b // cols_factor) % rows_factor
    cols = (a % cols_factor + b % cols_factor) % cols_factor
    return rows * cols_factor + cols

def mirror_frequency(a, rows_factor: int, cols_factor: int) -> np.ndarray:
    """
    频率取负（各因子 -k mod L）

    DFT字典对称，rᵀ(k)·V 的唯一非零位于 -k 处。
    """
    a = np.asarray(a, dtype=np.int64)
    rows = (-(a // cols_factor)) % rows_factor
    cols = (-(a % cols_factor)) % cols_factor
    return rows * cols_factor + cols
