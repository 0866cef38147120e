"""
评估指标
"""

from typing import Sequence

import numpy as np

from src.channel import ChannelRealization
from src.utils.errors import ShapeMismatchError, UndefinedMetricError

def nmse(estimate: np.ndarray, truth: ChannelRealization) -> float:
    """
    归一化均方误差：各用户 ‖Ȟ̂_jᴴ − Ȟ_jᴴ‖_F² / ‖Ȟ_jᴴ‖_F² 的均值

    Args:
        estimate: 估计的 Ȟ_jᴴ (J, N, M)
        truth: 信道真值

    Returns:
        线性NMSE
    """
    target = truth.angular_hermitian()
    if estimate.shape != target.shape:
        raise ShapeMismatchError(f"估计形状 {estimate.shape} 与真值形状 {target.shape} 不符")
    reference = np.sum(np.abs(target) ** 2, axis=(1, 2))
    if np.any(reference == 0.0):
        raise UndefinedMetricError(f"用户 {int(np.argmin(reference))} 的信道范数为零，NMSE无定义")
    error = np.sum(np.abs(estimate - target) ** 2, axis=(1, 2))
    return float(np.mean(error / reference))

def nmse_db(value: float) -> float:
    """线性NMSE转dB；0 对应 -inf"""
    if value <= 0.0:
        return float("-inf")
    return float(10.0 * np.log10(value))

def standard_error(values: Sequence[float]) -> float:
    """样本标准差 / √n；单个样本时为 0"""
    data = np.asarray(values, dtype=np.float64)
    if data.size < 2:
        return 0.0
    return float(np.std(data, ddof=1) / np.sqrt(data.size))
