"""
导频观测合成与CS模型变换
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.channel import ChannelRealization
from src.numerics import UnitaryDictionary
from src.utils.errors import CalibrationError, ShapeMismatchError
from .schedule import RisSchedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementSet:
    """变换后的观测 Y̌_j (J, T, M)、感知矩阵 Ω̌ (T, N) 与噪声方差 σ²"""
    observations: np.ndarray
    sensing: np.ndarray
    noise_variance: float

    @property
    def users(self) -> int:
        return self.observations.shape[0]

    @property
    def pilots(self) -> int:
        return self.sensing.shape[0]


def _noiseless(realization: ChannelRealization, schedule: RisSchedule) -> np.ndarray:
    if realization.cascaded.shape[2] != schedule.elements:
        raise ShapeMismatchError(
            f"RIS单元数不一致: 信道 N={realization.cascaded.shape[2]}, 相位矩阵 N={schedule.elements}"
        )
    # 导频 x_j^t = 1
    return realization.cascaded @ schedule.phases

def calibrate_noise(snr_db: float, realization: ChannelRealization, schedule: RisSchedule) -> float:
    """
    按SNR标定噪声方差

    σ² = (所有用户无噪接收信号的平均单元功率)·10^(−snr_db/10)
    """
    signal = _noiseless(realization, schedule)
    power = float(np.mean(np.abs(signal) ** 2))
    if power <= 0.0:
        raise CalibrationError("无噪接收信号功率为零，无法按SNR标定噪声")
    if np.isposinf(snr_db):
        return 0.0
    return power * 10.0 ** (-snr_db / 10.0)

def observe(realization: ChannelRealization, schedule: RisSchedule, noise_variance: float,
            rng: np.random.Generator) -> np.ndarray:
    """
    Y_j = H_j·Ω + W_j，W_j 元素为方差 σ² 的循环复高斯

    Returns:
        原始观测 (J, M, T)
    """
    if noise_variance < 0:
        raise ShapeMismatchError(f"噪声方差不能为负: {noise_variance}")
    signal = _noiseless(realization, schedule)
    if noise_variance == 0.0:
        return signal
    scale = np.sqrt(noise_variance / 2.0)
    noise = scale * (rng.standard_normal(signal.shape) + 1j * rng.standard_normal(signal.shape))
    return signal + noise

def to_cs_model(raw: np.ndarray, schedule: RisSchedule,
                dicts: Tuple[UnitaryDictionary, UnitaryDictionary],
                noise_variance: float = 0.0) -> MeasurementSet:
    """
    变换为典型CS模型 Y̌_j = Ω̌·Ȟ_jᴴ + W̌_j

    Y̌_j = (Uᴴ·Y_j)ᴴ，Ω̌ = (Vᴴ·Ω)ᴴ；酉变换保持噪声统计特性。
    """
    u_dict, v_dict = dicts
    if raw.ndim != 3 or raw.shape[1] != u_dict.size or raw.shape[2] != schedule.slots:
        raise ShapeMismatchError(
            f"原始观测形状 {raw.shape} 与 (J, M={u_dict.size}, T={schedule.slots}) 不符"
        )
    if schedule.elements != v_dict.size:
        raise ShapeMismatchError(f"相位矩阵 N={schedule.elements} 与字典 N={v_dict.size} 不符")
    transformed = u_dict.matrix.conj().T @ raw
    observations = np.conj(np.transpose(transformed, (0, 2, 1)))
    sensing = (v_dict.matrix.conj().T @ schedule.phases).conj().T
    return MeasurementSet(
        observations=np.ascontiguousarray(observations),
        sensing=np.ascontiguousarray(sensing),
        noise_variance=float(noise_variance),
    )
