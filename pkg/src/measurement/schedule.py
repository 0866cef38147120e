"""
RIS相位配置
"""

from dataclasses import dataclass

import numpy as np

from src.utils.errors import InvalidDimensionError


@dataclass(frozen=True)
class RisSchedule:
    """T个时隙的RIS相位矩阵 Ω (N×T)，元素单位模"""
    phases: np.ndarray

    @property
    def elements(self) -> int:
        return self.phases.shape[0]

    @property
    def slots(self) -> int:
        return self.phases.shape[1]


def make_ris_schedule(n: int, t: int, rng: np.random.Generator) -> RisSchedule:
    """相位 φ 在 [0, 2π) 上独立均匀分布，元素为 e^{iφ}"""
    if n < 1 or t < 1:
        raise InvalidDimensionError(f"RIS相位矩阵维度必须≥1: N={n}, T={t}")
    phi = rng.uniform(0.0, 2.0 * np.pi, size=(n, t))
    return RisSchedule(np.exp(1j * phi))
