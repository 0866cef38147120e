"""
估计器超参数与结果类型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class CommonColumnMode(str, Enum):
    """快速扫描的公共列识别方式"""
    FIXED_PC = "fixed"          # 已知 P_c，频次计数
    AUTO_CLUSTER = "auto"       # 自动聚类


class SblHyperparams(BaseModel):
    """UAMP-SBL系列算法超参数"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    # 形状参数初值：普通UAMP-SBL为0.01，PCI为1
    epsilon_init_plain: float = Field(0.01, ge=0.0)
    epsilon_init_pci: float = Field(1.0, ge=0.0)
    convergence_threshold: float = Field(1e-4, gt=0.0)
    max_iterations: int = Field(100, ge=1)
    fast_scan_iteration: int = Field(10, ge=1)
    # 已知噪声精度 β；None 表示按残差逐次估计
    noise_precision: Optional[float] = Field(None, gt=0.0)
    magnification_v1: float = Field(5.0, gt=1.0)
    magnification_v2: float = Field(5.0, gt=1.0)
    # OMP基线：None 表示每列 P_j 个原子
    omp_sparsity: Optional[int] = Field(None, ge=1)
    omp_residual_tol: float = Field(1e-3, ge=0.0)

    @model_validator(mode="after")
    def _check_iterations(self) -> "SblHyperparams":
        if self.fast_scan_iteration > self.max_iterations:
            raise ValueError(
                f"fast_scan_iteration={self.fast_scan_iteration} 超过 max_iterations={self.max_iterations}"
            )
        return self


@dataclass
class EstimateResult:
    """
    估计结果

    angular_hermitian 为各用户 Ȟ_jᴴ 的估计，形状 (J, N, M)；
    iterations 按求解子问题记录迭代次数（PCI为每个公共行一次）。
    """
    algorithm: str
    angular_hermitian: np.ndarray
    iterations: np.ndarray
    row_support: Optional[np.ndarray] = None
    common_columns: Dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def mean_iterations(self) -> float:
        return float(np.mean(self.iterations)) if self.iterations.size else 0.0
