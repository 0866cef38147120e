"""
系统参数配置
默认值取全尺寸仿真参数（J=16, M=8×8, N=16×16, T=192, P_BR=5, P_j=10）
"""

from enum import IntEnum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Scenario(IntEnum):
    """路径共享场景"""
    ONE = 1  # 所有用户共享 P_c 条公共路径
    TWO = 2  # 用户随机分簇，仅簇内/相邻簇共享


class SystemConfig(BaseModel):
    """系统维度与物理参数"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    bs_rows: int = Field(8, ge=1)
    bs_cols: int = Field(8, ge=1)
    ris_rows: int = Field(16, ge=1)
    ris_cols: int = Field(16, ge=1)
    users: int = Field(16, ge=1)
    pilots: int = Field(192, ge=1)
    paths_bs_ris: int = Field(5, ge=1)
    paths_ris_user: int = Field(10, ge=1)
    common_columns: int = Field(4, ge=0)
    clusters: int = Field(3, ge=1)
    snr_db: float = 0.0
    dist_bs_ris: float = Field(10.0, gt=0)
    dist_ris_user: float = Field(100.0, gt=0)
    exp_bs_ris: float = 2.2
    exp_ris_user: float = 2.8
    scenario: Scenario = Scenario.ONE
    seed: int = Field(0, ge=0, lt=2**64)
    # 场景2：相邻簇共享概率与簇内共享数上限（None 表示 P_j）
    cross_cluster_prob: float = Field(0.5, ge=0.0, le=1.0)
    cluster_shared_max: Optional[int] = Field(None, ge=1)

    @property
    def bs_antennas(self) -> int:
        """M"""
        return self.bs_rows * self.bs_cols

    @property
    def ris_elements(self) -> int:
        """N"""
        return self.ris_rows * self.ris_cols

    @property
    def noiseless(self) -> bool:
        return self.snr_db == float("inf")

    @model_validator(mode="after")
    def _check_dimensions(self) -> "SystemConfig":
        if self.paths_bs_ris > self.bs_antennas:
            raise ValueError(f"paths_bs_ris={self.paths_bs_ris} 超过BS天线数 M={self.bs_antennas}")
        if self.paths_bs_ris > self.ris_elements:
            raise ValueError(f"paths_bs_ris={self.paths_bs_ris} 超过RIS单元数 N={self.ris_elements}")
        if self.paths_ris_user > self.ris_elements:
            raise ValueError(f"paths_ris_user={self.paths_ris_user} 超过RIS单元数 N={self.ris_elements}")
        if self.common_columns > self.paths_ris_user:
            raise ValueError(f"common_columns={self.common_columns} 超过 paths_ris_user={self.paths_ris_user}")
        if self.scenario == Scenario.TWO and self.clusters > self.users:
            raise ValueError(f"clusters={self.clusters} 超过用户数 {self.users}")
        if self.cluster_shared_max is not None and self.cluster_shared_max > self.paths_ris_user:
            raise ValueError("cluster_shared_max 不能超过 paths_ris_user")
        return self

    def gain_variance_bs_ris(self) -> float:
        """BS-RIS路径增益方差 10⁻³·d^-exp"""
        return 1e-3 * self.dist_bs_ris ** (-self.exp_bs_ris)

    def gain_variance_ris_user(self) -> float:
        """RIS-用户路径增益方差"""
        return 1e-3 * self.dist_ris_user ** (-self.exp_ris_user)
