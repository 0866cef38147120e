"""
异常定义模块
所有模块错误都继承自 RisEstimationError，CLI据此映射退出码
"""

from typing import Optional


class RisEstimationError(Exception):
    """工具包异常基类"""


class InvalidDimensionError(RisEstimationError):
    """维度非法（为零或不匹配）"""


class InvalidAngleError(RisEstimationError):
    """网格角度索引越界"""


class NumericalFailureError(RisEstimationError):
    """数值分解失败（如SVD不收敛）"""


class GenerationError(RisEstimationError):
    """路径采样无法满足互异性约束"""


class AssemblyError(RisEstimationError):
    """信道组装时维度不一致"""


class ShapeMismatchError(RisEstimationError):
    """观测/感知矩阵形状不一致"""


class CalibrationError(RisEstimationError):
    """信号功率为零，无法按SNR标定噪声"""


class UndefinedMetricError(RisEstimationError):
    """真实信道范数为零，NMSE无定义"""


class DivergenceError(RisEstimationError):
    """迭代状态出现非有限值"""

    def __init__(self, message: str, iteration: int):
        super().__init__(f"{message} (迭代 {iteration})")
        self.iteration = iteration


class ConfigError(RisEstimationError):
    """配置错误，可附带字段名与行号"""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        location = []
        if field:
            location.append(f"字段 {field}")
        if line is not None:
            location.append(f"第 {line} 行")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")
        self.field = field
        self.line = line


class TrialError(RisEstimationError):
    """蒙特卡洛试验失败，附带种子与试验编号"""

    def __init__(self, seed: int, trial_index: int, cause: Exception):
        super().__init__(f"试验失败 (seed={seed}, trial={trial_index}): {cause}")
        self.seed = seed
        self.trial_index = trial_index
        self.cause = cause
