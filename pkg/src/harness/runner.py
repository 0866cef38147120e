"""
单次蒙特卡洛试验

同一 (seed, trial_index) 派生三条独立子流（路径、RIS相位、噪声），
所有算法在同一份数据上运行，计时只覆盖估计器本身。
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from src.channel import ChannelRealization, SystemConfig, assemble_channels, make_dictionaries, sample_paths
from src.estimators import (
    CommonColumnMode,
    EstimateResult,
    SblHyperparams,
    acquire_row_support,
    default_mode,
    omp_baseline,
    oracle_ls,
    uamp_sbl_baseline,
    uampsbl_pci,
)
from src.measurement import MeasurementSet, RisSchedule, calibrate_noise, make_ris_schedule, observe, to_cs_model
from src.utils.errors import ConfigError, RisEstimationError, TrialError
from src.utils.helpers import derive_streams, timed_call
from .metrics import nmse

logger = logging.getLogger(__name__)

# 估计器签名: (测量, 真值, 系统配置, 超参数) -> EstimateResult
Estimator = Callable[[MeasurementSet, ChannelRealization, SystemConfig, SblHyperparams], EstimateResult]


def _run_pci(mode: Optional[CommonColumnMode]) -> Estimator:
    def run(meas: MeasurementSet, truth: ChannelRealization, cfg: SystemConfig,
            hp: SblHyperparams) -> EstimateResult:
        rows = acquire_row_support(meas.observations, cfg.paths_bs_ris)
        chosen = default_mode(cfg) if mode is None else mode
        return uampsbl_pci(meas.observations, meas.sensing, cfg, hp, rows, chosen)
    return run

def _run_uamp_sbl(meas, truth, cfg, hp) -> EstimateResult:
    return uamp_sbl_baseline(meas.observations, meas.sensing, hp)

def _run_omp(meas, truth, cfg, hp) -> EstimateResult:
    sparsity = hp.omp_sparsity or cfg.paths_ris_user
    return omp_baseline(meas.observations, meas.sensing, min(sparsity, meas.pilots), hp.omp_residual_tol)

def _run_oracle(meas, truth, cfg, hp) -> EstimateResult:
    return oracle_ls(meas.observations, meas.sensing, truth)


# 算法注册表
ALGORITHMS: Dict[str, Estimator] = {
    "pci": _run_pci(None),
    "pci_fixed": _run_pci(CommonColumnMode.FIXED_PC),
    "pci_auto": _run_pci(CommonColumnMode.AUTO_CLUSTER),
    "uamp_sbl": _run_uamp_sbl,
    "omp": _run_omp,
    "oracle": _run_oracle,
}


def resolve_algorithms(names: Iterable[str]) -> List[str]:
    """校验算法名并去重（保持给定顺序）"""
    resolved: List[str] = []
    for name in names:
        key = name.strip().lower()
        if not key:
            continue
        if key not in ALGORITHMS:
            raise ConfigError(f"未知算法 '{name}'，可选: {', '.join(ALGORITHMS)}", field="algorithms")
        if key not in resolved:
            resolved.append(key)
    if not resolved:
        raise ConfigError("算法列表为空", field="algorithms")
    return resolved


@dataclass
class TrialResult:
    """一次试验中各算法的NMSE、墙钟时间与迭代次数"""
    seed: int
    trial_index: int
    nmse: Dict[str, float] = field(default_factory=dict)
    runtime: Dict[str, float] = field(default_factory=dict)
    iterations: Dict[str, float] = field(default_factory=dict)
    estimates: Dict[str, EstimateResult] = field(default_factory=dict, repr=False)


def generate_trial(cfg: SystemConfig, trial_index: int) -> Tuple[ChannelRealization, RisSchedule, MeasurementSet]:
    """
    生成一次试验的数据

    Args:
        cfg: 系统配置
        trial_index: 试验编号

    Returns:
        (信道真值, RIS相位矩阵, CS模型测量)
    """
    path_rng, schedule_rng, noise_rng = derive_streams(cfg.seed, trial_index, 3)
    dicts = make_dictionaries(cfg)
    paths = sample_paths(cfg, path_rng)
    realization = assemble_channels(paths, cfg, dicts)
    schedule = make_ris_schedule(cfg.ris_elements, cfg.pilots, schedule_rng)
    noise_variance = calibrate_noise(cfg.snr_db, realization, schedule)
    raw = observe(realization, schedule, noise_variance, noise_rng)
    measurements = to_cs_model(raw, schedule, dicts, noise_variance)
    logger.debug(f"试验 {trial_index}: 行支撑 {realization.true_row_support.tolist()}, σ²={noise_variance:.3e}")
    return realization, schedule, measurements

def evaluate(measurements: MeasurementSet, truth: ChannelRealization, cfg: SystemConfig,
             hp: SblHyperparams, algorithms: Iterable[str], seed: int, trial_index: int,
             keep_estimates: bool = False) -> TrialResult:
    """在给定数据上运行各算法并计算指标"""
    result = TrialResult(seed=seed, trial_index=trial_index)
    for name in resolve_algorithms(algorithms):
        estimate, seconds = timed_call(ALGORITHMS[name], measurements, truth, cfg, hp)
        result.nmse[name] = nmse(estimate.angular_hermitian, truth)
        result.runtime[name] = seconds
        result.iterations[name] = estimate.mean_iterations
        if keep_estimates:
            result.estimates[name] = estimate
    return result

def run_trial(cfg: SystemConfig, algorithms: Iterable[str], trial_index: int,
              hp: Optional[SblHyperparams] = None, keep_estimates: bool = False) -> TrialResult:
    """
    运行一次蒙特卡洛试验

    Args:
        cfg: 系统配置
        algorithms: 算法名集合
        trial_index: 试验编号
        hp: 超参数，默认全部取默认值

    Returns:
        TrialResult

    Raises:
        TrialError: 任何模块错误附带种子与试验编号后抛出
    """
    names = resolve_algorithms(algorithms)
    hp = hp or SblHyperparams()
    try:
        truth, _, measurements = generate_trial(cfg, trial_index)
        return evaluate(measurements, truth, cfg, hp, names, cfg.seed, trial_index, keep_estimates)
    except RisEstimationError as e:
        raise TrialError(cfg.seed, trial_index, e) from e
