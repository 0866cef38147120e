"""
参数扫描与复杂度基准

每个扫描取值下并行运行 trials 次独立试验，结果按试验编号升序聚合，
保证浮点求和顺序固定、CSV逐字节可复现。
"""

import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set

import numpy as np
import pandas as pd
from pydantic import ValidationError

from config.settings import settings
from src.channel import SystemConfig
from src.estimators import SblHyperparams
from src.utils.errors import ConfigError
from src.utils.helpers import config_fingerprint
from src.utils.recovery import SweepRecovery
from .metrics import standard_error
from .runner import TrialResult, resolve_algorithms, run_trial

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "axis", "axis_value", "algorithm", "nmse_mean", "nmse_stderr",
    "trials", "runtime_ms_mean", "iters_mean",
]

# 桌面规模默认值（sweep/bench 对用户未显式设置的字段生效）
DESK_SCALE = {
    "bs_rows": 4,
    "bs_cols": 4,
    "ris_rows": 8,
    "ris_cols": 8,
    "users": 8,
    "pilots": 96,
}
DESK_TRIALS = 50


class SweepAxis(str, Enum):
    """扫描轴"""
    PILOTS = "pilots"
    SNR_DB = "snr_db"
    USERS = "users"
    RIS_SIZE = "ris_size"               # 取值为 N，须为完全平方数
    BS_SIZE = "bs_size"                 # 取值为 M，须为完全平方数
    COMMON_COLUMNS = "common_columns"
    PATHS_PER_USER = "paths_per_user"
    CLUSTERS = "clusters"

    @classmethod
    def parse(cls, name: str) -> "SweepAxis":
        """接受 snr_db / SnrDb / snrdb 等写法"""
        key = name.strip().replace("_", "").replace("-", "").lower()
        for axis in cls:
            if axis.value.replace("_", "") == key:
                return axis
        raise ConfigError(f"未知扫描轴 '{name}'，可选: {', '.join(a.value for a in cls)}", field="axis")


@dataclass
class SweepReport:
    """扫描报告，每行对应 (轴取值, 算法)"""
    axis: SweepAxis
    values: List[float]
    table: pd.DataFrame

    def to_csv(self, path: Optional[str] = None) -> str:
        """
        输出CSV（10位有效数字，换行符 \\n）

        Args:
            path: 输出文件；为None时只返回文本

        Returns:
            CSV文本
        """
        buffer = io.StringIO()
        self.table.to_csv(buffer, index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator="\n")
        text = buffer.getvalue()
        if path is not None:
            with open(path, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            logger.info(f"✅ 扫描结果已写入 {path}")
        return text


def apply_desk_scale(cfg: SystemConfig, explicit: Optional[Set[str]] = None) -> SystemConfig:
    """把桌面规模默认值应用到未显式设置的字段"""
    explicit = set(cfg.model_fields_set if explicit is None else explicit)
    update = {key: value for key, value in DESK_SCALE.items() if key not in explicit}
    return _rebuild(cfg, update)

def _rebuild(cfg: SystemConfig, update: Dict) -> SystemConfig:
    # model_copy 不做校验，重新构造以触发不变量检查
    try:
        return SystemConfig.model_validate({**cfg.model_dump(), **update})
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first.get("loc", ())) or None
        raise ConfigError(first.get("msg", str(e)), field=field) from e

def _as_int(axis: SweepAxis, value: float) -> int:
    if not float(value).is_integer():
        raise ConfigError(f"扫描轴 {axis.value} 需要整数取值，得到 {value}", field="values")
    return int(value)

def _square_side(axis: SweepAxis, value: float) -> int:
    total = _as_int(axis, value)
    side = math.isqrt(max(total, 0))
    if side * side != total or side == 0:
        raise ConfigError(f"扫描轴 {axis.value} 的取值须为正的完全平方数，得到 {value}", field="values")
    return side

def override_config(cfg: SystemConfig, axis: SweepAxis, value: float) -> SystemConfig:
    """
    按扫描轴覆盖配置

    Args:
        cfg: 基础配置
        axis: 扫描轴
        value: 轴取值

    Returns:
        校验后的新配置
    """
    if axis == SweepAxis.SNR_DB:
        update = {"snr_db": float(value)}
    elif axis == SweepAxis.RIS_SIZE:
        side = _square_side(axis, value)
        update = {"ris_rows": side, "ris_cols": side}
    elif axis == SweepAxis.BS_SIZE:
        side = _square_side(axis, value)
        update = {"bs_rows": side, "bs_cols": side}
    elif axis == SweepAxis.PATHS_PER_USER:
        paths = _as_int(axis, value)
        update = {"paths_ris_user": paths, "common_columns": min(cfg.common_columns, paths)}
        if cfg.cluster_shared_max is not None:
            update["cluster_shared_max"] = min(cfg.cluster_shared_max, paths)
    else:
        field = {
            SweepAxis.PILOTS: "pilots",
            SweepAxis.USERS: "users",
            SweepAxis.COMMON_COLUMNS: "common_columns",
            SweepAxis.CLUSTERS: "clusters",
        }[axis]
        update = {field: _as_int(axis, value)}
    return _rebuild(cfg, update)

def _run_trials(cfg: SystemConfig, names: List[str], trials: int, hp: SblHyperparams,
                workers: int) -> List[TrialResult]:
    if workers <= 1:
        return [run_trial(cfg, names, index, hp) for index in range(trials)]

    results: List[TrialResult] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(run_trial, cfg, names, index, hp) for index in range(trials)]
        for future in as_completed(futures):
            results.append(future.result())
    results.sort(key=lambda r: r.trial_index)
    return results

def aggregate(axis: SweepAxis, value: float, results: Sequence[TrialResult], names: Iterable[str],
              record_timing: bool) -> List[Dict]:
    """按试验编号升序聚合为CSV行"""
    ordered = sorted(results, key=lambda r: r.trial_index)
    rows = []
    for name in names:
        errors = [r.nmse[name] for r in ordered]
        runtime_ms = float(np.mean([r.runtime[name] for r in ordered]) * 1e3) if record_timing else float("nan")
        rows.append({
            "axis": axis.value,
            "axis_value": float(value),
            "algorithm": name,
            "nmse_mean": float(np.mean(errors)),
            "nmse_stderr": standard_error(errors),
            "trials": len(ordered),
            "runtime_ms_mean": runtime_ms,
            "iters_mean": float(np.mean([r.iterations[name] for r in ordered])),
        })
    return rows

def sweep(cfg: SystemConfig, axis: SweepAxis, values: Sequence[float], trials: int,
          algorithms: Iterable[str], hp: Optional[SblHyperparams] = None,
          workers: Optional[int] = None, record_timing: bool = False,
          recovery: Optional[SweepRecovery] = None) -> SweepReport:
    """
    参数扫描

    Args:
        cfg: 基础配置
        axis: 扫描轴
        values: 轴取值（非空）
        trials: 每个取值的试验次数（≥1）
        algorithms: 算法名
        hp: 超参数
        workers: 工作线程数，默认 settings.get_worker_count()
        record_timing: 是否记录运行时间（否则写 nan）
        recovery: 断点管理器；给定时跳过已完成取值并在结束后清除断点

    Returns:
        SweepReport
    """
    values = [float(v) for v in values]
    if not values:
        raise ConfigError("扫描取值为空", field="values")
    if trials < 1:
        raise ConfigError(f"试验次数必须 ≥ 1，得到 {trials}", field="trials")
    names = resolve_algorithms(algorithms)
    hp = hp or SblHyperparams()
    workers = settings.get_worker_count() if workers is None else max(1, workers)

    # 先校验全部取值，避免扫描中途失败
    configs = [override_config(cfg, axis, value) for value in values]

    fingerprint = config_fingerprint({
        "cfg": cfg.model_dump(),
        "hp": hp.model_dump(),
        "axis": axis.value,
        "values": values,
        "trials": trials,
        "algorithms": names,
        "record_timing": record_timing,
    })
    rows: List[Dict] = []
    if recovery is not None:
        rows = recovery.load(fingerprint) or []
    done = {row["axis_value"] for row in rows}

    for value, value_cfg in zip(values, configs):
        if value in done:
            logger.info(f"跳过已完成的 {axis.value}={value:g}")
            continue
        logger.info(f"扫描 {axis.value}={value:g}: {trials} 次试验, {workers} 个线程")
        results = _run_trials(value_cfg, names, trials, hp, workers)
        rows.extend(aggregate(axis, value, results, names, record_timing))
        if recovery is not None:
            recovery.save(fingerprint, rows)

    if recovery is not None:
        recovery.clear()

    # 按取值给定顺序、算法顺序排列
    position = {value: i for i, value in enumerate(values)}
    order = {name: i for i, name in enumerate(names)}
    rows.sort(key=lambda row: (position[row["axis_value"]], order[row["algorithm"]]))
    table = pd.DataFrame(rows, columns=CSV_COLUMNS)
    return SweepReport(axis=axis, values=values, table=table)

def bench_complexity(cfg: SystemConfig, path_counts: Sequence[int], trials: int,
                     hp: Optional[SblHyperparams] = None,
                     algorithms: Sequence[str] = ("pci", "omp")) -> SweepReport:
    """
    复杂度基准：固定其余参数，测量不同 P_j 下的平均墙钟时间

    串行执行，避免线程竞争干扰计时。
    """
    if not path_counts:
        raise ConfigError("路径数列表为空", field="paths")
    return sweep(cfg, SweepAxis.PATHS_PER_USER, [float(p) for p in path_counts], trials,
                 algorithms, hp=hp, workers=1, record_timing=True)
