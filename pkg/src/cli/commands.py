"""
子命令分发
generate / estimate / sweep / bench
"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from rich.console import Console
from rich.table import Table

from config.settings import settings
from src.channel import SystemConfig
from src.harness import (
    DESK_TRIALS,
    SweepAxis,
    TrialResult,
    apply_desk_scale,
    bench_complexity,
    evaluate,
    generate_trial,
    nmse_db,
    resolve_algorithms,
    sweep,
)
from src.storage import ArtifactStore
from src.utils.errors import ConfigError
from src.utils.helpers import EXIT_OK, ErrorHandler, measure_time
from src.utils.recovery import SweepRecovery
from .config_loader import CliConfig, parse_args, parse_config

logger = logging.getLogger(__name__)

# 固定宽度、无颜色，保证标准输出逐字节可复现
CONSOLE_WIDTH = 100


def _console() -> Console:
    return Console(file=sys.stdout, width=CONSOLE_WIDTH, color_system=None, highlight=False,
                   emoji=False, soft_wrap=False)

def _log_resolved(cfg: CliConfig, system: SystemConfig, trials: Optional[int] = None):
    payload = cfg.resolved()
    payload["system"] = system.model_dump()
    payload["system"]["scenario"] = int(system.scenario)
    if trials is not None:
        payload["trials"] = trials
    logger.info(f"完整配置: {json.dumps(payload, sort_keys=True, ensure_ascii=False, default=str)}")

def _scaled_system(cfg: CliConfig) -> SystemConfig:
    if cfg.full_scale:
        return cfg.system
    return apply_desk_scale(cfg.system, cfg.explicit_system)

def _trial_table(result: TrialResult, record_timing: bool) -> Table:
    table = Table(title=f"seed={result.seed} trial={result.trial_index}")
    table.add_column("算法")
    table.add_column("NMSE", justify="right")
    table.add_column("NMSE(dB)", justify="right")
    table.add_column("平均迭代", justify="right")
    if record_timing:
        table.add_column("耗时(ms)", justify="right")
    for name, value in result.nmse.items():
        row = [name, f"{value:.6e}", f"{nmse_db(value):.3f}", f"{result.iterations[name]:.2f}"]
        if record_timing:
            row.append(f"{result.runtime[name] * 1e3:.3f}")
        table.add_row(*row)
    return table


def cmd_generate(cfg: CliConfig) -> int:
    """生成一次试验并写入转储目录"""
    system = cfg.system
    _log_resolved(cfg, system)
    realization, schedule, measurements = generate_trial(system, cfg.trial)
    out = cfg.out or str(Path(settings.OUTPUT_DIR) / f"trial_seed{system.seed}_{cfg.trial}")
    ArtifactStore(out).save_trial(system, cfg.trial, realization, schedule, measurements)
    print(out)
    return EXIT_OK

def cmd_estimate(cfg: CliConfig) -> int:
    """在转储或新生成的数据上运行算法并打印NMSE"""
    names = resolve_algorithms(cfg.algorithms)
    if cfg.dump:
        store = ArtifactStore(cfg.dump)
        system, trial_index, truth, _, measurements = store.load_trial()
    else:
        store = None
        system, trial_index = cfg.system, cfg.trial
        truth, _, measurements = generate_trial(system, trial_index)
    _log_resolved(cfg, system)

    result = evaluate(measurements, truth, system, cfg.sbl, names, system.seed, trial_index,
                      keep_estimates=store is not None)
    if store is not None:
        for estimate in result.estimates.values():
            store.save_estimate(estimate)
    _console().print(_trial_table(result, cfg.record_timing))
    return EXIT_OK

@measure_time
def cmd_sweep(cfg: CliConfig) -> int:
    """参数扫描，输出CSV"""
    if not cfg.axis:
        raise ConfigError("sweep 需要指定扫描轴 --axis", field="axis")
    if not cfg.values:
        raise ConfigError("sweep 需要指定扫描取值 --values", field="values")
    axis = SweepAxis.parse(cfg.axis)
    system = _scaled_system(cfg)
    trials = cfg.trials or DESK_TRIALS
    _log_resolved(cfg, system, trials)

    recovery = SweepRecovery()
    if not cfg.resume:
        recovery.clear()
    report = sweep(system, axis, cfg.values, trials, cfg.algorithms, hp=cfg.sbl,
                   record_timing=cfg.record_timing, recovery=recovery)
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        report.to_csv(cfg.out)
    else:
        sys.stdout.write(report.to_csv())
    return EXIT_OK

@measure_time
def cmd_bench(cfg: CliConfig) -> int:
    """复杂度基准：各 P_j 下 pci 与 omp 的平均耗时"""
    system = _scaled_system(cfg)
    trials = cfg.trials or DESK_TRIALS
    _log_resolved(cfg, system, trials)

    report = bench_complexity(system, cfg.paths, trials, hp=cfg.sbl)
    out = cfg.out or str(Path(settings.OUTPUT_DIR) / "bench.csv")
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    report.to_csv(out)

    table = Table(title=f"复杂度基准 ({trials} 次试验)")
    table.add_column("P_j", justify="right")
    table.add_column("算法")
    table.add_column("平均耗时(ms)", justify="right")
    table.add_column("NMSE(dB)", justify="right")
    for row in report.table.itertuples(index=False):
        table.add_row(f"{row.axis_value:g}", row.algorithm, f"{row.runtime_ms_mean:.3f}",
                      f"{nmse_db(row.nmse_mean):.3f}")
    _console().print(table)
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "estimate": cmd_estimate,
    "sweep": cmd_sweep,
    "bench": cmd_bench,
}


@ErrorHandler.handle_cli_error
def dispatch(subcommand: str, cfg: CliConfig) -> int:
    """
    执行子命令

    Returns:
        退出码：0 成功，1 配置错误，2 运行错误
    """
    handler = COMMANDS.get(subcommand)
    if handler is None:
        raise ConfigError(f"未知子命令 '{subcommand}'，可选: {', '.join(COMMANDS)}")
    logger.info(f"执行子命令: {subcommand}")
    return handler(cfg)

@ErrorHandler.handle_cli_error
def run(argv: Optional[Sequence[str]] = None) -> int:
    """命令行入口：解析参数、加载配置并分发"""
    command, config_path, overrides = parse_args(argv)
    cfg = parse_config(config_path, overrides)
    return dispatch(command, cfg)
