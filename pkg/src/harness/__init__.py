"""
蒙特卡洛实验模块
"""

from .metrics import nmse, nmse_db, standard_error
from .runner import ALGORITHMS, TrialResult, evaluate, generate_trial, resolve_algorithms, run_trial
from .sweep import (
    CSV_COLUMNS,
    DESK_SCALE,
    DESK_TRIALS,
    SweepAxis,
    SweepReport,
    aggregate,
    apply_desk_scale,
    bench_complexity,
    override_config,
    sweep,
)

__all__ = [
    'nmse', 'nmse_db', 'standard_error',
    'ALGORITHMS', 'TrialResult', 'evaluate', 'generate_trial', 'resolve_algorithms', 'run_trial',
    'CSV_COLUMNS', 'DESK_SCALE', 'DESK_TRIALS', 'SweepAxis', 'SweepReport', 'aggregate',
    'apply_desk_scale', 'bench_complexity', 'override_config', 'sweep',
]
