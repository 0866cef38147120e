"""
工具模块
"""

from .logging import setup_logging
from .errors import RisEstimationError, ConfigError, TrialError
from .helpers import (
    EXIT_OK,
    EXIT_CONFIG_ERROR,
    EXIT_RUNTIME_ERROR,
    derive_streams,
    config_fingerprint,
    format_duration,
    measure_time,
    timed_call,
    ErrorHandler,
)
from .recovery import SweepRecovery

__all__ = [
    'setup_logging',
    'RisEstimationError', 'ConfigError', 'TrialError',
    'EXIT_OK', 'EXIT_CONFIG_ERROR', 'EXIT_RUNTIME_ERROR',
    'derive_streams', 'config_fingerprint', 'format_duration', 'measure_time', 'timed_call',
    'ErrorHandler', 'SweepRecovery',
]
