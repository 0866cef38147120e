"""
工具函数模块
"""

import functools
import hashlib
import json
import logging
import time
from typing import Any, Callable, Dict, Tuple

import numpy as np

from .errors import ConfigError, RisEstimationError

logger = logging.getLogger(__name__)

# CLI退出码
EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2

def derive_streams(seed: int, trial_index: int, count: int) -> Tuple[np.random.Generator, ...]:
    """
    由 (seed, trial_index) 派生相互独立的随机数流

    Args:
        seed: 64位种子
        trial_index: 试验编号
        count: 需要的子流个数

    Returns:
        numpy Generator 元组
    """
    root = np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,))
    return tuple(np.random.default_rng(child) for child in root.spawn(count))

def config_fingerprint(payload: Dict[str, Any]) -> str:
    """计算配置指纹（用于断点续跑匹配）"""
    combined = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.md5(combined.encode('utf-8')).hexdigest()

def format_duration(seconds: float) -> str:
    """格式化持续时间"""
    if seconds < 1:
        return f"{seconds*1000:.0f}ms"
    elif seconds < 60:
        return f"{seconds:.2f}s"
    else:
        minutes = int(seconds // 60)
        remaining_seconds = seconds % 60
        return f"{minutes}m {remaining_seconds:.1f}s"

def measure_time(func):
    """性能测量装饰器"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
            logger.info(f"{func.__name__} 耗时: {format_duration(time.perf_counter() - start_time)}")
            return result
        except Exception as e:
            duration = time.perf_counter() - start_time
            logger.error(f"{func.__name__} 失败，耗时: {format_duration(duration)}, 错误: {str(e)}")
            raise
    return wrapper

def timed_call(func: Callable[..., Any], *args, **kwargs) -> Tuple[Any, float]:
    """执行函数并返回 (结果, 墙钟秒数)"""
    start_time = time.perf_counter()
    result = func(*args, **kwargs)
    return result, time.perf_counter() - start_time

class ErrorHandler:
    """错误处理器"""

    @staticmethod
    def handle_cli_error(func):
        """CLI错误处理装饰器：把异常映射为退出码"""
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except ConfigError as e:
                logger.error(f"配置错误: {str(e)}")
                return EXIT_CONFIG_ERROR
            except RisEstimationError as e:
                logger.error(f"运行失败 {func.__name__}: {str(e)}")
                return EXIT_RUNTIME_ERROR
            except OSError as e:
                logger.error(f"文件操作失败 {func.__name__}: {str(e)}")
                return EXIT_RUNTIME_ERROR
        return wrapper
