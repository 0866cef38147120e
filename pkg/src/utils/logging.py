"""
日志配置模块
"""

import logging
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Optional

from config.settings import settings

def setup_logging(level: Optional[str] = None, log_dir: Optional[str] = None) -> logging.Logger:
    """设置日志配置

    Args:
        level: 日志级别，默认取 settings.LOG_LEVEL
        log_dir: 日志目录，默认取 settings.LOG_DIR
    """
    log_path = Path(log_dir or settings.LOG_DIR)
    log_path.mkdir(parents=True, exist_ok=True)
    level_value = getattr(logging, (level or settings.LOG_LEVEL).upper(), logging.INFO)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    root_logger = logging.getLogger()

    # 清除现有处理器，避免重复
    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    root_logger.setLevel(level_value)

    # 每天午夜轮转，保留7天
    file_handler = TimedRotatingFileHandler(
        log_path / "app.log",
        when='midnight',
        interval=1,
        backupCount=7,
        encoding='utf-8'
    )
    file_handler.suffix = "%Y-%m-%d"
    file_handler.setFormatter(formatter)
    file_handler.setLevel(level_value)
    root_logger.addHandler(file_handler)

    # 控制台处理器写到stderr，stdout只留给结果
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(level_value)
    root_logger.addHandler(console_handler)

    return root_logger
