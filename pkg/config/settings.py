"""
RIS级联信道估计工具包系统配置
"""
import os
import logging
from typing import Optional
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()

class Settings:
    """应用配置类"""

    # 应用设置
    APP_NAME: str = os.getenv("APP_NAME", "RIS级联信道估计工具包")
    APP_VERSION: str = os.getenv("APP_VERSION", "1.0.0")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_DIR: str = os.getenv("LOG_DIR", "logs")

    # 输出与断点路径
    OUTPUT_DIR: str = os.getenv("OUTPUT_DIR", "./results")
    CHECKPOINT_PATH: str = os.getenv("CHECKPOINT_PATH", "./data/sweep_checkpoint.json")

    # 并行配置（为空时使用CPU核数）
    RIS_EST_THREADS: Optional[str] = os.getenv("RIS_EST_THREADS")

    # CSV输出格式
    CSV_FLOAT_FORMAT: str = "%.10g"

    @classmethod
    def get_worker_count(cls) -> int:
        """
        获取蒙特卡洛试验的工作线程数
        优先级：RIS_EST_THREADS > CPU核数
        """
        raw = os.getenv("RIS_EST_THREADS", cls.RIS_EST_THREADS or "")
        if raw.strip():
            try:
                return max(1, int(raw))
            except ValueError:
                logging.getLogger(__name__).warning(f"RIS_EST_THREADS无效: {raw!r}，使用CPU核数")
        return os.cpu_count() or 1

    @classmethod
    def validate(cls):
        """验证配置（警告但不阻止）"""
        warnings = []
        logger = logging.getLogger(__name__)

        if cls.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            warnings.append(f"未知日志级别 {cls.LOG_LEVEL}，回退到INFO")
            cls.LOG_LEVEL = "INFO"

        workers = cls.get_worker_count()
        logger.info(f"✅ 蒙特卡洛工作线程数: {workers}")

        for warning in warnings:
            logger.warning(warning)

        return True

# 创建配置实例
settings = Settings()
