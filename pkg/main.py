#!/usr/bin/env python3
"""
RIS级联信道估计工具包
命令行启动脚本

用法:
    python main.py generate --seed 7
    python main.py estimate --seed 7 --algorithms pci,omp,oracle
    python main.py sweep --axis snr_db --values -10,0,10 --out results/snr.csv
    python main.py bench --paths 4,10
"""

import sys
import logging
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from config.settings import settings
from src.cli import run
from src.utils.logging import setup_logging

def main() -> int:
    """主函数"""
    setup_logging()
    logger = logging.getLogger(__name__)
    logger.info(f"启动 {settings.APP_NAME} v{settings.APP_VERSION}")
    settings.validate()
    try:
        return run()
    except KeyboardInterrupt:
        logger.info("用户中断")
        return 130

if __name__ == "__main__":
    sys.exit(main())
