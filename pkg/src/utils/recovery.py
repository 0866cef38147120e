"""参数扫描断点续跑工具"""
import json
import logging
from pathlib import Path
from datetime import datetime
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)


class SweepRecovery:
    """扫描断点管理器

    每完成一个扫描取值就保存一次已完成的CSV行，按配置指纹区分不同扫描。

    使用示例:
        recovery = SweepRecovery()
        rows = recovery.load(fingerprint) or []

        for value in values:
            rows.extend(run_value(value))
            recovery.save(fingerprint, rows)

        # 全部完成后清除断点
        recovery.clear()
    """

    def __init__(self, checkpoint_file: Optional[str] = None):
        """初始化断点管理器

        Args:
            checkpoint_file: 断点文件路径，默认取 settings.CHECKPOINT_PATH
        """
        if checkpoint_file is None:
            from config.settings import settings
            checkpoint_file = settings.CHECKPOINT_PATH
        self.checkpoint_file = Path(checkpoint_file)

    def save(self, fingerprint: str, rows: List[Dict]):
        """保存已完成的扫描行

        Args:
            fingerprint: 扫描配置指纹
            rows: 已完成的CSV行（可序列化为JSON的字典）
        """
        try:
            self.checkpoint_file.parent.mkdir(parents=True, exist_ok=True)
            checkpoint = {
                "fingerprint": fingerprint,
                "timestamp": datetime.now().isoformat(),
                "rows": rows,
            }
            with open(self.checkpoint_file, 'w', encoding='utf-8') as f:
                json.dump(checkpoint, f, ensure_ascii=False, indent=2)
            logger.debug(f"断点已保存: {len(rows)} 行")
        except OSError as e:
            logger.error(f"保存断点失败: {e}")

    def load(self, fingerprint: str) -> Optional[List[Dict]]:
        """加载与指纹匹配的断点

        Returns:
            已完成的行；不存在、损坏或指纹不符时返回None
        """
        if not self.checkpoint_file.exists():
            return None
        try:
            with open(self.checkpoint_file, 'r', encoding='utf-8') as f:
                checkpoint = json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"断点文件格式错误: {e}")
            return None
        except OSError as e:
            logger.error(f"加载断点失败: {e}")
            return None

        if checkpoint.get("fingerprint") != fingerprint:
            logger.warning("断点配置指纹不匹配，忽略旧断点")
            return None
        rows = checkpoint.get("rows", [])
        logger.info(f"从断点恢复 {len(rows)} 行 (保存于 {checkpoint.get('timestamp', '未知')})")
        return rows

    def clear(self):
        """清除断点文件"""
        try:
            if self.checkpoint_file.exists():
                self.checkpoint_file.unlink()
                logger.info("断点已清除")
        except OSError as e:
            logger.error(f"清除断点失败: {e}")

    def has_checkpoint(self) -> bool:
        return self.checkpoint_file.exists()
