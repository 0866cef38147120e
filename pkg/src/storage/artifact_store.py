"""
试验数据与估计结果的转储存储

目录结构：
    manifest.json          配置、形状、dtype 与标量
    <name>.bin             小端 float64 实部/虚部交错（复数）或小端 int64（支撑），行优先
    estimates/<algo>/      估计结果，格式相同
"""

import json
import logging
from pathlib import Path
from typing import Dict, Tuple

import numpy as np

from src.channel import ChannelRealization, SystemConfig
from src.estimators import EstimateResult
from src.measurement import MeasurementSet, RisSchedule
from src.utils.errors import ConfigError, ShapeMismatchError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

# 逻辑 dtype -> 磁盘 dtype
DISK_DTYPES = {
    "complex128": np.dtype("<c16"),
    "int64": np.dtype("<i8"),
}


class ArtifactStore:
    """转储目录读写器"""

    def __init__(self, root: str):
        self.root = Path(root)

    # ---------- 底层数组读写 ----------

    @staticmethod
    def _write_arrays(directory: Path, arrays: Dict[str, np.ndarray]) -> Dict[str, Dict]:
        directory.mkdir(parents=True, exist_ok=True)
        entries = {}
        for name, array in arrays.items():
            kind = "int64" if np.issubdtype(array.dtype, np.integer) else "complex128"
            data = np.ascontiguousarray(array, dtype=DISK_DTYPES[kind])
            filename = f"{name}.bin"
            data.tofile(directory / filename)
            entries[name] = {"file": filename, "dtype": kind, "shape": list(array.shape)}
        return entries

    @staticmethod
    def _read_arrays(directory: Path, entries: Dict[str, Dict]) -> Dict[str, np.ndarray]:
        arrays = {}
        for name, entry in entries.items():
            dtype = DISK_DTYPES.get(entry["dtype"])
            if dtype is None:
                raise ConfigError(f"转储数组 {name} 的dtype未知: {entry['dtype']}")
            shape = tuple(entry["shape"])
            data = np.fromfile(directory / entry["file"], dtype=dtype)
            if data.size != int(np.prod(shape)):
                raise ShapeMismatchError(f"转储数组 {name} 长度 {data.size} 与形状 {shape} 不符")
            arrays[name] = data.reshape(shape).astype(dtype.newbyteorder("="))
        return arrays

    @staticmethod
    def _write_manifest(directory: Path, manifest: Dict):
        with open(directory / "manifest.json", "w", encoding="utf-8") as f:
            json.dump(manifest, f, ensure_ascii=False, indent=2, sort_keys=True)

    @staticmethod
    def _read_manifest(directory: Path, kind: str) -> Dict:
        path = directory / "manifest.json"
        if not path.exists():
            raise ConfigError(f"转储目录缺少 manifest.json: {directory}")
        with open(path, "r", encoding="utf-8") as f:
            try:
                manifest = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigError(f"manifest.json 格式错误: {e}") from e
        if manifest.get("kind") != kind:
            raise ConfigError(f"转储类型不符: 期望 {kind}，得到 {manifest.get('kind')}")
        if manifest.get("format_version") != FORMAT_VERSION:
            raise ConfigError(f"不支持的转储版本: {manifest.get('format_version')}")
        return manifest

    # ---------- 试验数据 ----------

    def save_trial(self, cfg: SystemConfig, trial_index: int, realization: ChannelRealization,
                   schedule: RisSchedule, measurements: MeasurementSet) -> Path:
        """
        保存一次试验（真值、相位矩阵、CS模型测量）

        Returns:
            转储目录
        """
        arrays = {
            "h_bs_ris": realization.h_bs_ris,
            "h_ris_user": realization.h_ris_user,
            "cascaded": realization.cascaded,
            "angular": realization.angular,
            "true_row_support": realization.true_row_support.astype(np.int64),
            "true_column_supports": realization.true_column_supports.astype(np.int64),
            "phases": schedule.phases,
            "observations": measurements.observations,
            "sensing": measurements.sensing,
        }
        entries = self._write_arrays(self.root, arrays)
        self._write_manifest(self.root, {
            "format_version": FORMAT_VERSION,
            "kind": "trial",
            "config": cfg.model_dump(),
            "trial_index": int(trial_index),
            "noise_variance": float(measurements.noise_variance),
            "arrays": entries,
        })
        logger.info(f"✅ 试验数据已写入 {self.root}")
        return self.root

    def load_trial(self) -> Tuple[SystemConfig, int, ChannelRealization, RisSchedule, MeasurementSet]:
        """
        读取试验转储

        Returns:
            (配置, 试验编号, 信道真值, 相位矩阵, 测量)
        """
        manifest = self._read_manifest(self.root, "trial")
        arrays = self._read_arrays(self.root, manifest["arrays"])
        try:
            cfg = SystemConfig.model_validate(manifest["config"])
        except ValueError as e:
            raise ConfigError(f"转储中的配置无效: {e}") from e
        realization = ChannelRealization(
            h_bs_ris=arrays["h_bs_ris"],
            h_ris_user=arrays["h_ris_user"],
            cascaded=arrays["cascaded"],
            angular=arrays["angular"],
            true_row_support=arrays["true_row_support"],
            true_column_supports=arrays["true_column_supports"],
        )
        schedule = RisSchedule(phases=arrays["phases"])
        measurements = MeasurementSet(
            observations=arrays["observations"],
            sensing=arrays["sensing"],
            noise_variance=float(manifest["noise_variance"]),
        )
        logger.info(f"从 {self.root} 载入试验 {manifest['trial_index']}")
        return cfg, int(manifest["trial_index"]), realization, schedule, measurements

    # ---------- 估计结果 ----------

    def _estimate_dir(self, algorithm: str) -> Path:
        return self.root / "estimates" / algorithm

    def save_estimate(self, result: EstimateResult) -> Path:
        """保存估计结果到 estimates/<algorithm>/"""
        directory = self._estimate_dir(result.algorithm)
        arrays = {
            "angular_hermitian": result.angular_hermitian,
            "iterations": result.iterations.astype(np.int64),
        }
        if result.row_support is not None:
            arrays["row_support"] = np.asarray(result.row_support, dtype=np.int64)
        entries = self._write_arrays(directory, arrays)
        self._write_manifest(directory, {
            "format_version": FORMAT_VERSION,
            "kind": "estimate",
            "algorithm": result.algorithm,
            "arrays": entries,
        })
        logger.debug(f"估计结果 {result.algorithm} 已写入 {directory}")
        return directory

    def load_estimate(self, algorithm: str) -> EstimateResult:
        """读取 estimates/<algorithm>/ 下的估计结果"""
        directory = self._estimate_dir(algorithm)
        manifest = self._read_manifest(directory, "estimate")
        arrays = self._read_arrays(directory, manifest["arrays"])
        return EstimateResult(
            algorithm=manifest["algorithm"],
            angular_hermitian=arrays["angular_hermitian"],
            iterations=arrays["iterations"],
            row_support=arrays.get("row_support"),
        )
