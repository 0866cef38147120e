"""
命令行配置加载

配置文件为扁平 `key = value` 文本，每行一个键，`#` 之后为注释；
命令行参数覆盖文件中的同名键。所有字段在运行前经 pydantic 校验。
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from config.settings import settings
from src.channel import SystemConfig
from src.estimators import SblHyperparams
from src.utils.errors import ConfigError

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("generate", "estimate", "sweep", "bench")
DEFAULT_ALGORITHMS = ["pci", "uamp_sbl", "omp", "oracle"]
DEFAULT_BENCH_PATHS = [4, 6, 8, 10]

# 运行控制键（不属于 SystemConfig / SblHyperparams）
RUN_KEYS = (
    "algorithms", "axis", "values", "trials", "trial", "out",
    "full_scale", "record_timing", "paths", "dump", "resume",
)
LIST_KEYS = ("algorithms", "values", "paths")

SYSTEM_KEYS = tuple(SystemConfig.model_fields)
SBL_KEYS = tuple(SblHyperparams.model_fields)


class CliConfig(BaseModel):
    """完整解析后的运行配置"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    system: SystemConfig = Field(default_factory=SystemConfig)
    sbl: SblHyperparams = Field(default_factory=SblHyperparams)
    algorithms: List[str] = Field(default_factory=lambda: list(DEFAULT_ALGORITHMS))
    axis: Optional[str] = None
    values: List[float] = Field(default_factory=list)
    trials: Optional[int] = Field(None, ge=1)
    trial: int = Field(0, ge=0)
    out: Optional[str] = None
    full_scale: bool = False
    record_timing: bool = False
    paths: List[int] = Field(default_factory=lambda: list(DEFAULT_BENCH_PATHS))
    dump: Optional[str] = None
    resume: bool = False
    # 用户显式给出的 SystemConfig 字段（桌面规模默认值不覆盖它们）
    explicit_system: Set[str] = Field(default_factory=set)

    def resolved(self) -> Dict[str, Any]:
        """全部默认值展开后的配置（用于日志复现）"""
        payload = self.model_dump(exclude={"explicit_system"})
        payload["system"]["scenario"] = int(self.system.scenario)
        return payload


class _RaisingParser(argparse.ArgumentParser):
    """参数错误转为 ConfigError（退出码1）"""

    def error(self, message):
        raise ConfigError(f"命令行参数错误: {message}")


def _flag(name: str) -> str:
    return "--" + name.replace("_", "-")

def build_parser() -> argparse.ArgumentParser:
    """构建命令行解析器；SystemConfig/SblHyperparams 的每个字段对应一个同名参数"""
    parser = _RaisingParser(prog="ris-est", description=settings.APP_NAME)
    parser.add_argument("command", choices=SUBCOMMANDS, help="子命令")
    parser.add_argument("--config", default=None, help="配置文件路径")

    system = parser.add_argument_group("系统参数")
    for key in SYSTEM_KEYS:
        if key == "scenario":
            system.add_argument("--scenario", choices=["1", "2"], default=argparse.SUPPRESS)
        else:
            system.add_argument(_flag(key), dest=key, default=argparse.SUPPRESS)

    sbl = parser.add_argument_group("算法超参数")
    for key in SBL_KEYS:
        sbl.add_argument(_flag(key), dest=key, default=argparse.SUPPRESS)

    run = parser.add_argument_group("运行控制")
    run.add_argument("--algorithms", default=argparse.SUPPRESS, help="逗号分隔的算法名")
    run.add_argument("--axis", default=argparse.SUPPRESS, help="扫描轴")
    run.add_argument("--values", default=argparse.SUPPRESS, help="逗号分隔的扫描取值")
    run.add_argument("--trials", default=argparse.SUPPRESS, help="每个取值的试验次数")
    run.add_argument("--trial", default=argparse.SUPPRESS, help="generate/estimate 使用的试验编号")
    run.add_argument("--out", default=argparse.SUPPRESS, help="输出路径")
    run.add_argument("--paths", default=argparse.SUPPRESS, help="bench 的 P_j 列表")
    run.add_argument("--dump", default=argparse.SUPPRESS, help="estimate 读取的转储目录")
    run.add_argument("--full-scale", dest="full_scale", action="store_true", default=argparse.SUPPRESS)
    run.add_argument("--record-timing", dest="record_timing", action="store_true", default=argparse.SUPPRESS)
    run.add_argument("--resume", action="store_true", default=argparse.SUPPRESS)
    return parser

def join_negative_values(argv: Sequence[str]) -> List[str]:
    """
    `--values -10,0,10` 中以 '-' 开头的取值会被 argparse 当作选项，
    合并为 `--values=-10,0,10`
    """
    joined: List[str] = []
    index = 0
    argv = list(argv)
    while index < len(argv):
        token = argv[index]
        if token.startswith("--") and "=" not in token and index + 1 < len(argv):
            following = argv[index + 1]
            if following.startswith("-") and len(following) > 1 and (following[1].isdigit() or following[1] == "."):
                joined.append(f"{token}={following}")
                index += 2
                continue
        joined.append(token)
        index += 1
    return joined

def parse_args(argv: Optional[Sequence[str]] = None) -> Tuple[str, Optional[str], Dict[str, Any]]:
    """
    解析命令行

    Returns:
        (子命令, 配置文件路径, 显式给出的覆盖项)
    """
    argv = sys.argv[1:] if argv is None else argv
    namespace = vars(build_parser().parse_args(join_negative_values(argv)))
    command = namespace.pop("command")
    config_path = namespace.pop("config")
    return command, config_path, namespace

def read_config_file(path: str) -> Tuple[Dict[str, str], Dict[str, int]]:
    """
    读取 `key = value` 配置文件

    Returns:
        (键值, 键所在行号)

    Raises:
        ConfigError: 文件不存在、格式错误或未知键（附行号）
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise ConfigError(f"配置文件不存在: {path}")

    known = set(SYSTEM_KEYS) | set(SBL_KEYS) | set(RUN_KEYS)
    values: Dict[str, str] = {}
    lines: Dict[str, int] = {}
    with open(file_path, "r", encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ConfigError(f"缺少 '=': {raw.strip()!r}", line=number)
            key, value = (part.strip() for part in text.split("=", 1))
            key = key.lower()
            if not key:
                raise ConfigError("键名为空", line=number)
            if key not in known:
                raise ConfigError(f"未知配置键 '{key}'", field=key, line=number)
            if key in values:
                raise ConfigError(f"重复的配置键 '{key}'（首次出现于第 {lines[key]} 行）", field=key, line=number)
            values[key] = value
            lines[key] = number
    return values, lines

def _split_list(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value

def _parse_bool(value: Any) -> Any:
    if isinstance(value, str) and value.strip().lower() in ("true", "1", "yes", "on", "false", "0", "no", "off"):
        return value.strip().lower() in ("true", "1", "yes", "on")
    return value

def _validation_error(e: ValidationError, lines: Dict[str, int]) -> ConfigError:
    first = e.errors()[0]
    loc = [str(part) for part in first.get("loc", ())]
    field = loc[0] if loc else None
    message = first.get("msg", str(e))
    return ConfigError(message, field=field, line=lines.get(field) if field else None)

def parse_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> CliConfig:
    """
    合并配置文件与命令行覆盖项

    Args:
        path: 配置文件路径（可选）
        overrides: 命令行给出的键值，优先于文件

    Returns:
        校验后的 CliConfig

    Raises:
        ConfigError: 文件/解析/校验错误，附字段名或行号
    """
    merged: Dict[str, Any] = {}
    lines: Dict[str, int] = {}
    if path:
        merged, lines = read_config_file(path)
    for key, value in (overrides or {}).items():
        merged[key] = value
        lines.pop(key, None)

    if "scenario" in merged:
        try:
            merged["scenario"] = int(str(merged["scenario"]).strip())
        except ValueError:
            raise ConfigError(f"scenario 必须为 1 或 2，得到 {merged['scenario']!r}",
                              field="scenario", line=lines.get("scenario"))

    system_values = {k: v for k, v in merged.items() if k in SYSTEM_KEYS}
    sbl_values = {k: v for k, v in merged.items() if k in SBL_KEYS}
    run_values = {k: v for k, v in merged.items() if k in RUN_KEYS}
    for key in LIST_KEYS:
        if key in run_values:
            run_values[key] = _split_list(run_values[key])
    for key in ("full_scale", "record_timing", "resume"):
        if key in run_values:
            run_values[key] = _parse_bool(run_values[key])

    try:
        system = SystemConfig(**system_values)
    except ValidationError as e:
        raise _validation_error(e, lines) from e
    try:
        sbl = SblHyperparams(**sbl_values)
    except ValidationError as e:
        raise _validation_error(e, lines) from e
    try:
        cfg = CliConfig(system=system, sbl=sbl, explicit_system=set(system_values), **run_values)
    except ValidationError as e:
        raise _validation_error(e, lines) from e

    logger.debug(f"配置解析完成: 文件={path}, 覆盖项={sorted((overrides or {}).keys())}")
    return cfg
