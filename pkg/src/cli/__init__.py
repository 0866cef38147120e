"""
命令行模块
"""

from .config_loader import CliConfig, build_parser, parse_args, parse_config, read_config_file
from .commands import COMMANDS, dispatch, run

__all__ = [
    'CliConfig', 'build_parser', 'parse_args', 'parse_config', 'read_config_file',
    'COMMANDS', 'dispatch', 'run',
]
