"""
信道生成模块
"""

from .config import Scenario, SystemConfig
from .paths import PathEnsemble, sample_paths, sample_paths_scenario1, sample_paths_scenario2
from .realization import ChannelRealization, assemble_channels, angular_columns, make_dictionaries

__all__ = [
    'Scenario', 'SystemConfig', 'PathEnsemble',
    'sample_paths', 'sample_paths_scenario1', 'sample_paths_scenario2',
    'ChannelRealization', 'assemble_channels', 'angular_columns', 'make_dictionaries',
]
