"""pytest全局配置"""
import pytest
import sys
from pathlib import Path

import numpy as np

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.channel import Scenario, SystemConfig
from src.estimators import SblHyperparams


@pytest.fixture
def rng():
    """固定种子的随机数流"""
    return np.random.default_rng(20240601)


@pytest.fixture
def small_config():
    """小规模场景1配置（M=2×2, N=4×4, J=4, T=32）"""
    return SystemConfig(
        bs_rows=2, bs_cols=2, ris_rows=4, ris_cols=4,
        users=4, pilots=32, paths_bs_ris=2, paths_ris_user=3, common_columns=2,
        snr_db=20.0, seed=11,
    )


@pytest.fixture
def desk_config():
    """桌面规模场景1配置（M=4×4, N=8×8, J=8, T=96）"""
    return SystemConfig(
        bs_rows=4, bs_cols=4, ris_rows=8, ris_cols=8,
        users=8, pilots=96, seed=3,
    )


@pytest.fixture
def desk_config_scenario2(desk_config):
    """桌面规模场景2配置"""
    return desk_config.model_copy(update={"scenario": Scenario.TWO, "cluster_shared_max": 4})


@pytest.fixture
def default_hp():
    """默认超参数"""
    return SblHyperparams()


@pytest.fixture
def generated_trial(small_config):
    """small_config 下第0次试验的数据"""
    from src.harness import generate_trial
    return generate_trial(small_config, 0)


@pytest.fixture(autouse=True)
def isolated_paths(tmp_path, monkeypatch):
    """把输出与断点路径指向临时目录"""
    from config.settings import settings
    monkeypatch.setattr(settings, "OUTPUT_DIR", str(tmp_path / "results"))
    monkeypatch.setattr(settings, "CHECKPOINT_PATH", str(tmp_path / "data" / "checkpoint.json"))
    monkeypatch.delenv("RIS_EST_THREADS", raising=False)
