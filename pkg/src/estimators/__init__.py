"""
信道估计算法模块
"""

from .hyperparams import CommonColumnMode, EstimateResult, SblHyperparams
from .uamp_sbl import UampSblSolver, SolverOutcome, uamp_sbl, uamp_sbl_baseline
from .classic_sbl import classic_sbl_oracle
from .support import acquire_row_support, identify_common_columns_fixed, auto_cluster
from .pci import uampsbl_pci, default_mode, couple_common_columns, FixedCommonColumnCoupling, AutoClusterCoupling
from .baselines import omp_baseline, oracle_ls, restricted_least_squares

__all__ = [
    'CommonColumnMode', 'EstimateResult', 'SblHyperparams',
    'UampSblSolver', 'SolverOutcome', 'uamp_sbl', 'uamp_sbl_baseline',
    'classic_sbl_oracle',
    'acquire_row_support', 'identify_common_columns_fixed', 'auto_cluster',
    'uampsbl_pci', 'default_mode', 'couple_common_columns', 'FixedCommonColumnCoupling', 'AutoClusterCoupling',
    'omp_baseline', 'oracle_ls', 'restricted_least_squares',
]
