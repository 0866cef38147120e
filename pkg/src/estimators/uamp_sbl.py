"""
UAMP-SBL求解器

对感知矩阵做一次经济型SVD后，以矩阵形式同时推进多个观测列：
每列拥有独立的 β、ε、t_x、t_q 标量，列之间仅通过可选的 γ 耦合钩子
（快速扫描机制）和联合收敛判据发生联系。单列即普通UAMP-SBL。
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from src.numerics import economy_svd
from src.utils.errors import DivergenceError, InvalidDimensionError, ShapeMismatchError
from .hyperparams import EstimateResult, SblHyperparams

logger = logging.getLogger(__name__)

# (迭代编号 i, γ^{(i+1)}) -> 耦合后的 γ
GammaCoupling = Callable[[int, np.ndarray], np.ndarray]

# ε 更新自变量按Jensen不等式非负，允许的舍入误差
EPSILON_ARG_TOLERANCE = 1e-12


@dataclass
class SolverOutcome:
    """一次求解的结果（已还原到原始尺度）"""
    x: np.ndarray              # (N, K)
    gamma: np.ndarray          # (N, K)
    beta: np.ndarray           # (K,)
    epsilon: np.ndarray        # (K,)
    iterations: int
    converged: bool
    history: List[float] = field(default_factory=list)


class UampSblSolver:
    """
    固定感知矩阵 S (T×N) 的UAMP-SBL求解器

    S = U·diag(s)·Vᴴ，模型变换为 z = Uᴴy = ψx + n̆，ψ = UᴴS，ϖ = s²。
    """

    def __init__(self, sensing: np.ndarray, hp: SblHyperparams):
        sensing = np.asarray(sensing, dtype=np.complex128)
        if sensing.ndim != 2 or min(sensing.shape) < 1:
            raise InvalidDimensionError(f"感知矩阵形状非法: {sensing.shape}")
        if not np.any(sensing):
            raise InvalidDimensionError("感知矩阵全为零")
        self.hp = hp
        self.pilots, self.unknowns = sensing.shape
        self.u, s, v = economy_svd(sensing)
        self.psi = s[:, None] * v.conj().T
        self.varpi = s ** 2

    def solve(self, y: np.ndarray, epsilon_init: float,
              coupling: Optional[GammaCoupling] = None) -> SolverOutcome:
        """
        执行UAMP-SBL迭代

        Args:
            y: 观测 (T,) 或 (T, K)
            epsilon_init: 形状参数初值 ε⁽⁰⁾
            coupling: 每次 γ 更新后调用的耦合钩子

        Returns:
            SolverOutcome
        """
        y = np.asarray(y, dtype=np.complex128)
        if y.ndim == 1:
            y = y[:, None]
        if y.shape[0] != self.pilots:
            raise ShapeMismatchError(f"观测长度 {y.shape[0]} 与感知矩阵行数 {self.pilots} 不符")

        t, n = self.pilots, self.unknowns
        k = y.shape[1]
        # 初值 t_x=1、β=1、γ=1 假定数据为单位尺度，先按观测RMS归一化
        scale = float(np.sqrt(np.sum(np.abs(y) ** 2) / (k * t)))
        if scale == 0.0:
            scale = 1.0
        y = y / scale

        z = self.u.conj().T @ y
        # 经济型SVD丢弃的 T−r 维分量只含噪声，计入 β 的残差能量
        outside = np.maximum(np.sum(np.abs(y) ** 2, axis=0) - np.sum(np.abs(z) ** 2, axis=0), 0.0)

        varpi = self.varpi[:, None]
        t_x = np.ones(k)
        x = np.zeros((n, k), dtype=np.complex128)
        e = np.zeros_like(z)
        known_beta = self.hp.noise_precision is not None
        beta = np.full(k, self.hp.noise_precision * scale ** 2) if known_beta else np.ones(k)
        epsilon = np.full(k, float(epsilon_init))
        gamma = np.ones((n, k))
        history: List[float] = []
        converged = False

        i = 0
        while i < self.hp.max_iterations:
            t_p = varpi * t_x[None, :]
            p = self.psi @ x - t_p * e
            denom = 1.0 + t_p * beta[None, :]
            v_r = t_p / denom
            r = (t_p * beta[None, :] * z + p) / denom
            if not known_beta:
                beta = t / (np.sum(np.abs(z - r) ** 2, axis=0) + outside + np.sum(v_r, axis=0))
            t_s = 1.0 / (t_p + 1.0 / beta[None, :])
            e = t_s * (z - p)
            t_q = n / (varpi[:, 0] @ t_s)
            q = x + (self.psi.conj().T @ e) * t_q[None, :]
            shrink = 1.0 + gamma * t_q[None, :]
            t_x = (t_q / n) * np.sum(1.0 / shrink, axis=0)
            x_next = q / shrink
            gamma = (2.0 * epsilon[None, :] + 1.0) / (np.abs(x_next) ** 2 + t_x[None, :])

            if coupling is not None:
                gamma = coupling(i, gamma)

            epsilon = self._update_epsilon(gamma, i)

            energy = float(np.sum(np.abs(x_next) ** 2))
            change = float(np.sum(np.abs(x_next - x) ** 2)) / energy if energy > 0.0 else 0.0
            x = x_next
            i += 1
            history.append(change)

            if not (np.all(np.isfinite(x)) and np.all(np.isfinite(gamma)) and np.all(np.isfinite(beta))):
                raise DivergenceError("UAMP-SBL状态出现非有限值", i)
            if np.any(gamma <= 0.0) or np.any(beta <= 0.0):
                raise DivergenceError("精度参数失去正性", i)

            if change <= self.hp.convergence_threshold:
                converged = True
                break

        logger.debug(f"UAMP-SBL结束: 迭代 {i} 次, 收敛={converged}, 末次相对变化={history[-1]:.3e}")
        return SolverOutcome(
            x=x * scale,
            gamma=gamma / scale ** 2,
            beta=beta / scale ** 2,
            epsilon=epsilon,
            iterations=i,
            converged=converged,
            history=history,
        )

    @staticmethod
    def _update_epsilon(gamma: np.ndarray, iteration: int) -> np.ndarray:
        # ε = ½·sqrt(log(mean γ) − mean(log γ))
        argument = np.log(np.mean(gamma, axis=0)) - np.mean(np.log(gamma), axis=0)
        if np.any(argument < -EPSILON_ARG_TOLERANCE):
            raise DivergenceError(f"形状参数更新自变量为负: {argument.min():.3e}", iteration + 1)
        return 0.5 * np.sqrt(np.maximum(argument, 0.0))


def uamp_sbl(y: np.ndarray, sensing: np.ndarray, hp: SblHyperparams,
             epsilon_init: Optional[float] = None):
    """
    普通UAMP-SBL（单观测向量）

    Args:
        y: 长度T的观测
        sensing: 感知矩阵 S (T×N)
        hp: 超参数
        epsilon_init: ε⁽⁰⁾，默认 hp.epsilon_init_plain

    Returns:
        (x̂, γ, β, 迭代次数)
    """
    y = np.asarray(y, dtype=np.complex128).reshape(-1)
    solver = UampSblSolver(sensing, hp)
    eps0 = hp.epsilon_init_plain if epsilon_init is None else epsilon_init
    outcome = solver.solve(y, eps0)
    return outcome.x[:, 0], outcome.gamma[:, 0], float(outcome.beta[0]), outcome.iterations

def uamp_sbl_baseline(observations: np.ndarray, sensing: np.ndarray, hp: SblHyperparams) -> EstimateResult:
    """
    无结构先验的UAMP-SBL基线：逐用户求解 Y̌_j 的全部 M 列

    Args:
        observations: Y̌ (J, T, M)
        sensing: Ω̌ (T, N)
    """
    if observations.ndim != 3 or observations.shape[1] != sensing.shape[0]:
        raise ShapeMismatchError(f"观测形状 {observations.shape} 与感知矩阵 {sensing.shape} 不符")
    solver = UampSblSolver(sensing, hp)
    j_users, _, m = observations.shape
    estimate = np.zeros((j_users, sensing.shape[1], m), dtype=np.complex128)
    iterations = np.zeros(j_users, dtype=np.int64)
    for j in range(j_users):
        outcome = solver.solve(observations[j], hp.epsilon_init_plain)
        estimate[j] = outcome.x
        iterations[j] = outcome.iterations
    return EstimateResult(algorithm="uamp_sbl", angular_hermitian=estimate, iterations=iterations)
