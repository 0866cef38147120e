"""
经典SBL重估计（小规模验证用）
每次迭代 O(N³)，只用于与UAMP-SBL的对照
"""

import logging

import numpy as np
from scipy import linalg

logger = logging.getLogger(__name__)

# 经典SBL固定的Gamma先验参数
CLASSIC_EPSILON = 0.001
CLASSIC_ETA = 0.0
REGULARIZATION = 1e-12

def classic_sbl_oracle(y: np.ndarray, sensing: np.ndarray, beta: float, iterations: int) -> np.ndarray:
    """
    Σ = [βSᴴS + diag(γ)]⁻¹，μ = βΣSᴴy，γ_n = (2ε+1)/(2η + |μ_n|² + Σ_nn)

    Args:
        y: 观测 (T,)
        sensing: 感知矩阵 S (T×N)
        beta: 已知噪声精度
        iterations: 迭代次数

    Returns:
        后验均值 μ
    """
    y = np.asarray(y, dtype=np.complex128).reshape(-1)
    s = np.asarray(sensing, dtype=np.complex128)
    n = s.shape[1]
    gram = beta * (s.conj().T @ s)
    projected = beta * (s.conj().T @ y)
    gamma = np.ones(n)
    mu = np.zeros(n, dtype=np.complex128)

    for _ in range(iterations):
        precision = gram + np.diag(gamma)
        try:
            sigma = linalg.inv(precision)
        except linalg.LinAlgError:
            logger.debug("经典SBL精度矩阵奇异，对角加正则后重试")
            sigma = linalg.inv(precision + REGULARIZATION * np.eye(n))
        mu = sigma @ projected
        gamma = (2 * CLASSIC_EPSILON + 1) / (2 * CLASSIC_ETA + np.abs(mu) ** 2 + np.real(np.diag(sigma)))
    return mu
