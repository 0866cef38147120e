"""UAMP-SBL求解器测试"""
import pytest
import numpy as np

from src.estimators import SblHyperparams, UampSblSolver, uamp_sbl, uamp_sbl_baseline
from src.utils.errors import InvalidDimensionError, ShapeMismatchError


def _gaussian_sensing(rng, t, n):
    return (rng.standard_normal((t, n)) + 1j * rng.standard_normal((t, n))) / np.sqrt(2 * t)


def _planted(rng, n, k):
    x = np.zeros(n, dtype=np.complex128)
    support = rng.choice(n, size=k, replace=False)
    x[support] = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    return x


@pytest.fixture
def tight_hp():
    """无噪恢复用的严格收敛参数"""
    return SblHyperparams(convergence_threshold=1e-10, max_iterations=500)


class TestUampSbl:
    """单观测向量UAMP-SBL测试"""

    def test_zero_observation(self, rng, default_hp):
        """测试零观测得到零估计且立即收敛"""
        sensing = _gaussian_sensing(rng, 20, 30)
        x, gamma, beta, iterations = uamp_sbl(np.zeros(20), sensing, default_hp)

        np.testing.assert_array_equal(x, 0)
        assert iterations <= 2
        assert np.all(gamma > 0)
        assert beta > 0

    def test_planted_noiseless_recovery(self, rng, tight_hp):
        """测试无噪3-稀疏信号恢复"""
        sensing = _gaussian_sensing(rng, 40, 60)
        x0 = _planted(rng, 60, 3)

        x, _, _, _ = uamp_sbl(sensing @ x0, sensing, tight_hp)

        assert np.linalg.norm(x - x0) ** 2 / np.linalg.norm(x0) ** 2 < 1e-4

    def test_iteration_budget(self, rng):
        """测试迭代次数不超过上限"""
        hp = SblHyperparams(convergence_threshold=1e-15, max_iterations=7, fast_scan_iteration=5)
        sensing = _gaussian_sensing(rng, 20, 30)
        y = sensing @ _planted(rng, 30, 2) + 0.1 * rng.standard_normal(20)

        _, _, _, iterations = uamp_sbl(y, sensing, hp)

        assert iterations == 7

    def test_scale_equivariance(self, rng, default_hp):
        """测试观测放大c倍时估计同样放大"""
        sensing = _gaussian_sensing(rng, 30, 40)
        y = sensing @ _planted(rng, 40, 3) + 0.01 * rng.standard_normal(30)

        x1, _, _, it1 = uamp_sbl(y, sensing, default_hp)
        x2, _, _, it2 = uamp_sbl(4.0 * y, sensing, default_hp)

        assert it1 == it2
        np.testing.assert_allclose(4.0 * x1, x2, rtol=1e-12, atol=1e-14)

    def test_more_pilots_than_unknowns(self, rng, default_hp):
        """测试 T > N 时噪声精度估计合理"""
        sensing = _gaussian_sensing(rng, 80, 20)
        x0 = _planted(rng, 20, 4)
        noise = 1e-2 * (rng.standard_normal(80) + 1j * rng.standard_normal(80)) / np.sqrt(2)

        x, _, beta, _ = uamp_sbl(sensing @ x0 + noise, sensing, default_hp)

        assert np.linalg.norm(x - x0) / np.linalg.norm(x0) < 0.1
        assert 1e3 < beta < 1e5

    def test_noise_precision_estimate_consistent(self, rng, tight_hp):
        """测试 T > N 时 β 估计与真实噪声精度的比值中位数接近1"""
        ratios = []
        for _ in range(20):
            sensing = _gaussian_sensing(rng, 96, 32)
            clean = sensing @ _planted(rng, 32, 4)
            variance = np.mean(np.abs(clean) ** 2) / 100
            noise = np.sqrt(variance / 2) * (rng.standard_normal(96) + 1j * rng.standard_normal(96))

            _, _, beta, _ = uamp_sbl(clean + noise, sensing, tight_hp)
            ratios.append(beta * variance)

        assert 0.8 <= np.median(ratios) <= 1.25

    def test_known_noise_precision(self, rng):
        """测试给定噪声精度时 β 保持不变，且估计随观测等比缩放"""
        sensing = _gaussian_sensing(rng, 12, 16)
        y = sensing @ _planted(rng, 16, 2) + 0.01 * rng.standard_normal(12)
        hp = SblHyperparams(noise_precision=2.5e3)

        x1, _, beta, _ = uamp_sbl(y, sensing, hp)
        x2, _, _, _ = uamp_sbl(4.0 * y, sensing, SblHyperparams(noise_precision=2.5e3 / 16))

        assert beta == pytest.approx(2.5e3, rel=1e-12)
        np.testing.assert_allclose(4.0 * x1, x2, rtol=1e-9, atol=1e-12)

    def test_wrong_length_rejected(self, rng, default_hp):
        """测试观测长度不符"""
        with pytest.raises(ShapeMismatchError):
            uamp_sbl(np.ones(5), _gaussian_sensing(rng, 6, 8), default_hp)

    def test_zero_sensing_rejected(self, default_hp):
        """测试全零感知矩阵"""
        with pytest.raises(InvalidDimensionError):
            uamp_sbl(np.ones(4), np.zeros((4, 6)), default_hp)


class TestUampSblSolver:
    """矩阵形式求解器测试"""

    def test_coupling_hook_called_each_iteration(self, rng, default_hp, mocker):
        """测试耦合钩子按迭代编号调用"""
        sensing = _gaussian_sensing(rng, 20, 30)
        y = sensing @ np.stack([_planted(rng, 30, 2), _planted(rng, 30, 2)], axis=1)
        hook = mocker.Mock(side_effect=lambda i, gamma: gamma)

        outcome = UampSblSolver(sensing, default_hp).solve(y, 1.0, hook)

        calls = [call.args[0] for call in hook.call_args_list]
        assert calls == list(range(outcome.iterations))
        assert hook.call_args_list[0].args[1].shape == (30, 2)

    def test_state_positive(self, rng, default_hp):
        """测试 γ、β 保持正值"""
        sensing = _gaussian_sensing(rng, 25, 40)
        y = sensing @ np.stack([_planted(rng, 40, 3) for _ in range(3)], axis=1)
        y = y + 0.05 * rng.standard_normal(y.shape)

        outcome = UampSblSolver(sensing, default_hp).solve(y, 0.01)

        assert np.all(outcome.gamma > 0)
        assert np.all(outcome.beta > 0)
        assert outcome.x.shape == (40, 3)
        assert len(outcome.history) == outcome.iterations

    def test_converged_flag(self, rng, default_hp):
        """测试收敛标记与末次相对变化一致"""
        sensing = _gaussian_sensing(rng, 30, 40)
        outcome = UampSblSolver(sensing, default_hp).solve(sensing @ _planted(rng, 40, 2), 0.01)
        if outcome.converged:
            assert outcome.history[-1] <= default_hp.convergence_threshold


class TestBaseline:
    """无结构基线测试"""

    def test_shapes(self, generated_trial, default_hp):
        """测试输出形状与迭代记录"""
        _, _, meas = generated_trial
        result = uamp_sbl_baseline(meas.observations, meas.sensing, default_hp)

        assert result.algorithm == "uamp_sbl"
        assert result.angular_hermitian.shape == (4, 16, 4)
        assert result.iterations.shape == (4,)

    def test_shape_mismatch(self, rng, default_hp):
        """测试观测与感知矩阵不符"""
        with pytest.raises(ShapeMismatchError):
            uamp_sbl_baseline(np.zeros((2, 5, 3)), _gaussian_sensing(rng, 6, 8), default_hp)
