"""
qft 测试: 精确变换、线性态的闭式谱、近似电路与合成误差
"""

import math

import numpy as np
import pytest

from harmoniq.exceptions import CapExceededError, ValidationError
from harmoniq.linear_prep import linear_target
from harmoniq.qft import (
    STATE_ERROR_BAND,
    build_approx_qft,
    conjugation_band,
    exact_qft,
    linear_circulant,
    linear_circulant_norm,
    linear_spectrum,
    measure_conjugation_error,
    measure_state_error,
    predicted_conjugation_error,
    predicted_state_error,
    qft_state,
    qft_t_count,
    qft_t_depth,
    qft_vector,
    synthesized_rotation_count,
)
from harmoniq.simulator import StateVector, is_unitary, unitary_of


def _random_state(n: int, seed: int = 0) -> StateVector:
    rng = np.random.default_rng(seed)
    return StateVector.from_amplitudes(rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n))


class TestExactQft:
    """精确 QFT"""

    def test_matrix_unitary(self):
        assert is_unitary(exact_qft(4))

    def test_state_matches_matrix(self):
        s = _random_state(5)
        assert np.allclose(qft_state(s).amps, exact_qft(5) @ s.amps)

    def test_inverse(self):
        values = _random_state(4, 1).amps
        assert np.allclose(qft_vector(qft_vector(values), inverse=True), values)

    def test_caps(self):
        with pytest.raises(CapExceededError):
            exact_qft(15)
        with pytest.raises(ValidationError):
            exact_qft(0)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_linear_spectrum_closed_form(self, n):
        got = qft_state(linear_target(n)).amps
        assert np.max(np.abs(got - linear_spectrum(n))) <= 1e-10

    def test_spectrum_zero_at_origin(self):
        assert linear_spectrum(4)[0] == 0

    @pytest.mark.parametrize("n", range(1, 6))
    def test_circulant_norm(self, n):
        raw = linear_circulant(n, normalized=False)
        assert np.linalg.norm(raw, 2) == pytest.approx(linear_circulant_norm(n))
        assert np.linalg.norm(linear_circulant(n), 2) == pytest.approx(1.0)


class TestApproximateQft:
    """分层电路与公式账本"""

    @pytest.mark.parametrize("n", range(1, 6))
    def test_unsynthesized_circuit_is_exact(self, n):
        assert np.allclose(unitary_of(build_approx_qft(n, None)), exact_qft(n))

    def test_synthesized_rotation_count(self):
        circuit = build_approx_qft(5, 1e-3)
        assert sum(g.delta is not None for g in circuit.gates) == synthesized_rotation_count(5) == 3
        assert synthesized_rotation_count(3) == 0

    def test_t_depth(self):
        assert round(qft_t_depth(10, 1e-9), 1) == 340.1
        assert qft_t_depth(3, 1e-3) == 7.0
        assert qft_t_depth(2, 1e-3) == 2.0
        assert qft_t_depth(1, 1e-3) == 0.0
        assert build_approx_qft(6, 1e-6).ledger.t_depth == pytest.approx(qft_t_depth(6, 1e-6))

    def test_t_count_grows_with_precision(self):
        assert qft_t_count(8, 1e-12) > qft_t_count(8, 1e-6)
        assert qft_t_count(3, 1e-6) == qft_t_count(3, 1e-12)

    def test_validation(self):
        with pytest.raises(ValidationError):
            build_approx_qft(0)
        with pytest.raises(ValidationError):
            build_approx_qft(4, 0.2)
        with pytest.raises(ValidationError):
            build_approx_qft(4, 0.0)


class TestErrorFits:
    """扰动 QFT 的偏差"""

    def test_predictions(self):
        assert predicted_state_error(8, 1e-3) == pytest.approx((4 - 4 / 3) * 1e-3)
        assert predicted_conjugation_error(6, 1e-3) == pytest.approx(4e-3)

    def test_zero_delta_is_exact(self):
        result = measure_state_error(5, 0.0, seeds=50)
        assert result.mean <= 1e-10
        assert result.ratio == 0.0

    def test_thread_count_does_not_change_result(self):
        a = measure_state_error(5, 1e-4, seeds=50, seed=3, threads=1)
        b = measure_state_error(5, 1e-4, seeds=50, seed=3, threads=3)
        assert a.mean == b.mean

    @pytest.mark.parametrize("delta", [1e-2, 1e-3])
    @pytest.mark.parametrize("n", [6, 8, 10, 12])
    def test_state_error_within_band(self, n, delta):
        result = measure_state_error(n, delta, seeds=50)
        lo, hi = STATE_ERROR_BAND
        assert lo <= result.ratio <= hi
        assert result.to_dict()["ratio"] == result.ratio

    def test_conjugation_bands(self):
        assert conjugation_band(4) == (0.25, 2.0)
        assert conjugation_band(6) == conjugation_band(8) == (0.5, 2.0)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [4, 8])
    def test_conjugation_error_within_band(self, n):
        lo, hi = conjugation_band(n)
        assert lo <= measure_conjugation_error(n, 1e-3, seeds=50).ratio <= hi

    def test_validation(self):
        with pytest.raises(ValidationError):
            measure_state_error(2, 1e-4)
        with pytest.raises(ValidationError):
            measure_state_error(5, 1e-4, seeds=10)
        with pytest.raises(ValidationError):
            measure_conjugation_error(9, 1e-4)
        with pytest.raises(ValidationError):
            measure_state_error(5, math.inf)
