"""
circulant_block 测试: 目标矩阵、分量块编码、循环矩阵 LCU 与对角谐波块编码
"""

import math

import numpy as np
import pytest

from harmoniq.circulant_block import (
    COMPONENTS,
    analytic_weights,
    build_circulant_encoding,
    build_component_circuit,
    build_component_encoding,
    build_diag_harmonic,
    build_diag_harmonic_circuit,
    circulant_alpha,
    convolution_check,
    decomposition_weights,
    diag_harmonic_target,
    diag_l_closed_form_check,
    mean_block_error,
    perturbed_block_error,
    predicted_block_error,
    predicted_diag_distance,
    r_ratio,
    solve_lcu_weights,
    target_matrix,
    unit_norm_distance,
)
from harmoniq.exceptions import CapExceededError, ValidationError
from harmoniq.simulator import distance, unitary_of


class TestTargets:
    """目标矩阵与卷积定理"""

    def test_circulant_n1(self):
        assert np.allclose(target_matrix("CIRCULANT", 1), [[0.5, -0.5], [-0.5, 0.5]])

    def test_d_matrix_n2(self):
        d = target_matrix("D", 2)
        assert np.allclose(d[0], [1, 1, 1, 0])
        assert d[3, 3] == pytest.approx(-5 / 3)
        assert r_ratio(2) == pytest.approx(5 / 3)

    def test_xn_is_anti_identity(self):
        assert np.allclose(target_matrix("XN", 3), np.fliplr(np.eye(8)))

    def test_grover_and_r(self):
        assert np.allclose(target_matrix("GROVER", 1), [[0, 1], [1, 0]])
        assert np.allclose(target_matrix("R", 3), np.diag([1, -9 / 7]))

    def test_unknown_selector(self):
        with pytest.raises(ValidationError):
            target_matrix("EYE", 2)
        with pytest.raises(CapExceededError):
            target_matrix("ONES", 11)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_convolution_diagonalizes(self, n):
        rng = np.random.default_rng(n)
        v = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
        report = convolution_check(v, n)
        assert report.max_off_diagonal <= 1e-10
        assert report.scalar == pytest.approx(math.sqrt(2 ** n))

    def test_convolution_zero_vector(self):
        assert convolution_check(np.zeros(4), 2).scalar is None

    def test_convolution_validation(self):
        with pytest.raises(ValidationError):
            convolution_check(np.ones(3), 2)
        with pytest.raises(CapExceededError):
            convolution_check(np.ones(32), 5)


class TestComponents:
    """各分量块编码"""

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_grover_reflection(self, k):
        uniform = np.full(2 ** k, 2 ** (-k / 2))
        for g in (target_matrix("GROVER", k), unitary_of(build_component_circuit("GROVER", k))):
            assert np.allclose(g @ g, np.eye(2 ** k), atol=1e-10)
            assert distance(g @ uniform, uniform) <= 1e-10

    @pytest.mark.parametrize("which", COMPONENTS)
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_residual(self, which, n):
        _, report = build_component_encoding(which, n)
        assert report.distance <= 1e-10

    @pytest.mark.parametrize("n", [2, 3])
    def test_proportionality(self, n):
        size = 2 ** n
        expected = {"ONES": 1 / size, "DIAG_L": 1.0, "D": 1 / (size + 1), "XN": 1.0, "GROVER": 1.0,
                    "R": 1 / r_ratio(n)}
        for which, value in expected.items():
            _, report = build_component_encoding(which, n)
            assert abs(report.proportionality) == pytest.approx(value), which

    def test_report_dict(self):
        _, report = build_component_encoding("ONES", 3)
        d = report.to_dict()
        assert set(d) == {"proportionality", "alpha", "max_element", "distance"}

    def test_validation(self):
        with pytest.raises(ValidationError):
            build_component_encoding("EYE", 2)
        with pytest.raises(CapExceededError):
            build_component_encoding("ONES", 9)


class TestCirculant:
    """线性循环矩阵的 LCU 块编码"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_decomposition_weights(self, n):
        result = decomposition_weights(n)
        half = (2 ** n - 1) / 2
        assert np.allclose(result["weights"], [1, 1, -half, -half])
        assert result["residual"] <= 1e-10

    def test_analytic_weight_sum(self):
        for n in range(2, 9):
            size = 2 ** n
            assert np.abs(analytic_weights(n)).sum() == pytest.approx((size - 1) * (3 * size + 2) / 2)

    def test_solved_weights_match_analytic(self):
        weights, residual = solve_lcu_weights(3)
        assert residual <= 1e-8
        assert np.allclose(np.abs(weights), np.abs(analytic_weights(3)), rtol=1e-8)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_exact_encoding(self, n):
        circuit, report = build_circulant_encoding(n)
        assert report.distance <= 1e-10
        assert report.alpha == pytest.approx(circulant_alpha(n), rel=1e-8)
        assert report.max_element == pytest.approx(1 / (3 * 2 ** n + 2), rel=1e-8)
        assert len(circuit.qubits("select")) == 2

    @pytest.mark.slow
    def test_alpha_at_six_qubits(self):
        _, report = build_circulant_encoding(6)
        assert 0.1008 <= report.alpha <= 0.1114
        assert report.max_element == pytest.approx(1 / 194, rel=1e-6)

    def test_alpha_closed_form(self):
        assert round(circulant_alpha(6), 4) == 0.1067

    def test_diag_l_is_affine(self):
        check = diag_l_closed_form_check(4)
        assert check["ours_affine_residual"] <= 1e-12
        assert check["ours_slope"] < 0

    def test_alpha_converges(self):
        gaps = [circulant_alpha(n) - 1 / (3 * math.pi) for n in range(5, 10)]
        assert all(g > 0 for g in gaps)
        assert all(a > b for a, b in zip(gaps, gaps[1:]))

    def test_perturbed_error_reproducible(self):
        err = perturbed_block_error(3, 1e-4, seed=1)
        assert err > 0.0
        assert perturbed_block_error(3, 1e-4, seed=1) == err

    def test_normalized_error_tracks_prediction(self):
        ratio = mean_block_error(3, 1e-3) / predicted_block_error(3, 1e-3)
        assert 0.5 <= ratio <= 2.0

    @pytest.mark.slow
    def test_normalized_error_four_qubits(self):
        ratio = mean_block_error(4, 1e-3) / predicted_block_error(4, 1e-3)
        assert 0.5 <= ratio <= 2.0

    def test_mean_error_validation(self):
        with pytest.raises(ValidationError):
            mean_block_error(3, 0.0)
        with pytest.raises(ValidationError):
            mean_block_error(3, 1e-3, seeds=0)

    def test_range(self):
        with pytest.raises(CapExceededError):
            build_circulant_encoding(9)


class TestDiagHarmonic:
    """QFT·C·QFT 的对角谐波块"""

    def test_target(self):
        target = diag_harmonic_target(2)
        assert target[0, 0] == 0
        assert np.allclose(np.diag(target).imag * 7, [0, 6, 3, 2])

    @pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (2, 3)])
    def test_distance_within_bound(self, n, m):
        _, report = build_diag_harmonic(n, m)
        assert report.distance <= 2 * predicted_diag_distance(n, m)

    @pytest.mark.slow
    def test_distance_larger_register(self):
        _, report = build_diag_harmonic(4, 3)
        assert report.distance <= 2 * math.pi / 128

    def test_distance_shrinks_with_m(self):
        _, small = build_diag_harmonic(2, 2)
        _, large = build_diag_harmonic(2, 4)
        assert large.distance < small.distance

    def test_ledger_success(self):
        circuit = build_diag_harmonic_circuit(2, 2)
        assert circuit.ledger.success_prob == pytest.approx(circulant_alpha(4) ** 2)

    def test_unit_norm_distance(self):
        t = diag_harmonic_target(3)
        assert unit_norm_distance(-2j * t, t) == pytest.approx(0.0, abs=1e-12)
        with pytest.raises(ValidationError):
            unit_norm_distance(np.zeros((8, 8)), t)
        with pytest.raises(ValidationError):
            unit_norm_distance(np.eye(4), t)

    def test_validation(self):
        with pytest.raises(ValidationError):
            build_diag_harmonic_circuit(0, 2)
        with pytest.raises(ValidationError):
            build_diag_harmonic_circuit(2, -1)
        with pytest.raises(CapExceededError):
            build_diag_harmonic_circuit(5, 4)
