"""
harmonic_state 测试: 解析目标、误差拟合与流水线
"""

import numpy as np
import pytest

from harmoniq.estimator.cost_model import harmonic_cost
from harmoniq.exceptions import CapExceededError, InfeasibleTargetError, ValidationError
from harmoniq.harmonic_state import (
    COMBINING_PHASE,
    amendment_is_permutation,
    asymptote_states,
    build_amendment,
    build_harmonic,
    calibrate_combining_phase,
    cotangent_target,
    harmonic_target,
    lemma_distance,
    predicted_distance,
    required_ancilla,
    required_total_qubits,
    second_asymptote_target,
)
from harmoniq.simulator import SynthesisModel, distance


class TestTargets:
    """解析目标"""

    def test_harmonic_values(self):
        assert np.allclose(harmonic_target(2).amps.real * 7, [0, 6, 3, 2])

    def test_combined_target_origin(self):
        amps = cotangent_target(3, 2, "combined").amps
        assert amps[0].imag == 0 and amps[0].real > 0
        assert np.allclose(amps[1:].real, 0)

    def test_second_asymptote_origin(self):
        assert second_asymptote_target(3, 2).amps[0].real < 0

    def test_validation(self):
        with pytest.raises(ValidationError):
            cotangent_target(3, 1, "triple")
        with pytest.raises(ValidationError):
            harmonic_target(0)
        with pytest.raises(CapExceededError):
            cotangent_target(20, 10)


class TestErrorFits:
    """误差拟合与阈值"""

    @pytest.mark.parametrize("n,m", [(6, 1), (6, 3), (8, 2), (10, 4)])
    def test_single_fit(self, n, m):
        ratio = lemma_distance(n, m, "single") / predicted_distance(n, m, "single")
        assert abs(ratio - 1.0) <= 0.3

    @pytest.mark.parametrize("n,m", [(4, 3), (6, 4), (8, 5)])
    def test_combined_fit(self, n, m):
        ratio = lemma_distance(n, m, "combined") / predicted_distance(n, m, "combined")
        assert abs(ratio - 1.0) <= 0.3

    @pytest.mark.parametrize("n,m", [(4, 1), (6, 2), (8, 3)])
    def test_combined_beats_single(self, n, m):
        assert lemma_distance(n, m, "combined") < lemma_distance(n, m, "single")

    def test_error_shrinks_with_m(self):
        assert lemma_distance(6, 3) < lemma_distance(6, 2) < lemma_distance(6, 1)

    def test_thresholds(self):
        assert required_total_qubits(1e-10) == 34
        assert required_ancilla(20, 1e-10, "single") == 25
        assert required_ancilla(20, 1e-10, "combined") == 14
        assert required_ancilla(40, 1e-3, "combined") == 1

    def test_infeasible(self):
        with pytest.raises(InfeasibleTargetError):
            required_ancilla(1, 1e-30, "single")
        with pytest.raises(ValidationError):
            required_ancilla(10, 0.0)
        with pytest.raises(ValidationError):
            predicted_distance(10, 2, "triple")


class TestPipeline:
    """QFT 加渐近线修正"""

    @pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 3), (6, 2), (11, 1)])
    def test_combined_exact(self, n, m):
        result = build_harmonic(n, m, None).postselected()
        assert distance(result.state, cotangent_target(n, m, "combined")) <= 1e-10

    @pytest.mark.parametrize("n,m", [(3, 1), (4, 2)])
    def test_single_exact(self, n, m):
        result = build_harmonic(n, m, None, combine=False).postselected()
        assert distance(result.state, cotangent_target(n, m, "single")) <= 1e-10

    def test_asymptotes(self):
        branches = asymptote_states(4, 2)
        assert distance(branches["first"].state, cotangent_target(4, 2, "single")) <= 1e-10
        assert distance(branches["second"].state, second_asymptote_target(4, 2)) <= 1e-10
        assert branches["second"].outcome == 3

    def test_combining_phase(self):
        assert calibrate_combining_phase() == COMBINING_PHASE

    @pytest.mark.parametrize("n,m", [(3, 1), (3, 2), (4, 3)])
    def test_amendment_is_permutation(self, n, m):
        assert amendment_is_permutation(n, m)

    def test_circuit_source_matches_analytic(self):
        program = build_harmonic(3, 2, None)
        analytic = program.postselected(source="analytic")
        built = program.postselected(source="circuit", seed=7)
        assert distance(analytic.state, built.state) <= 1e-9
        assert built.success_prob == pytest.approx(analytic.success_prob, abs=1e-9)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (1, 3), (4, 4)])
    def test_circuit_source_exact(self, n, m):
        result = build_harmonic(n, m, None).postselected(source="circuit")
        assert distance(result.state, cotangent_target(n, m)) <= 1e-10

    def test_success_probability(self):
        result = build_harmonic(7, 3, None).postselected()
        assert result.success_prob >= 0.99

    def test_perturbed_stays_close(self):
        program = build_harmonic(4, 2, 1e-4)
        exact = program.postselected()
        noisy = program.postselected(model=SynthesisModel.perturbed(3))
        gap = distance(exact.state, noisy.state)
        assert 0.0 < gap <= 1e-2

    def test_ledger(self):
        program = build_harmonic(5, 3, 1e-6)
        assert program.circuit.ledger == program.ledger
        assert program.ledger == harmonic_cost(5, 3, 1e-6)

    def test_validation(self):
        with pytest.raises(ValidationError):
            build_harmonic(4, 0)
        with pytest.raises(ValidationError):
            build_amendment(4, 0)
        with pytest.raises(ValidationError):
            build_amendment(4, 2, phase=2 + 0j)
        with pytest.raises(CapExceededError):
            build_harmonic(15, 6)
        with pytest.raises(ValidationError):
            build_harmonic(3, 1).postselected(source="table")
        with pytest.raises(CapExceededError):
            build_harmonic(10, 3, None).postselected(source="circuit")
        with pytest.raises(CapExceededError):
            amendment_is_permutation(6, 3)
