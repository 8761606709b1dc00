"""
linear_prep 测试: SELECT-Z、|L⟩ 的直接构造与约化
"""

import numpy as np
import pytest

from harmoniq.exceptions import ValidationError
from harmoniq.linear_prep import (
    apply_correction,
    build_linear,
    build_linear_core,
    build_select_z,
    correction_pattern,
    is_power_of_two,
    linear_expected_t_depth,
    linear_quoted_ancilla,
    linear_target,
    prepare_linear_state,
    reduce_linear,
    reduction_failure_estimate,
    reduction_failure_exact,
    select_width,
)
from harmoniq.simulator import StateVector, distance, postselect, run, unitary_of


class TestSelectZ:
    """SELECT 预言机"""

    def test_width(self):
        assert select_width(1) == 0
        assert select_width(2) == 1
        assert select_width(8) == 3
        assert is_power_of_two(16) and not is_power_of_two(6)

    def test_unitary_n2(self):
        u = unitary_of(build_select_z(2))
        expected = np.diag([1, -1, 1, -1, 1, 1, -1, -1]).astype(complex)
        assert np.allclose(u, expected)

    def test_ledger(self):
        ledger = build_select_z(8).ledger
        assert ledger.t_depth == 12.0
        assert ledger.t_count == 4.0 * 3 * 8

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValidationError):
            build_select_z(6)
        with pytest.raises(ValidationError):
            build_select_z(32)


class TestLinearTarget:
    """解析目标"""

    def test_values(self):
        amps = linear_target(2).amps.real * np.sqrt(5)
        assert np.allclose(amps, [1.5, 0.5, -0.5, -1.5])

    def test_invalid(self):
        with pytest.raises(ValidationError):
            linear_target(0)


class TestDirectConstruction:
    """2 的幂次 n 的直接构造"""

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_exact_and_clean(self, n):
        result = build_linear(n).prepare(seed=1)
        assert distance(result.state, linear_target(n)) <= 1e-12
        assert result.ancilla_prob == pytest.approx(1.0, abs=1e-12)

    def test_uncorrected_outcomes_fixed_classically(self):
        n = 4
        program = build_linear(n)
        core = build_linear_core(n, corrected=False)
        exp_state = program.exponential.prepare(seed=2).state
        state = run(core, exp_state.tensor(StateVector.zero(n)))
        for outcome in range(2 ** select_width(n)):
            bits = [(outcome >> (select_width(n) - 1 - i)) & 1 for i in range(select_width(n))]
            data, prob = postselect(state, core.qubits("select"), bits, keep=False)
            assert prob == pytest.approx(0.25)
            fixed = apply_correction(data, correction_pattern(n, outcome))
            assert distance(fixed, linear_target(n)) <= 1e-12

    def test_correction_pattern(self):
        assert correction_pattern(4, 0) == ()
        # 结果 1 翻转 k = 1, 3 两项，对应数据量子比特 2 与 0
        assert correction_pattern(4, 1) == (2, 0)
        with pytest.raises(ValidationError):
            correction_pattern(4, 4)

    def test_ledger(self):
        program = build_linear(8)
        assert program.ledger.expected_t_depth == 28.0
        assert linear_expected_t_depth(8) == 28.0
        assert program.quoted_ancilla == linear_quoted_ancilla(8) == 13
        assert program.measured_ancilla == 3 + program.ledger.persistent_ancilla

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValidationError):
            build_linear(6)
        with pytest.raises(ValidationError):
            build_linear(1)


class TestReduction:
    """逐位约化"""

    def test_failure_probability_exact(self):
        reduced, p = reduce_linear(linear_target(2))
        assert 1.0 - p == pytest.approx(reduction_failure_exact(2))
        assert 1.0 - p == pytest.approx(0.2)
        assert distance(reduced, linear_target(1)) <= 1e-12

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_failure_close_to_estimate(self, n):
        _, p = reduce_linear(linear_target(n))
        assert 1.0 - p == pytest.approx(reduction_failure_exact(n), abs=1e-12)
        assert reduction_failure_exact(n) > reduction_failure_estimate(n)

    def test_rejects_non_linear(self):
        with pytest.raises(ValidationError):
            reduce_linear(StateVector.zero(2))
        with pytest.raises(ValidationError):
            reduce_linear(linear_target(1))

    @pytest.mark.parametrize("n", [1, 3, 5, 6, 7])
    def test_prepare_any_n(self, n):
        prep = prepare_linear_state(n, seed=4)
        assert distance(prep.state, linear_target(n)) <= 1e-9
        assert len(prep.reductions) == prep.built_qubits - n
        assert prep.success_prob == pytest.approx(np.prod(prep.reductions) if prep.reductions else 1.0)
        assert prep.success_prob <= prep.estimated_success_prob
        assert prep.success_prob == pytest.approx(prep.estimated_success_prob, rel=0.05)

    def test_prepare_bounds(self):
        with pytest.raises(ValidationError):
            prepare_linear_state(0)
        with pytest.raises(ValidationError):
            prepare_linear_state(13)
