"""
rotation_widgets 测试: 小部件、指数态与重复直到成功统计
"""

import math

import numpy as np
import pytest

from harmoniq.exceptions import ValidationError
from harmoniq.rotation_widgets import (
    ExponentialSpec,
    WidgetSpec,
    build_exponential,
    build_widget,
    exact_parallel_depth,
    expected_tdepth_mc,
    exponential_target,
    rus_depth_fit,
    simulate_widget,
    single_ancilla_estimate,
    widget_tradeoff,
)
from harmoniq.rotation_widgets.rus import default_component_probabilities
from harmoniq.simulator import distance


class TestWidget:
    """单个小部件"""

    @pytest.mark.parametrize("k", range(1, 9))
    def test_success_and_state(self, k):
        spec = WidgetSpec(k)
        state, prob = simulate_widget(k)
        assert prob == pytest.approx(0.5 + 2.0 ** (-(k + 1)), abs=1e-12)
        assert distance(state, spec.target_state()) <= 1e-12

    def test_ratio(self):
        assert WidgetSpec(4).ratio == pytest.approx(0.25)

    def test_ledger(self):
        circuit = build_widget(3)
        assert circuit.ledger.t_depth == 2.0
        assert circuit.ledger.persistent_ancilla == 3
        assert len(circuit.qubits("widget")) == 3

    def test_bounds(self):
        with pytest.raises(ValidationError):
            WidgetSpec(0)
        with pytest.raises(ValidationError):
            build_widget(21)

    def test_above_cap_uses_closed_form(self):
        state, prob = simulate_widget(40)
        assert prob == pytest.approx(0.5)
        assert state.amps[1].real == pytest.approx(2.0 ** -20, rel=1e-6)


class TestExponential:
    """指数态 |e_β⟩"""

    def test_widget_exponents(self):
        assert [w.k for w in ExponentialSpec(2, 0.5).widgets] == [4, 2]
        assert [w.k for w in ExponentialSpec(2, 1 / math.sqrt(2)).widgets] == [2, 1]

    def test_ancilla_counts(self):
        spec = ExponentialSpec(3, 0.5)
        assert spec.widget_ancilla == 8 + 4 + 2
        assert spec.quoted_ancilla == 28

    def test_unsupported_base(self):
        with pytest.raises(ValidationError):
            ExponentialSpec(2, 0.3)
        with pytest.raises(ValidationError):
            ExponentialSpec(-1)

    @pytest.mark.parametrize("beta", [0.5, 1 / math.sqrt(2)])
    def test_prepare_matches_target(self, beta):
        result = build_exponential(ExponentialSpec(3, beta)).prepare(seed=5)
        assert distance(result.state, exponential_target(3, beta)) <= 1e-12
        assert len(result.attempts) == 3
        assert result.t_depth == 2.0 * max(result.attempts)

    def test_prepare_reproducible(self):
        program = build_exponential(ExponentialSpec(3))
        assert program.prepare(seed=9).attempts == program.prepare(seed=9).attempts

    def test_program_ledger(self):
        program = build_exponential(ExponentialSpec(3))
        assert program.ledger.expected_t_depth == pytest.approx(rus_depth_fit(3))
        assert program.ledger.t_count == 2.0 * 14


class TestRepeatUntilSuccess:
    """期望 T 深度"""

    def test_default_probabilities_follow_root_half_widgets(self):
        widgets = ExponentialSpec(4, 1 / math.sqrt(2)).widgets
        expected = sorted(w.success_prob for w in widgets)
        assert np.allclose(sorted(default_component_probabilities(4)), expected)

    def test_fit_values(self):
        assert rus_depth_fit(4) == pytest.approx(2 * math.log2(10.92))
        assert single_ancilla_estimate(3) == 16.0

    def test_exact_single_geometric(self):
        # E[G] = 1/p
        assert exact_parallel_depth([0.5]) == pytest.approx(4.0)
        assert exact_parallel_depth([1.0]) == pytest.approx(2.0)

    def test_mc_deterministic(self):
        a = expected_tdepth_mc(4, 20_000, seed=3, threads=1)
        b = expected_tdepth_mc(4, 20_000, seed=3, threads=4)
        assert a.mean == b.mean
        assert a.stderr == b.stderr

    def test_mc_matches_exact(self):
        est = expected_tdepth_mc(6, 50_000, seed=11)
        exact = exact_parallel_depth(default_component_probabilities(6))
        assert abs(est.mean - exact) <= 6 * est.stderr

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [4, 16, 64])
    def test_mc_close_to_fit(self, n):
        est = expected_tdepth_mc(n, 100_000)
        assert abs(est.mean / est.fit - 1.0) <= 0.15

    def test_validation(self):
        with pytest.raises(ValidationError):
            expected_tdepth_mc(4, 9_999)
        with pytest.raises(ValidationError):
            expected_tdepth_mc(0)
        with pytest.raises(ValidationError):
            expected_tdepth_mc(2, 10_000, probabilities=[0.5, 0.0])

    def test_tradeoff_rows(self):
        rows = widget_tradeoff(3)
        assert [row["k"] for row in rows[:-1]] == [8, 4, 2]
        summary = rows[-1]
        assert summary["ancilla"] == 14
        assert summary["single_ancilla"] == 16.0
        assert summary["success_prob"] == pytest.approx(np.prod([r["success_prob"] for r in rows[:-1]]))
