"""
simulator 测试: 态矢量、门作用、后选择与块提取
"""

import math

import numpy as np
import pytest

from harmoniq.circuit_core import Circuit, CircuitBuilder, Gate, Register, compose
from harmoniq.circuit_core.gates import FIXED_ARITY, KNOWN_KINDS, ROTATION_KINDS
from harmoniq.exceptions import CapExceededError, ImpossibleOutcomeError, ValidationError
from harmoniq.simulator import (
    StateVector,
    SynthesisModel,
    best_scalar_fit,
    block_of,
    distance,
    is_unitary,
    outcome_probabilities,
    postselect,
    run,
    unitary_of,
)


def _builder(width: int) -> CircuitBuilder:
    return CircuitBuilder([Register("data", 0, width)])


def _random_circuit(rng: np.random.Generator, width: int, count: int) -> Circuit:
    kinds = [k for k in KNOWN_KINDS if k != "Measure"]
    b = _builder(width)
    for _ in range(count):
        kind = kinds[rng.integers(len(kinds))]
        qubits = rng.choice(width, size=FIXED_ARITY.get(kind, 3), replace=False)
        angle = float(rng.uniform(-math.pi, math.pi)) if kind in ROTATION_KINDS else None
        b.add(Gate(kind, tuple(qubits), angle))
    return b.build()


class TestStateVector:
    """态矢量构造"""

    def test_normalization_enforced(self):
        with pytest.raises(ValidationError):
            StateVector(1, np.array([1.0, 1.0]))

    def test_from_amplitudes(self):
        s = StateVector.from_amplitudes([3, 4])
        assert np.allclose(s.amps, [0.6, 0.8])
        with pytest.raises(ValidationError):
            StateVector.from_amplitudes([1, 2, 3])
        with pytest.raises(ValidationError):
            StateVector.from_amplitudes([0, 0])

    def test_tensor_order(self):
        s = StateVector.basis(1, 1).tensor(StateVector.zero(1))
        assert s.amps[2] == 1.0

    def test_dump(self):
        d = StateVector.basis(1, 1).dump()
        assert d == {"qubits": 1, "amplitudes": [[0.0, 0.0], [1.0, 0.0]]}


class TestRun:
    """门的作用与大端序"""

    def test_big_endian(self):
        out = run(_builder(2).x(0).build())
        assert out.amps[2] == pytest.approx(1.0)

    def test_bell(self):
        out = run(_builder(2).h(0).cx(0, 1).build())
        assert np.allclose(out.amps, [1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)])

    def test_rz_phase_form(self):
        out = run(_builder(1).h(0).rz(0, 0.7).build())
        assert out.amps[0] == pytest.approx(1 / math.sqrt(2))
        assert out.amps[1] == pytest.approx(np.exp(0.7j) / math.sqrt(2))

    def test_extra_controls(self):
        b = _builder(3).x(0)
        b.add(Gate("X", (2,), controls=(0, 1)))
        assert run(b.build()).amps[4] == pytest.approx(1.0)
        b.x(1).add(Gate("X", (2,), controls=(0, 1)))
        assert run(b.build()).amps[7] == pytest.approx(1.0)

    def test_incrementer_wraps(self):
        for start in range(4):
            b = _builder(2)
            for q in range(2):
                if (start >> (1 - q)) & 1:
                    b.x(q)
            b.incrementer([0, 1])
            assert abs(run(b.build()).amps[(start + 1) % 4]) == pytest.approx(1.0)

    def test_swap_and_cswap(self):
        b = _builder(3).x(1).cswap(0, 1, 2)
        assert run(b.build()).amps[2] == pytest.approx(1.0)
        b = _builder(3).x(0).x(1).cswap(0, 1, 2)
        assert run(b.build()).amps[5] == pytest.approx(1.0)

    def test_width_mismatch(self):
        with pytest.raises(ValidationError):
            run(_builder(2).build(), StateVector.zero(1))

    def test_perturbed_is_reproducible(self):
        c = _builder(1).h(0).rz(0, 0.5, 1e-3).build()
        exact = run(c)
        a = run(c, model=SynthesisModel.perturbed(7))
        b = run(c, model=SynthesisModel.perturbed(7))
        assert np.array_equal(a.amps, b.amps)
        expected = abs(np.exp(1e-3j) - 1) / math.sqrt(2)
        assert np.linalg.norm(a.amps - exact.amps) == pytest.approx(expected)

    def test_model_override_delta(self):
        c = _builder(1).h(0).rz(0, 0.5, 1e-3).build()
        a = run(c, model=SynthesisModel.perturbed(1, delta=0.0))
        assert np.allclose(a.amps, run(c).amps)
        with pytest.raises(ValidationError):
            SynthesisModel("noisy")


class TestPostselect:
    """后选择"""

    def test_probability_and_state(self):
        bell = StateVector.from_amplitudes([1, 0, 0, 1])
        post, p = postselect(bell, [0], 1, keep=False)
        assert p == pytest.approx(0.5)
        assert np.allclose(post.amps, [0, 1])

    def test_impossible(self):
        with pytest.raises(ImpossibleOutcomeError):
            postselect(StateVector.zero(2), [1], [1])

    def test_bad_qubits(self):
        with pytest.raises(ValidationError):
            postselect(StateVector.zero(2), [2], [0])

    def test_outcome_probabilities(self):
        s = run(_builder(2).h(1).build())
        assert np.allclose(outcome_probabilities(s, [1]), [0.5, 0.5])
        assert np.allclose(outcome_probabilities(s, [0]), [1.0, 0.0])


class TestOracle:
    """酉矩阵、块与距离"""

    def test_unitary_of_h(self):
        u = unitary_of(_builder(1).h(0).build())
        assert np.allclose(u, np.array([[1, 1], [1, -1]]) / math.sqrt(2))
        assert is_unitary(u)

    def test_unitary_cap(self):
        with pytest.raises(CapExceededError):
            unitary_of(_builder(3).build(), cap=2)

    def test_block_of_hadamard_ancilla(self):
        b = CircuitBuilder([Register("anc", 0, 1, "clean"), Register("data", 1, 2)]).h(0)
        block = block_of(b.build(), [0])
        assert np.allclose(block, np.eye(4) / math.sqrt(2))

    def test_block_of_ancilla_value(self):
        b = CircuitBuilder([Register("anc", 0, 1, "clean"), Register("data", 1, 1)]).cx(1, 0)
        block = block_of(b.build(), [0], ancilla_value=0)
        assert np.allclose(block, np.diag([1, 0]))

    def test_distance_phase_invariant(self):
        a = StateVector.from_amplitudes([1, 1j])
        b = StateVector(1, a.amps * 1j)
        assert distance(a, b) == pytest.approx(0.0, abs=1e-12)
        assert distance(a, b, phase_invariant=False) > 1.0

    def test_distance_matrix_norms(self):
        m = np.diag([1.0, 0.0])
        assert distance(m, np.zeros((2, 2))) == pytest.approx(1.0)
        assert distance(m, np.zeros((2, 2)), norm="max") == pytest.approx(1.0)
        with pytest.raises(ValidationError):
            distance(m, np.zeros((3, 3)))

    def test_best_scalar_fit(self):
        target = np.array([[1.0, 2.0], [3.0, 4.0]])
        scale, residual = best_scalar_fit(-0.5j * target, target)
        assert scale == pytest.approx(-0.5j)
        assert residual == pytest.approx(0.0, abs=1e-12)

    def test_distance_resolves_tiny_gap(self):
        rng = np.random.default_rng(5)
        a = StateVector.from_amplitudes(rng.normal(size=64) + 1j * rng.normal(size=64))
        w = rng.normal(size=64) + 1j * rng.normal(size=64)
        v = w - np.vdot(a.amps, w) * a.amps
        v /= np.linalg.norm(v)
        b = StateVector(6, a.amps + 1e-13 * v)
        assert distance(a, b) == pytest.approx(1e-13, rel=1e-2)
        assert distance(a, StateVector(6, b.amps * 1j)) == pytest.approx(1e-13, rel=1e-2)
        assert distance(a, a) <= 1e-15


class TestInvariants:
    """随机电路上的不变量"""

    @pytest.mark.parametrize("seed", range(5))
    def test_norm_preserved(self, seed):
        rng = np.random.default_rng(seed)
        circuit = _random_circuit(rng, 5, 40)
        amps = rng.normal(size=32) + 1j * rng.normal(size=32)
        out = run(circuit, StateVector.from_amplitudes(amps))
        assert np.linalg.norm(out.amps) == pytest.approx(1.0, abs=1e-12)

    def test_compose_multiplies_unitaries(self):
        rng = np.random.default_rng(11)
        a = _random_circuit(rng, 3, 15)
        b = _random_circuit(rng, 3, 15)
        got = unitary_of(compose(a, b))
        assert np.allclose(got, unitary_of(b) @ unitary_of(a), atol=1e-12)

    def test_postselect_probabilities_sum_to_one(self):
        rng = np.random.default_rng(2)
        state = StateVector.from_amplitudes(rng.normal(size=16) + 1j * rng.normal(size=16))
        total = sum(postselect(state, [0, 2], outcome)[1] for outcome in range(4))
        assert total == pytest.approx(1.0, abs=1e-12)
