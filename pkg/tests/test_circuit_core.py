"""
circuit_core 测试: 门、寄存器、账本、代价与序列化
"""

import json
import math

import numpy as np
import pytest

from harmoniq.circuit_core import (
    Circuit,
    CircuitBuilder,
    Gate,
    Register,
    ResourceEstimate,
    append,
    compose,
    cost_of_gate,
    deserialize,
    naive_ledger,
    read_circuit,
    rotation,
    rotation_t_cost,
    serialize,
    write_circuit,
)
from harmoniq.circuit_core.gates import FIXED_ARITY, KNOWN_KINDS, ROTATION_KINDS
from harmoniq.exceptions import CircuitParseError, RegisterMismatchError, ValidationError


class TestGate:
    """门的校验与取逆"""

    def test_fixed_arity(self):
        with pytest.raises(ValidationError):
            Gate("CX", (0,))

    def test_duplicate_qubits(self):
        with pytest.raises(ValidationError):
            Gate("CX", (1, 1))
        with pytest.raises(ValidationError):
            Gate("H", (0,), controls=(0,))

    def test_rotation_requires_angle(self):
        with pytest.raises(ValidationError):
            Gate("Rz", (0,))
        with pytest.raises(ValidationError):
            Gate("H", (0,), angle=0.1)

    def test_delta_only_on_rotations(self):
        with pytest.raises(ValidationError):
            Gate("H", (0,), delta=1e-3)
        with pytest.raises(ValidationError):
            rotation("Rz", (0,), 0.1, delta=1.5)
        assert rotation("Rz", (0,), 0.1, delta=1e-3).synthesized

    def test_inverse(self):
        assert Gate("S", (0,)).inverse().kind == "Sdg"
        assert Gate("T", (0,)).inverse().kind == "Tdg"
        assert Gate("Incrementer", (0, 1)).inverse().kind == "Decrementer"
        assert rotation("Ry", (0,), 0.3).inverse().angle == -0.3
        assert Gate("CSWAP", (0, 1, 2)).inverse() == Gate("CSWAP", (0, 1, 2))
        with pytest.raises(ValidationError):
            Gate("Measure", (0,)).inverse()

    def test_with_controls_prepends(self):
        gate = Gate("X", (2,), controls=(1,)).with_controls((0,))
        assert gate.controls == (0, 1)
        assert gate.all_qubits == (0, 1, 2)


class TestCircuit:
    """寄存器划分、构造器与拼接"""

    def test_registers_must_partition(self):
        with pytest.raises(ValidationError):
            Circuit(3, (Register("a", 0, 1), Register("b", 2, 1)))
        with pytest.raises(ValidationError):
            Circuit(2, (Register("a", 0, 1), Register("a", 1, 1)))

    def test_register_kind(self):
        with pytest.raises(ValidationError):
            Register("a", 0, 1, "dirty")

    def test_gate_out_of_range(self):
        with pytest.raises(ValidationError):
            append(Circuit.empty(1), Gate("CX", (0, 1)))

    def test_controlled_on_flips_zero_controls(self):
        b = CircuitBuilder([Register("ctrl", 0, 2), Register("data", 2, 1)])
        with b.controlled_on([0, 1], [1, 0]):
            b.x(2)
        kinds = [(g.kind, g.qubits, g.controls) for g in b.gates]
        assert kinds == [("X", (1,), ()), ("X", (2,), (0, 1)), ("X", (1,), ())]

    def test_nested_controls(self):
        b = CircuitBuilder([Register("data", 0, 3)])
        with b.controlled_on([0]):
            with b.controlled_on([1]):
                b.z(2)
        assert b.gates[-1].controls == (1, 0)

    def test_inverse_reverses(self):
        c = CircuitBuilder([Register("data", 0, 1)]).h(0).s(0).build()
        assert [g.kind for g in c.inverse().gates] == ["Sdg", "H"]

    def test_compose_ledgers(self):
        regs = [Register("data", 0, 1)]
        a = CircuitBuilder(regs).h(0).build(ResourceEstimate.deterministic(4, 2))
        b = CircuitBuilder(regs).x(0).build(ResourceEstimate.repeat_until_success(2, 1, 0.5))
        c = compose(a, b)
        assert len(c) == 2
        assert c.ledger.t_count == 6.0
        assert c.ledger.success_prob == 0.5

    def test_compose_layout_mismatch(self):
        a = Circuit.empty(2, [Register("data", 0, 2)])
        b = Circuit.empty(2, [Register("anc", 0, 1), Register("data", 1, 1)])
        with pytest.raises(RegisterMismatchError):
            compose(a, b)

    def test_unknown_register(self):
        with pytest.raises(ValidationError):
            Circuit.empty(1).qubits("missing")


class TestLedger:
    """资源账本"""

    def test_repeat_until_success(self):
        ledger = ResourceEstimate.repeat_until_success(10, 4, 0.5)
        assert ledger.expected_t_depth == 8.0

    def test_invalid_fields(self):
        with pytest.raises(ValidationError):
            ResourceEstimate(t_count=-1)
        with pytest.raises(ValidationError):
            ResourceEstimate(success_prob=0.0)
        with pytest.raises(ValidationError):
            ResourceEstimate(t_depth=math.inf)

    def test_to_dict(self):
        d = ResourceEstimate.deterministic(1, 1, clean_ancilla=2).to_dict()
        assert d["clean_ancilla"] == 2
        assert d["success_prob"] == 1.0


class TestCosting:
    """逐门代价与朴素分层"""

    def test_rotation_cost(self):
        assert rotation_t_cost(1e-9) == pytest.approx(1.15 * math.log2(1e9) + 9.2)
        with pytest.raises(ValidationError):
            rotation_t_cost(0.0)

    def test_cost_table(self):
        assert cost_of_gate("H") == (0.0, 0.0)
        assert cost_of_gate("T") == (1.0, 1.0)
        assert cost_of_gate("CH") == (2.0, 2.0)
        assert cost_of_gate("CCX") == (4.0, 2.0)
        assert cost_of_gate("X", controls=1) == (4.0, 2.0)
        with pytest.raises(ValidationError):
            cost_of_gate("Rz")
        with pytest.raises(ValidationError):
            cost_of_gate("H", 1e-3)

    def test_naive_parallel_layers(self):
        b = CircuitBuilder([Register("data", 0, 2)])
        b.add(Gate("T", (0,))).add(Gate("T", (1,))).add(Gate("T", (0,)))
        ledger = naive_ledger(b.build())
        assert ledger.t_count == 3.0
        assert ledger.t_depth == 2.0

    def test_naive_toffoli_pairs(self):
        regs = [Register("data", 0, 3)]
        lone = naive_ledger(CircuitBuilder(regs).add(Gate("CCX", (0, 1, 2))).build())
        assert (lone.t_count, lone.t_depth) == (7.0, 3.0)
        pair = CircuitBuilder(regs).add(Gate("CCX", (0, 1, 2))).add(Gate("CCX", (0, 1, 2))).build()
        ledger = naive_ledger(pair)
        assert (ledger.t_count, ledger.t_depth) == (4.0, 2.0)

    def test_exact_rotation_is_free(self):
        regs = [Register("data", 0, 2)]
        ledger = naive_ledger(CircuitBuilder(regs).rz(0, 0.3).add(Gate("CRz", (0, 1), 0.3)).build())
        assert (ledger.t_count, ledger.t_depth) == (0.0, 0.0)
        synthesized = naive_ledger(CircuitBuilder(regs).rz(0, 0.3, 1e-9).build())
        assert synthesized.t_count == pytest.approx(rotation_t_cost(1e-9))


class TestSerialization:
    """电路文档"""

    def _circuit(self) -> Circuit:
        b = CircuitBuilder([Register("anc", 0, 1, "clean"), Register("data", 1, 2)])
        b.h(0).cx(0, 1).rz(2, 0.25, 1e-6)
        with b.controlled_on([0]):
            b.incrementer([1, 2])
        return b.build(ResourceEstimate.deterministic(3, 2, clean_ancilla=1))

    def test_roundtrip_preserves_circuit(self):
        c = self._circuit()
        assert deserialize(serialize(c)) == c

    def test_deterministic_bytes(self):
        assert serialize(self._circuit()) == serialize(self._circuit())

    def test_document_fields(self):
        doc = json.loads(serialize(self._circuit()))
        assert list(doc) == ["width", "registers", "gates", "ledger"]
        assert doc["registers"]["anc"] == {"start": 0, "len": 1, "kind": "clean"}
        assert doc["gates"][2]["delta"] == 1e-6

    def test_file_roundtrip(self, tmp_path):
        path = tmp_path / "circuit.json"
        write_circuit(self._circuit(), path)
        assert read_circuit(path) == self._circuit()

    def test_syntax_error_position(self):
        with pytest.raises(CircuitParseError) as info:
            deserialize('{"width": 1,')
        assert info.value.position is not None

    def test_unknown_kind_token(self):
        text = serialize(self._circuit()).replace('"kind": "H"', '"kind": "Q"')
        with pytest.raises(CircuitParseError) as info:
            deserialize(text)
        assert info.value.token == "Q"
        assert info.value.position == 0

    def test_missing_field(self):
        with pytest.raises(CircuitParseError):
            deserialize('{"width": 1, "registers": {}, "gates": []}')

    def test_random_circuit_roundtrip(self):
        rng = np.random.default_rng(17)
        kinds = [k for k in KNOWN_KINDS if k != "Measure"]
        b = CircuitBuilder([Register("anc", 0, 2, "clean"), Register("data", 2, 3)])
        for _ in range(100):
            kind = kinds[rng.integers(len(kinds))]
            qubits = tuple(int(q) for q in rng.choice(5, size=FIXED_ARITY.get(kind, 3), replace=False))
            angle = delta = None
            if kind in ROTATION_KINDS:
                angle = float(rng.uniform(-math.pi, math.pi))
                delta = 1e-6 if rng.random() < 0.5 else None
            spare = [q for q in range(5) if q not in qubits]
            controls = (spare[0],) if spare and rng.random() < 0.3 else ()
            b.add(Gate(kind, qubits, angle, delta, controls))
        circuit = b.build(ResourceEstimate.deterministic(12.5, 3.0, clean_ancilla=2))
        assert len(circuit) == 100
        assert deserialize(serialize(circuit)) == circuit
