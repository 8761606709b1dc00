"""
电路中间表示: 寄存器、电路与构造器

电路构造完成后不可变；构造器负责收集门并标注账本。
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import RegisterMismatchError, ValidationError
from .gates import Gate, mcx, rotation
from .ledger import ResourceEstimate

logger = logging.getLogger(__name__)

REGISTER_KINDS = ("data", "clean", "persistent")


@dataclass(frozen=True)
class Register:
    """命名寄存器，占据 [start, start + length)"""

    name: str
    start: int
    length: int
    kind: str = "data"

    def __post_init__(self) -> None:
        if self.kind not in REGISTER_KINDS:
            raise ValidationError(f"寄存器类型必须是 {REGISTER_KINDS} 之一: {self.kind}")
        if self.start < 0 or self.length < 1:
            raise ValidationError(f"寄存器 {self.name} 范围不合法: start={self.start}, len={self.length}")

    @property
    def qubits(self) -> Tuple[int, ...]:
        return tuple(range(self.start, self.start + self.length))


def _check_partition(width: int, registers: Sequence[Register]) -> None:
    covered: List[int] = []
    names = set()
    for reg in registers:
        if reg.name in names:
            raise ValidationError(f"寄存器重名: {reg.name}")
        names.add(reg.name)
        covered.extend(reg.qubits)
    if sorted(covered) != list(range(width)):
        raise ValidationError(f"寄存器必须划分 [0, {width}), 实际覆盖 {sorted(covered)}")


@dataclass(frozen=True)
class Circuit:
    """
    门序列电路

    Attributes:
        width (int): 量子比特数
        registers (Tuple[Register, ...]): 按起点排序、互不相交的寄存器
        gates (Tuple[Gate, ...]): 门序列
        ledger (ResourceEstimate): 构造器标注的账本
    """

    width: int
    registers: Tuple[Register, ...]
    gates: Tuple[Gate, ...] = ()
    ledger: ResourceEstimate = field(default_factory=ResourceEstimate)

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValidationError(f"电路宽度必须为正: {self.width}")
        regs = tuple(sorted(self.registers, key=lambda r: r.start))
        object.__setattr__(self, "registers", regs)
        object.__setattr__(self, "gates", tuple(self.gates))
        _check_partition(self.width, regs)
        for gate in self.gates:
            _check_gate(gate, self.width)

    @classmethod
    def empty(cls, width: int, registers: Optional[Sequence[Register]] = None) -> "Circuit":
        """返回空电路；不给寄存器时整体作为一个 data 寄存器"""
        regs = tuple(registers) if registers else (Register("data", 0, width),)
        return cls(width, regs)

    def register(self, name: str) -> Register:
        for reg in self.registers:
            if reg.name == name:
                return reg
        raise ValidationError(f"没有名为 {name} 的寄存器")

    def qubits(self, name: str) -> Tuple[int, ...]:
        return self.register(name).qubits

    def layout(self) -> Tuple[Tuple[str, int, int, str], ...]:
        return tuple((r.name, r.start, r.length, r.kind) for r in self.registers)

    def __len__(self) -> int:
        return len(self.gates)

    def inverse(self) -> "Circuit":
        """返回逆电路（账本不变）"""
        return replace(self, gates=tuple(g.inverse() for g in reversed(self.gates)))

    def with_ledger(self, ledger: ResourceEstimate) -> "Circuit":
        return replace(self, ledger=ledger)


def _check_gate(gate: Gate, width: int) -> None:
    bad = [q for q in gate.all_qubits if q >= width]
    if bad:
        raise ValidationError(f"{gate.kind} 的量子比特 {bad} 超出电路宽度 {width}")


def append(circuit: Circuit, gate: Gate) -> Circuit:
    """
    在电路末尾追加一个门（账本不变）

    Args:
        circuit (Circuit): 原电路
        gate (Gate): 要追加的门

    Returns:
        Circuit: 新电路

    Raises:
        ValidationError: 量子比特索引越界

    Examples:
        >>> c = append(Circuit.empty(1), Gate("H", (0,)))
        >>> len(c)
        1
    """
    _check_gate(gate, circuit.width)
    return replace(circuit, gates=circuit.gates + (gate,))


def compose(a: Circuit, b: Circuit) -> Circuit:
    """
    顺序拼接两个电路: 先 a 后 b

    账本逐字段相加，成功概率相乘。

    Raises:
        RegisterMismatchError: 宽度或寄存器布局不一致
    """
    if a.width != b.width or a.layout() != b.layout():
        raise RegisterMismatchError(
            f"寄存器布局不一致: {a.layout()} vs {b.layout()}"
        )
    return Circuit(a.width, a.registers, a.gates + b.gates, a.ledger + b.ledger)


class CircuitBuilder:
    """
    可变的电路构造器，方法返回自身以便链式调用

    Examples:
        >>> b = CircuitBuilder([Register("data", 0, 2)])
        >>> circuit = b.h(0).cx(0, 1).build()
    """

    def __init__(self, registers: Iterable[Register]):
        self.registers: Tuple[Register, ...] = tuple(sorted(registers, key=lambda r: r.start))
        self.width = sum(r.length for r in self.registers)
        _check_partition(self.width, self.registers)
        self.gates: List[Gate] = []
        self._controls: Tuple[int, ...] = ()

    def qubits(self, name: str) -> Tuple[int, ...]:
        for reg in self.registers:
            if reg.name == name:
                return reg.qubits
        raise ValidationError(f"没有名为 {name} 的寄存器")

    def add(self, gate: Gate) -> "CircuitBuilder":
        if self._controls:
            gate = gate.with_controls(self._controls)
        _check_gate(gate, self.width)
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> "CircuitBuilder":
        for gate in gates:
            self.add(gate)
        return self

    def h(self, q: int) -> "CircuitBuilder":
        return self.add(Gate("H", (q,)))

    def x(self, q: int) -> "CircuitBuilder":
        return self.add(Gate("X", (q,)))

    def z(self, q: int) -> "CircuitBuilder":
        return self.add(Gate("Z", (q,)))

    def s(self, q: int) -> "CircuitBuilder":
        return self.add(Gate("S", (q,)))

    def sdg(self, q: int) -> "CircuitBuilder":
        return self.add(Gate("Sdg", (q,)))

    def cx(self, c: int, t: int) -> "CircuitBuilder":
        return self.add(Gate("CX", (c, t)))

    def cz(self, c: int, t: int) -> "CircuitBuilder":
        return self.add(Gate("CZ", (c, t)))

    def ch(self, c: int, t: int) -> "CircuitBuilder":
        return self.add(Gate("CH", (c, t)))

    def swap(self, a: int, b: int) -> "CircuitBuilder":
        return self.add(Gate("SWAP", (a, b)))

    def cswap(self, c: int, a: int, b: int) -> "CircuitBuilder":
        return self.add(Gate("CSWAP", (c, a, b)))

    def mcx(self, controls: Sequence[int], target: int) -> "CircuitBuilder":
        return self.add(mcx(controls, target))

    def mcz(self, controls: Sequence[int], target: int) -> "CircuitBuilder":
        """多控 Z，用目标位上的 H 共轭多控 X 实现"""
        return self.h(target).mcx(controls, target).h(target)

    def rz(self, q: int, angle: float, delta: Optional[float] = None) -> "CircuitBuilder":
        return self.add(rotation("Rz", (q,), angle, delta))

    def ry(self, q: int, angle: float, delta: Optional[float] = None) -> "CircuitBuilder":
        return self.add(rotation("Ry", (q,), angle, delta))

    def crz(self, c: int, t: int, angle: float, delta: Optional[float] = None) -> "CircuitBuilder":
        return self.add(rotation("CRz", (c, t), angle, delta))

    def cry(self, c: int, t: int, angle: float, delta: Optional[float] = None) -> "CircuitBuilder":
        return self.add(rotation("CRy", (c, t), angle, delta))

    def incrementer(self, qubits: Sequence[int]) -> "CircuitBuilder":
        """对寄存器（高位在前）做 +1 mod 2^w"""
        return self.add(Gate("Incrementer", tuple(qubits)))

    def controlled_on(self, controls: Sequence[int], values: Optional[Sequence[int]] = None):
        """
        上下文管理器: 块内追加的门都加上 controls 控制

        values 给出期望的控制取值，取 0 的位用 X 共轭。
        """
        return _ControlScope(self, tuple(controls), tuple(values) if values is not None else None)

    def build(self, ledger: Optional[ResourceEstimate] = None) -> Circuit:
        circuit = Circuit(self.width, self.registers, tuple(self.gates), ledger or ResourceEstimate())
        logger.debug("built circuit width=%d gates=%d ledger=%s", circuit.width, len(circuit), circuit.ledger)
        return circuit


class _ControlScope:
    def __init__(self, builder: CircuitBuilder, controls: Tuple[int, ...], values: Optional[Tuple[int, ...]]):
        self.builder = builder
        self.controls = controls
        self.values = values if values is not None else (1,) * len(controls)
        if len(self.values) != len(self.controls):
            raise ValidationError("控制位与控制取值数量不一致")
        self.flipped = tuple(c for c, v in zip(self.controls, self.values) if not v)
        self.saved: Tuple[int, ...] = ()

    def __enter__(self) -> CircuitBuilder:
        for q in self.flipped:
            self.builder.x(q)
        self.saved = self.builder._controls
        self.builder._controls = self.controls + self.saved
        return self.builder

    def __exit__(self, *exc) -> None:
        self.builder._controls = self.saved
        for q in self.flipped:
            self.builder.x(q)
