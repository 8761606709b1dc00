"""
电路文档的 JSON 读写

文档只有一个顶层对象: width, registers, gates, ledger。字段顺序固定，UTF-8，无注释。
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from ..exceptions import CircuitParseError, ValidationError
from .circuit import Circuit, Register
from .gates import KNOWN_KINDS, Gate
from .ledger import LEDGER_FIELDS, ResourceEstimate


def circuit_to_document(circuit: Circuit) -> Dict[str, Any]:
    """把电路转换成有固定字段顺序的字典"""
    gates: List[Dict[str, Any]] = []
    for gate in circuit.gates:
        entry: Dict[str, Any] = {"kind": gate.kind, "qubits": list(gate.qubits)}
        if gate.angle is not None:
            entry["angle"] = gate.angle
        if gate.delta is not None:
            entry["delta"] = gate.delta
        if gate.controls:
            entry["controls"] = list(gate.controls)
        gates.append(entry)
    return {
        "width": circuit.width,
        "registers": {
            r.name: {"start": r.start, "len": r.length, "kind": r.kind} for r in circuit.registers
        },
        "gates": gates,
        "ledger": {name: getattr(circuit.ledger, name) for name in LEDGER_FIELDS},
    }


def serialize(circuit: Circuit) -> str:
    """
    序列化电路

    Args:
        circuit (Circuit): 电路

    Returns:
        str: JSON 文本，同一电路的输出逐字节相同

    Examples:
        >>> text = serialize(Circuit.empty(1))
        >>> '"gates": []' in text
        True
    """
    return json.dumps(circuit_to_document(circuit), ensure_ascii=False, indent=2)


def _gate_from_entry(entry: Any, index: int) -> Gate:
    if not isinstance(entry, dict):
        raise CircuitParseError("门条目必须是对象", position=index)
    kind = entry.get("kind")
    if kind not in KNOWN_KINDS:
        raise CircuitParseError("未知的门类型", position=index, token=str(kind))
    try:
        return Gate(
            kind,
            tuple(entry["qubits"]),
            angle=entry.get("angle"),
            delta=entry.get("delta"),
            controls=tuple(entry.get("controls", ())),
        )
    except KeyError as exc:
        raise CircuitParseError("门条目缺少字段", position=index, token=str(exc.args[0])) from exc
    except (TypeError, ValidationError) as exc:
        raise CircuitParseError(f"门条目不合法: {exc}", position=index, token=kind) from exc


def deserialize(text: str) -> Circuit:
    """
    反序列化电路文档

    Args:
        text (str): JSON 文本

    Returns:
        Circuit: 电路

    Raises:
        CircuitParseError: JSON 语法错误（附字符位置）或内容不合法（附门序号与记号）
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitParseError(f"JSON 语法错误: {exc.msg}", position=exc.pos) from exc
    if not isinstance(doc, dict):
        raise CircuitParseError("顶层必须是对象", position=0)
    for key in ("width", "registers", "gates", "ledger"):
        if key not in doc:
            raise CircuitParseError("缺少顶层字段", token=key)
    try:
        registers = [
            Register(name, spec["start"], spec["len"], spec.get("kind", "data"))
            for name, spec in doc["registers"].items()
        ]
        ledger = ResourceEstimate(**{name: doc["ledger"][name] for name in LEDGER_FIELDS})
    except (KeyError, TypeError, AttributeError, ValidationError) as exc:
        raise CircuitParseError(f"寄存器或账本不合法: {exc}") from exc
    gates = [_gate_from_entry(entry, i) for i, entry in enumerate(doc["gates"])]
    try:
        return Circuit(int(doc["width"]), tuple(registers), tuple(gates), ledger)
    except ValidationError as exc:
        raise CircuitParseError(f"电路不合法: {exc}") from exc


def write_circuit(circuit: Circuit, file_path: Union[str, Path]) -> None:
    """
    写入电路文档

    Examples:
        >>> write_circuit(circuit, 'linear.json')
    """
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(serialize(circuit))


def read_circuit(file_path: Union[str, Path]) -> Circuit:
    """
    读取电路文档

    Raises:
        FileNotFoundError: 文件不存在
        CircuitParseError: 文档格式错误
    """
    with open(file_path, "r", encoding="utf-8") as f:
        return deserialize(f.read())
