"""
电路核心: 门集合、寄存器、资源账本与序列化

所有构造器共享的中间表示。
"""

from .gates import Gate, KNOWN_KINDS, ROTATION_KINDS, mcx, rotation
from .ledger import ResourceEstimate
from .circuit import Circuit, CircuitBuilder, Register, append, compose
from .costing import cost_of_gate, naive_ledger, rotation_t_cost
from .serialization import deserialize, read_circuit, serialize, write_circuit

__all__ = [
    "Gate",
    "KNOWN_KINDS",
    "ROTATION_KINDS",
    "mcx",
    "rotation",
    "ResourceEstimate",
    "Circuit",
    "CircuitBuilder",
    "Register",
    "append",
    "compose",
    "cost_of_gate",
    "naive_ledger",
    "rotation_t_cost",
    "serialize",
    "deserialize",
    "read_circuit",
    "write_circuit",
]
