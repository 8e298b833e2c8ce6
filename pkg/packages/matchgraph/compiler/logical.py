# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 Valory AG
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""This module contains logical circuits and their reference unitaries."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Sequence, Tuple, Union

import numpy as np

from packages.matchgraph.errors import (
    DuplicateTarget,
    NonPrimitiveGate,
    ParseError,
    TargetOutOfRange,
)
from packages.matchgraph.matchgates import (
    I2,
    PAULI_X,
    PAULI_Z,
    check_unitary,
    matrix_from_json,
    matrix_to_json,
)
from packages.matchgraph.oracle import apply_matrix, ensure_dense_size


@dataclass(frozen=True, eq=False)
class OneQubit:
    """Represent a single-qubit logical unitary."""

    u: np.ndarray
    target: int

    @property
    def targets(self) -> Tuple[int, ...]:
        """Get the logical targets."""
        return (self.target,)

    def matrix(self) -> np.ndarray:
        """Get the gate matrix."""
        return np.asarray(self.u, dtype=complex)


@dataclass(frozen=True)
class CZ:
    """Represent a logical controlled-Z."""

    i: int
    j: int

    @property
    def targets(self) -> Tuple[int, ...]:
        """Get the logical targets."""
        return self.i, self.j

    def matrix(self) -> np.ndarray:
        """Get the gate matrix."""
        return np.diag([1, 1, 1, -1]).astype(complex)


@dataclass(frozen=True)
class XRot:
    """Represent exp(i a X) on one logical qubit."""

    a: float
    target: int

    @property
    def targets(self) -> Tuple[int, ...]:
        """Get the logical targets."""
        return (self.target,)

    def matrix(self) -> np.ndarray:
        """Get the gate matrix."""
        return np.cos(self.a) * I2 + 1j * np.sin(self.a) * PAULI_X


@dataclass(frozen=True)
class XZRot:
    """Represent exp(i a X_i Z_j)."""

    a: float
    i: int
    j: int

    @property
    def targets(self) -> Tuple[int, ...]:
        """Get the logical targets."""
        return self.i, self.j

    def matrix(self) -> np.ndarray:
        """Get the gate matrix."""
        generator = np.kron(PAULI_X, PAULI_Z)
        return np.cos(self.a) * np.eye(4) + 1j * np.sin(self.a) * generator


LogicalGate = Union[OneQubit, CZ, XRot, XZRot]

XY_PRIMITIVES = (XRot, XZRot)


@dataclass(frozen=True)
class LogicalCircuit:
    """Represent an ordered list of logical gates on m qubits."""

    m: int
    gates: Tuple[LogicalGate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        """Check the gate targets."""
        if self.m < 0:
            raise ParseError(f"logical qubit count must be non-negative, got {self.m}")
        for gate in self.gates:
            for target in gate.targets:
                if not 0 <= target < self.m:
                    raise TargetOutOfRange(
                        f"logical target {target} outside 0..{self.m - 1}"
                    )
            if len(set(gate.targets)) != len(gate.targets):
                raise DuplicateTarget(f"gate targets {gate.targets} repeat a qubit")
            if isinstance(gate, OneQubit):
                if gate.u.shape != (2, 2):
                    raise ParseError(f"expected a 2x2 unitary, got {gate.u.shape}")
                check_unitary(gate.u)

    def ensure_xy_primitive(self) -> None:
        """Raise NonPrimitiveGate unless every gate is an X or XZ rotation."""
        for index, gate in enumerate(self.gates):
            if not isinstance(gate, XY_PRIMITIVES):
                raise NonPrimitiveGate(
                    f"gate {index} ({type(gate).__name__}) is not an XRot or XZRot"
                )

    @classmethod
    def from_dict(cls, content: Any) -> "LogicalCircuit":
        """Build from the decoded JSON format."""
        if not isinstance(content, dict):
            raise ParseError("a logical circuit must be a JSON object")
        try:
            m = int(content["m"])
            entries = list(content.get("gates", []))
            gates = tuple(_gate_from_json(entry) for entry in entries)
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed logical circuit: {e}") from e
        return cls(m, gates)

    @classmethod
    def parse(cls, content: str) -> "LogicalCircuit":
        """Parse the JSON format."""
        try:
            return cls.from_dict(json.loads(content))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from e

    @classmethod
    def load(cls, file: Path) -> "LogicalCircuit":
        """Load from file."""
        return cls.parse(file.read_text(encoding="utf-8"))

    def to_dict(self) -> Dict[str, Any]:
        """Encode to the JSON format."""
        return {"m": self.m, "gates": [_gate_to_json(gate) for gate in self.gates]}

    def dump(self, file: Path) -> None:
        """Dump to file."""
        file.write_text(json.dumps(self.to_dict(), indent=2), encoding="utf-8")


def _gate_from_json(entry: Dict[str, Any]) -> LogicalGate:
    """Parse one logical gate."""
    op = entry["op"]
    if op == "u":
        return OneQubit(matrix_from_json(entry["U"]), int(entry["target"]))
    if op == "cz":
        i, j = entry["targets"]
        return CZ(int(i), int(j))
    if op == "xrot":
        return XRot(float(entry["a"]), int(entry["target"]))
    if op == "xzrot":
        i, j = entry["targets"]
        return XZRot(float(entry["a"]), int(i), int(j))
    raise ParseError(f"unknown logical op {op!r}")


def _gate_to_json(gate: LogicalGate) -> Dict[str, Any]:
    """Encode one logical gate."""
    if isinstance(gate, OneQubit):
        return {"op": "u", "target": gate.target, "U": matrix_to_json(gate.u)}
    if isinstance(gate, CZ):
        return {"op": "cz", "targets": [gate.i, gate.j]}
    if isinstance(gate, XRot):
        return {"op": "xrot", "target": gate.target, "a": gate.a}
    return {"op": "xzrot", "targets": [gate.i, gate.j], "a": gate.a}


def logical_unitary(c: LogicalCircuit) -> np.ndarray:
    """Get the 2**m unitary of a logical circuit, logical qubit 0 on top."""
    ensure_dense_size(c.m)
    total = np.eye(2**c.m, dtype=complex)
    for gate in c.gates:
        total = apply_matrix(total, c.m, gate.matrix(), gate.targets)
    return total


def frame_operator(frames: Sequence[int]) -> np.ndarray:
    """Get the tensor product of P**s over logical qubits, P = diag(1, i)."""
    diagonal = np.ones(1, dtype=complex)
    for power in frames:
        diagonal = np.kron(diagonal, np.array([1, 1j**power]))
    return np.diag(diagonal)


def framed_unitary(c: LogicalCircuit, frames: Sequence[int]) -> np.ndarray:
    """Get (P**s) U (P**-s), the action compiled circuits realise."""
    frame = frame_operator(frames)
    return frame @ logical_unitary(c) @ frame.conj().T
