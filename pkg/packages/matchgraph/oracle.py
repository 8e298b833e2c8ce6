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

"""This module contains the dense statevector oracle, qubit 0 being the top bit."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np
from typing_extensions import Protocol

from packages.matchgraph.errors import (
    DuplicateTarget,
    IndexOutOfRange,
    LeakageExceeded,
    ParseError,
    SizeMismatch,
    TargetOutOfRange,
    TooManyQubits,
)
from packages.matchgraph.matchgates import (
    PhysicalCircuit,
    check_unitary,
    complex_from_json,
)
from packages.matchgraph.models import get_params


_logger = logging.getLogger(__name__)

Qubit = Tuple[complex, complex]


class EncodedLayout(Protocol):
    """Anything that maps logical basis states onto physical basis states."""

    @property
    def n_physical(self) -> int:
        """Get the number of physical qubits."""

    @property
    def n_logical(self) -> int:
        """Get the number of logical qubits."""

    def encoded_indices(self) -> np.ndarray:
        """Get the physical basis index of each logical basis state."""


def ensure_dense_size(n: int) -> None:
    """Raise TooManyQubits when n exceeds the dense cap."""
    cap = get_params().dense_max_qubits
    if n > cap:
        raise TooManyQubits(f"{n} qubits exceed the dense oracle cap of {cap}")


@dataclass(frozen=True, eq=False)
class StateVector:
    """Represent a pure state of n qubits."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        """Check the shape and the norm."""
        if self.amplitudes.shape != (2**self.n,):
            raise SizeMismatch(
                f"{self.n} qubits need {2 ** self.n} amplitudes, "
                f"got shape {self.amplitudes.shape}"
            )
        drift = abs(np.linalg.norm(self.amplitudes) - 1)
        if drift > get_params().roundtrip_tolerance:
            raise SizeMismatch(f"state norm deviates from 1 by {drift:.3e}")

    @classmethod
    def basis(cls, bits: str) -> "StateVector":
        """Get the computational basis state written as a bit string."""
        ensure_dense_size(len(bits))
        amplitudes = np.zeros(2 ** len(bits), dtype=complex)
        amplitudes[int(bits, 2)] = 1
        return cls(len(bits), amplitudes)

    def probabilities(self) -> np.ndarray:
        """Get the basis-state probabilities."""
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class ProductState:
    """Represent a product of single-qubit states (alpha_i, beta_i)."""

    qubits: Tuple[Qubit, ...]

    def __post_init__(self) -> None:
        """Check that every qubit is normalised."""
        tolerance = get_params().roundtrip_tolerance
        for index, (alpha, beta) in enumerate(self.qubits):
            if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1) > tolerance:
                raise ParseError(f"qubit {index} is not normalised")

    @property
    def n(self) -> int:
        """Get the number of qubits."""
        return len(self.qubits)

    @classmethod
    def basis(cls, bits: str) -> "ProductState":
        """Get the computational basis state written as a bit string."""
        return cls(tuple((1, 0) if bit == "0" else (0, 1) for bit in bits))

    @classmethod
    def parse(cls, content: str) -> "ProductState":
        """Parse a bit string such as 0101 or a JSON list of [[re, im], [re, im]]."""
        content = content.strip()
        if content and set(content) <= {"0", "1"}:
            return cls.basis(content)
        try:
            decoded = json.loads(content)
        except json.JSONDecodeError as e:
            raise ParseError(f"expected a bit string or JSON qubit list: {e}") from e
        if isinstance(decoded, str) and decoded and set(decoded) <= {"0", "1"}:
            return cls.basis(decoded)
        if not isinstance(decoded, list) or not decoded:
            raise ParseError("a product state must be a non-empty list of qubits")
        qubits = []
        for entry in decoded:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ParseError(f"expected [alpha, beta], got {entry!r}")
            qubits.append((complex_from_json(entry[0]), complex_from_json(entry[1])))
        return cls(tuple(qubits))

    @classmethod
    def load(cls, file: Path) -> "ProductState":
        """Load from file."""
        return cls.parse(file.read_text(encoding="utf-8"))

    def to_vector(self) -> StateVector:
        """Expand into a statevector."""
        ensure_dense_size(self.n)
        amplitudes = np.ones(1, dtype=complex)
        for alpha, beta in self.qubits:
            amplitudes = np.kron(amplitudes, np.array([alpha, beta], dtype=complex))
        return StateVector(self.n, amplitudes)

    def bloch(self) -> np.ndarray:
        """Get the (x, y, z) Bloch components of every qubit as an n x 3 array."""
        pairs = np.array(self.qubits, dtype=complex).reshape(self.n, 2)
        alpha, beta = pairs[:, 0], pairs[:, 1]
        overlap = np.conj(alpha) * beta
        return np.stack(
            [2 * overlap.real, 2 * overlap.imag, abs(alpha) ** 2 - abs(beta) ** 2],
            axis=1,
        )


def _check_targets(n: int, targets: Sequence[int], size: int) -> None:
    """Validate gate targets against the register and the gate size."""
    for target in targets:
        if not 0 <= target < n:
            raise TargetOutOfRange(f"target {target} outside 0..{n - 1}")
    if len(set(targets)) != len(targets):
        raise DuplicateTarget(f"targets {tuple(targets)} repeat a qubit")
    if size != 2 ** len(targets):
        raise SizeMismatch(f"a {size}x{size} gate cannot act on {len(targets)} qubits")


def apply_matrix(
    amplitudes: np.ndarray, n: int, matrix: np.ndarray, targets: Sequence[int]
) -> np.ndarray:
    """
    Apply a k-qubit matrix to the target factors of one or several states.

    :param amplitudes: array of shape (2**n,) or (2**n, batch).
    :param n: the number of qubits.
    :param matrix: a 2**k x 2**k matrix, targets[0] being its first tensor factor.
    :param targets: the k distinct target qubits.
    :return: the updated amplitudes, same shape as the input.
    """
    k = len(targets)
    batch = amplitudes.shape[1:]
    tensor = amplitudes.reshape((2,) * n + batch)
    gate = matrix.reshape((2,) * (2 * k))
    updated = np.tensordot(gate, tensor, axes=(list(range(k, 2 * k)), list(targets)))
    updated = np.moveaxis(updated, list(range(k)), list(targets))
    return updated.reshape(amplitudes.shape)


def apply_gate(
    s: StateVector, matrix: np.ndarray, targets: Sequence[int]
) -> StateVector:
    """Apply a one or two qubit unitary to the target qubits."""
    matrix = np.asarray(matrix, dtype=complex)
    check_unitary(matrix)
    _check_targets(s.n, targets, matrix.shape[0])
    return StateVector(s.n, apply_matrix(s.amplitudes, s.n, matrix, targets))


def evolve(c: PhysicalCircuit, amplitudes: np.ndarray) -> np.ndarray:
    """Run a circuit on one state or a batch of states (columns)."""
    ensure_dense_size(c.n)
    for gate in c.gates:
        amplitudes = apply_matrix(amplitudes, c.n, gate.matrix, gate.edge)
    return amplitudes


def run_circuit(
    c: PhysicalCircuit, initial: Union[ProductState, StateVector]
) -> StateVector:
    """Apply the gates of a circuit in order to an input state."""
    ensure_dense_size(c.n)
    state = initial.to_vector() if isinstance(initial, ProductState) else initial
    if state.n != c.n:
        raise SizeMismatch(f"circuit has {c.n} qubits but the state has {state.n}")
    _logger.debug(f"running {len(c)} gates on {c.n} qubits")
    return StateVector(c.n, evolve(c, state.amplitudes))


def _z_signs(n: int, k: int) -> np.ndarray:
    """Get the diagonal of Z_k."""
    bits = (np.arange(2**n) >> (n - 1 - k)) & 1
    return 1 - 2 * bits


def expectation_z(s: StateVector, k: int) -> float:
    """Get <Z_k>."""
    if not 0 <= k < s.n:
        raise IndexOutOfRange(f"qubit {k} outside 0..{s.n - 1}")
    return float(np.dot(s.probabilities(), _z_signs(s.n, k)))


def expectation_parity(s: StateVector) -> float:
    """Get the expectation of the product of Z over all qubits."""
    popcount = np.array([bin(x).count("1") for x in range(2**s.n)])
    return float(np.dot(s.probabilities(), 1 - 2 * (popcount % 2)))


def operator_matrix(matrix: np.ndarray, targets: Sequence[int], n: int) -> np.ndarray:
    """Embed a gate acting on the targets into the full 2**n space."""
    ensure_dense_size(n)
    matrix = np.asarray(matrix, dtype=complex)
    _check_targets(n, targets, matrix.shape[0])
    return apply_matrix(np.eye(2**n, dtype=complex), n, matrix, targets)


def circuit_unitary(c: PhysicalCircuit) -> np.ndarray:
    """Get the full unitary of a circuit."""
    ensure_dense_size(c.n)
    return evolve(c, np.eye(2**c.n, dtype=complex))


def phase_insensitive_fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """Get |tr(U^dagger V)| / dim, equal to one iff U and V agree up to phase."""
    if u.shape != v.shape:
        raise SizeMismatch(f"cannot compare shapes {u.shape} and {v.shape}")
    return float(abs(np.trace(u.conj().T @ v)) / u.shape[0])


def encoded_action(
    c: PhysicalCircuit, layout: EncodedLayout
) -> Tuple[np.ndarray, List[float]]:
    """
    Extract the logical unitary a circuit implements on a code space.

    :param c: a circuit on the layout's physical qubits.
    :param layout: the map from logical to physical basis states.
    :return: the 2**m logical matrix and the leakage of each logical basis input.
    """
    if c.n != layout.n_physical:
        raise SizeMismatch(
            f"circuit has {c.n} qubits but the layout has {layout.n_physical}"
        )
    indices = layout.encoded_indices()
    inputs = np.zeros((2**c.n, len(indices)), dtype=complex)
    inputs[indices, np.arange(len(indices))] = 1
    outputs = evolve(c, inputs)
    logical = outputs[indices, :]
    leakage = [float(x) for x in 1 - np.sum(np.abs(logical) ** 2, axis=0)]
    worst = max(leakage)
    if worst > get_params().leakage_tolerance:
        raise LeakageExceeded(f"circuit leaks {worst:.3e} out of the code space")
    return logical, leakage
