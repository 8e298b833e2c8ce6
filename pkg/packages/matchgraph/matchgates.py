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

"""This module contains matchgates, named gates and their generating Hamiltonians."""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from scipy.linalg import expm, schur
from scipy.stats import unitary_group

from packages.matchgraph.errors import (
    DeterminantMismatch,
    GateError,
    GraphMismatch,
    MissingParameter,
    NotUnitary,
    ParseError,
    UnknownGate,
)
from packages.matchgraph.graphs import Graph, cycle_graph, path_graph
from packages.matchgraph.models import get_params


_logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Parameter = Union[float, np.ndarray, None]

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

EVEN = (0, 3)
ODD = (1, 2)

XY_HAMILTONIAN = np.kron(PAULI_X, PAULI_X) + np.kron(PAULI_Y, PAULI_Y)

GENERATORS = {
    "zu": np.kron(PAULI_Z, I2),
    "zv": np.kron(I2, PAULI_Z),
    "xx": np.kron(PAULI_X, PAULI_X),
    "yy": np.kron(PAULI_Y, PAULI_Y),
    "xy": np.kron(PAULI_X, PAULI_Y),
    "yx": np.kron(PAULI_Y, PAULI_X),
    "identity": np.eye(4, dtype=complex),
}

NON_MATCHGATES = frozenset({"swap", "cz", "p_phase"})
PARAMETRISED = frozenset({"xy", "g_aa"})
INVERSE_NAMES = {
    "fswap": "fswap",
    "iswap": "iswap_dagger",
    "iswap_dagger": "iswap",
    "xy": "xy",
}
NAMED_GATES = frozenset(
    {"fswap", "iswap", "iswap_dagger", "xy", "g_aa"} | NON_MATCHGATES
)


def check_unitary(matrix: np.ndarray, tolerance: Optional[float] = None) -> None:
    """Raise NotUnitary unless the matrix is square and unitary."""
    tolerance = get_params().unitarity_tolerance if tolerance is None else tolerance
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NotUnitary(f"expected a square matrix, got shape {matrix.shape}")
    deviation = np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0])))
    if deviation > tolerance:
        raise NotUnitary(f"U^dagger U deviates from identity by {deviation:.3e}")


def assemble(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Place A on the even-parity block and B on the odd-parity block."""
    matrix = np.zeros((4, 4), dtype=complex)
    matrix[np.ix_(EVEN, EVEN)] = a
    matrix[np.ix_(ODD, ODD)] = b
    return matrix


@dataclass(frozen=True, eq=False)
class Matchgate:
    """Represent a validated matchgate G(A, B) on an ordered edge."""

    a: np.ndarray
    b: np.ndarray
    edge: Edge
    name: Optional[str] = None
    param: Optional[float] = None

    @property
    def matrix(self) -> np.ndarray:
        """Get the 4x4 matrix with edge[0] as the first tensor factor."""
        return assemble(self.a, self.b)

    def inverse(self) -> "Matchgate":
        """Get the inverse gate on the same edge, keeping named gates named."""
        name, param = INVERSE_NAMES.get(self.name or ""), self.param
        if name == "xy" and param is not None:
            param = -param
        return Matchgate(self.a.conj().T, self.b.conj().T, self.edge, name, param)

    def on(self, edge: Edge) -> "Matchgate":
        """Get the same gate on another ordered edge."""
        return Matchgate(self.a, self.b, edge, self.name, self.param)


def make_matchgate(
    a: np.ndarray,
    b: np.ndarray,
    edge: Edge = (0, 1),
    name: Optional[str] = None,
    param: Optional[float] = None,
) -> Matchgate:
    """
    Validate two single-qubit unitaries and assemble the matchgate G(A, B).

    :param a: the unitary acting on span{|00>, |11>}.
    :param b: the unitary acting on span{|01>, |10>}.
    :param edge: the ordered vertex pair, first entry is the first tensor factor.
    :param name: optional gate name kept for serialisation.
    :param param: optional gate parameter kept for serialisation.
    :return: the matchgate.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    for label, block in (("A", a), ("B", b)):
        if block.shape != (2, 2):
            raise GateError(f"{label} must be 2x2, got shape {block.shape}")
        check_unitary(block)
    tolerance = get_params().unitarity_tolerance
    gap = abs(np.linalg.det(a) - np.linalg.det(b))
    if gap > tolerance:
        raise DeterminantMismatch(f"|det A - det B| = {gap:.3e}")
    if edge[0] == edge[1]:
        raise GateError(f"edge {edge} repeats a vertex")
    return Matchgate(a, b, (int(edge[0]), int(edge[1])), name, param)


def is_matchgate(
    matrix: np.ndarray,
) -> Tuple[bool, Optional[Tuple[np.ndarray, np.ndarray]]]:
    """
    Check whether a two-qubit unitary is a matchgate.

    :param matrix: a 4x4 unitary.
    :return: the verdict and, when it holds, the blocks (A, B).
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (4, 4):
        raise GateError(f"expected a 4x4 matrix, got shape {matrix.shape}")
    check_unitary(matrix)
    tolerance = get_params().roundtrip_tolerance
    off_block = matrix.copy()
    off_block[np.ix_(EVEN, EVEN)] = 0
    off_block[np.ix_(ODD, ODD)] = 0
    if np.max(np.abs(off_block)) > tolerance:
        return False, None
    a = matrix[np.ix_(EVEN, EVEN)]
    b = matrix[np.ix_(ODD, ODD)]
    if abs(np.linalg.det(a) - np.linalg.det(b)) > tolerance:
        return False, None
    return True, (a, b)


def named_gate(name: str, parameter: Parameter = None) -> np.ndarray:
    """
    Get the exact matrix of a named gate.

    :param name: one of NAMED_GATES.
    :param parameter: the angle of xy, or the 2x2 unitary of g_aa.
    :return: a 4x4 matrix, or 2x2 for p_phase.
    """
    if name not in NAMED_GATES:
        raise UnknownGate(f"unknown gate {name!r}")
    if name in PARAMETRISED and parameter is None:
        raise MissingParameter(f"gate {name!r} needs a parameter")
    if name == "fswap":
        return assemble(PAULI_Z, PAULI_X)
    if name == "iswap":
        return assemble(I2, 1j * PAULI_X)
    if name == "iswap_dagger":
        return assemble(I2, -1j * PAULI_X)
    if name == "xy":
        return expm(0.5j * float(parameter) * XY_HAMILTONIAN)  # type: ignore
    if name == "g_aa":
        block = np.asarray(parameter, dtype=complex)
        return assemble(block, block)
    if name == "swap":
        return assemble(I2, PAULI_X)
    if name == "cz":
        return np.diag([1, 1, 1, -1]).astype(complex)
    return np.diag([1, 1j]).astype(complex)


def is_named_matchgate(name: str) -> bool:
    """Check whether a named gate is a matchgate."""
    if name not in NAMED_GATES:
        raise UnknownGate(f"unknown gate {name!r}")
    return name not in NON_MATCHGATES


def named_matchgate(name: str, edge: Edge, parameter: Parameter = None) -> Matchgate:
    """Build a Matchgate from a named gate."""
    if not is_named_matchgate(name):
        raise DeterminantMismatch(f"{name} is not a matchgate")
    ok, blocks = is_matchgate(named_gate(name, parameter))
    if not ok or blocks is None:
        raise DeterminantMismatch(f"{name} is not a matchgate")
    if name == "g_aa":
        return make_matchgate(*blocks, edge=edge)
    param = float(parameter) if name == "xy" else None  # type: ignore
    return make_matchgate(*blocks, edge=edge, name=name, param=param)


def fswap(u: int, v: int) -> Matchgate:
    """Get the fermionic SWAP on (u, v)."""
    return named_matchgate("fswap", (u, v))


def iswap(u: int, v: int) -> Matchgate:
    """Get the i-SWAP on (u, v)."""
    return named_matchgate("iswap", (u, v))


def iswap_dagger(u: int, v: int) -> Matchgate:
    """Get the inverse i-SWAP on (u, v)."""
    return named_matchgate("iswap_dagger", (u, v))


def xy(angle: float, u: int, v: int) -> Matchgate:
    """Get exp(i angle/2 (XX + YY)) on (u, v)."""
    return named_matchgate("xy", (u, v), angle)


def g_aa(block: np.ndarray, u: int, v: int) -> Matchgate:
    """Get G(A, A) on (u, v)."""
    return make_matchgate(block, block, edge=(u, v))


def random_matchgate(rng: np.random.Generator, edge: Edge = (0, 1)) -> Matchgate:
    """Draw Haar-random A, B and fix the phase of B so that det A = det B."""
    a = unitary_group.rvs(2, random_state=rng)
    b = unitary_group.rvs(2, random_state=rng)
    b = b * np.sqrt(np.linalg.det(a) / np.linalg.det(b))
    return make_matchgate(a, b, edge=edge)


@dataclass(frozen=True)
class MatchgateHamiltonian:
    """Represent the real coefficients of a quadratic two-qubit generator."""

    zu: float = 0.0
    zv: float = 0.0
    xx: float = 0.0
    yy: float = 0.0
    xy: float = 0.0
    yx: float = 0.0
    identity: float = 0.0

    def as_dict(self) -> Dict[str, float]:
        """Get the coefficients by generator name."""
        return {key: getattr(self, key) for key in GENERATORS}

    def swapped(self) -> "MatchgateHamiltonian":
        """Get the coefficients seen with the two qubits exchanged."""
        return MatchgateHamiltonian(
            zu=self.zv,
            zv=self.zu,
            xx=self.xx,
            yy=self.yy,
            xy=self.yx,
            yx=self.xy,
            identity=self.identity,
        )


def hamiltonian_matrix(h: MatchgateHamiltonian) -> np.ndarray:
    """Rebuild the 4x4 generator sum of coefficient times Pauli product."""
    return sum(
        (coefficient * GENERATORS[key] for key, coefficient in h.as_dict().items()),
        np.zeros((4, 4), dtype=complex),
    )


def _eigenphases(block: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Get the eigenphases in (-pi, pi] and the unitary eigenbasis of a block."""
    tolerance = get_params().unitarity_tolerance
    triangular, basis = schur(block, output="complex")
    phases = np.angle(np.diag(triangular))
    at_minus_pi = phases <= -np.pi + tolerance
    if np.any(at_minus_pi):
        _logger.debug("eigenphase at pi resolved to +pi")
        phases[at_minus_pi] = np.pi
    return phases, basis


def gate_to_hamiltonian(m: Matchgate) -> MatchgateHamiltonian:
    """
    Take a logarithm of a matchgate inside the span of the quadratic generators.

    Eigenphases start in (-pi, pi]; when the two blocks' phase sums differ by a
    multiple of 2 pi, the largest phases are shifted by 2 pi until they agree,
    which removes the Z_u Z_v component.

    :param m: the matchgate.
    :return: coefficients with exp(i sum alpha sigma) equal to the gate.
    """
    phases_a, basis_a = _eigenphases(m.a)
    phases_b, basis_b = _eigenphases(m.b)
    turns = int(np.round((phases_a.sum() - phases_b.sum()) / (2 * np.pi)))
    while turns > 0:
        phases_a[np.argmax(phases_a)] -= 2 * np.pi
        turns -= 1
    while turns < 0:
        phases_b[np.argmax(phases_b)] -= 2 * np.pi
        turns += 1
    log_a = basis_a @ np.diag(phases_a) @ basis_a.conj().T
    log_b = basis_b @ np.diag(phases_b) @ basis_b.conj().T
    generator = assemble(log_a, log_b)
    coefficients = {
        key: float(np.real(np.trace(sigma @ generator)) / 4)
        for key, sigma in GENERATORS.items()
    }
    return MatchgateHamiltonian(**coefficients)


def exponentiate(h: MatchgateHamiltonian) -> np.ndarray:
    """Get exp(i H) for a quadratic generator."""
    return expm(1j * hamiltonian_matrix(h))


def complex_to_json(value: complex, digits: Optional[int] = None) -> List[float]:
    """Serialise a complex number as [re, im] with the configured precision."""
    digits = get_params().float_digits if digits is None else digits
    return [float(f"{value.real:.{digits}g}"), float(f"{value.imag:.{digits}g}")]


def complex_from_json(value: Any) -> complex:
    """Parse a complex number serialised as [re, im] or a bare real."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(x, (int, float)) for x in value)
    ):
        return complex(value[0], value[1])
    raise ParseError(f"expected [re, im], got {value!r}")


def matrix_from_json(value: Any, size: int = 2) -> np.ndarray:
    """Parse a size x size complex matrix."""
    if not isinstance(value, list) or len(value) != size:
        raise ParseError(f"expected a {size}x{size} matrix, got {value!r}")
    rows = []
    for row in value:
        if not isinstance(row, list) or len(row) != size:
            raise ParseError(f"expected a row of {size} entries, got {row!r}")
        rows.append([complex_from_json(entry) for entry in row])
    return np.array(rows, dtype=complex)


def matrix_to_json(matrix: np.ndarray) -> List[List[List[float]]]:
    """Serialise a complex matrix."""
    return [[complex_to_json(entry) for entry in row] for row in matrix]


@dataclass(frozen=True)
class PhysicalCircuit:
    """Represent an ordered list of matchgates on the edges of a graph."""

    graph: Graph
    gates: Tuple[Matchgate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        """Check that every gate acts on an edge of the graph."""
        for index, gate in enumerate(self.gates):
            u, v = gate.edge
            if not self.graph.has_edge(u, v):
                raise GraphMismatch(f"gate {index} acts on ({u}, {v}), not an edge")

    @property
    def n(self) -> int:
        """Get the number of qubits."""
        return self.graph.n

    def __len__(self) -> int:
        """Get the number of gates."""
        return len(self.gates)

    @classmethod
    def from_dict(
        cls, content: Dict[str, Any], base: Optional[Path] = None
    ) -> "PhysicalCircuit":
        """Build from the decoded JSON circuit format."""
        if not isinstance(content, dict):
            raise ParseError("a circuit file must hold a JSON object")
        try:
            n = int(content["n"])
            reference = content["graph"]
            entries = content["gates"]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed circuit header: {e}") from e
        graph = _graph_from_reference(reference, n, base)
        if graph.n != n:
            raise ParseError(f"graph has {graph.n} vertices but the circuit n={n}")
        return cls(graph, tuple(_gate_from_json(entry) for entry in entries))

    @classmethod
    def parse(cls, content: str, base: Optional[Path] = None) -> "PhysicalCircuit":
        """Parse the JSON circuit format."""
        try:
            decoded = json.loads(content)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from e
        return cls.from_dict(decoded, base)

    @classmethod
    def load(cls, file: Path) -> "PhysicalCircuit":
        """Load from file; graph file references resolve relative to it."""
        return cls.parse(file.read_text(encoding="utf-8"), file.parent)

    def to_dict(self) -> Dict[str, Any]:
        """Encode to the JSON circuit format."""
        if self.graph == path_graph(self.n):
            reference: Any = "path"
        elif self.n >= 3 and self.graph == cycle_graph(self.n):
            reference = "cycle"
        else:
            reference = {"edges": [list(edge) for edge in sorted(self.graph.edges)]}
        return {
            "n": self.n,
            "graph": reference,
            "gates": [_gate_to_json(gate) for gate in self.gates],
        }

    def dump(self, file: Path) -> None:
        """Dump to file."""
        file.write_text(json.dumps(self.to_dict(), indent=2), encoding="utf-8")


def _graph_from_reference(reference: Any, n: int, base: Optional[Path]) -> Graph:
    """Resolve the graph field of a circuit file."""
    if reference == "path":
        return path_graph(n)
    if reference == "cycle":
        return cycle_graph(n)
    if isinstance(reference, dict) and "edges" in reference:
        try:
            edges = [(int(u), int(v)) for u, v in reference["edges"]]
        except (TypeError, ValueError) as e:
            raise ParseError(f"malformed inline edge list: {e}") from e
        return Graph.from_edges(n, edges)
    if isinstance(reference, str):
        file = Path(reference)
        if base is not None and not file.is_absolute():
            file = base / file
        if not file.is_file():
            raise ParseError(f"graph file {file} not found")
        return Graph.load(file)
    raise ParseError(f"unsupported graph reference {reference!r}")


def _parse_edge(entry: Dict[str, Any]) -> Edge:
    """Parse the edge of a gate entry."""
    try:
        u, v = entry["edge"]
        return int(u), int(v)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"gate entry needs an edge [u, v]: {entry!r}") from e


def _gate_from_json(entry: Any) -> Matchgate:
    """Parse one gate entry."""
    if not isinstance(entry, dict):
        raise ParseError(f"gate entry must be an object, got {entry!r}")
    edge = _parse_edge(entry)
    if "name" in entry:
        name = entry["name"]
        parameter: Parameter = entry.get("param")
        if name == "g_aa" and parameter is not None:
            parameter = matrix_from_json(parameter)
        return named_matchgate(name, edge, parameter)
    if "A" in entry and "B" in entry:
        return make_matchgate(
            matrix_from_json(entry["A"]), matrix_from_json(entry["B"]), edge=edge
        )
    raise ParseError(f"gate entry needs a name or A and B: {entry!r}")


def _gate_to_json(gate: Matchgate) -> Dict[str, Any]:
    """Encode one gate entry."""
    entry: Dict[str, Any] = {}
    if gate.name is not None:
        entry["name"] = gate.name
        if gate.param is not None:
            entry["param"] = gate.param
    else:
        entry["A"] = matrix_to_json(gate.a)
        entry["B"] = matrix_to_json(gate.b)
    entry["edge"] = list(gate.edge)
    return entry
