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

"""
This module contains the rotation-matrix simulator of matchgate circuits.

Majorana operators are indexed from zero internally: c_{2j} = Z...Z X_j and
c_{2j+1} = Z...Z Y_j, with qubits taken in Jordan-Wigner order. A generator
H = (i/4) sum h_{mu nu} c_mu c_nu gives exp(-iH) c_mu exp(iH) = sum R_{mu nu} c_nu
with R = exp(-h).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from packages.matchgraph.errors import (
    IndexOutOfRange,
    NotNearestNeighbor,
    NotWrapEdge,
    SizeMismatch,
    UnsupportedGraph,
    VerificationFailed,
)
from packages.matchgraph.graphs import (
    GraphClass,
    classify,
    cycle_order,
    path_order,
)
from packages.matchgraph.matchgates import (
    Matchgate,
    MatchgateHamiltonian,
    PhysicalCircuit,
    gate_to_hamiltonian,
)
from packages.matchgraph.models import get_params
from packages.matchgraph.oracle import ProductState, operator_matrix
from packages.matchgraph.paulis import PauliString


_logger = logging.getLogger(__name__)

EVEN_SECTOR = 1
ODD_SECTOR = -1


def majorana(mu: int, n: int) -> PauliString:
    """
    Get the Jordan-Wigner operator c_mu, counting mu from one.

    :param mu: index in 1..2n.
    :param n: the number of qubits.
    :return: Z on the qubits before j, then X (odd mu) or Y (even mu) on qubit j.
    """
    if not 1 <= mu <= 2 * n:
        raise IndexOutOfRange(f"Majorana index {mu} outside 1..{2 * n}")
    j, kind = divmod(mu - 1, 2)
    return PauliString("Z" * j + "XY"[kind] + "I" * (n - j - 1))


def majorana_matrices(n: int) -> List[np.ndarray]:
    """Get the dense matrices of c_0..c_{2n-1}."""
    return [majorana(mu, n).to_matrix() for mu in range(1, 2 * n + 1)]


def pauli_expectation(state: ProductState, p: PauliString) -> complex:
    """Get <psi|P|psi> of a product state as a product of one-qubit factors."""
    if state.n != p.n:
        raise SizeMismatch(f"state has {state.n} qubits, Pauli string {p.n}")
    bloch = state.bloch()
    value = complex(p.phase)
    for qubit, letter in enumerate(p.letters):
        if letter != "I":
            value *= bloch[qubit, "XYZ".index(letter)]
    return value


@dataclass(frozen=True, eq=False)
class QuadraticGenerator:
    """Represent the real antisymmetric coefficients h of (i/4) sum h c c."""

    h: np.ndarray

    def __post_init__(self) -> None:
        """Check antisymmetry."""
        if not np.array_equal(self.h, -self.h.T):
            raise ValueError("a quadratic generator must be antisymmetric")

    def rotation(self) -> np.ndarray:
        """Get the SO(2n) rotation exp(-h)."""
        return np.real(expm(-self.h))


def _oriented(h: MatchgateHamiltonian, first: int, second: int) -> MatchgateHamiltonian:
    """Get the coefficients with the lower Jordan-Wigner position first."""
    return h if first < second else h.swapped()


def _path_block(h: MatchgateHamiltonian) -> np.ndarray:
    """Get the local generator on (c_2k, c_2k+1, c_2k+2, c_2k+3)."""
    local = np.zeros((4, 4))
    local[0, 1] = -2 * h.zu
    local[2, 3] = -2 * h.zv
    local[1, 2] = -2 * h.xx
    local[0, 3] = 2 * h.yy
    local[0, 2] = 2 * h.yx
    local[1, 3] = -2 * h.xy
    return local - local.T


def _wrap_block(h: MatchgateHamiltonian, sector: int) -> np.ndarray:
    """Get the local generator on (c_0, c_1, c_2n-2, c_2n-1) in a parity sector."""
    local = np.zeros((4, 4))
    local[0, 1] = -2 * h.zu
    local[2, 3] = -2 * h.zv
    local[0, 3] = -2 * sector * h.xx
    local[1, 2] = 2 * sector * h.yy
    local[0, 2] = 2 * sector * h.xy
    local[1, 3] = -2 * sector * h.yx
    return local - local.T


def _positions(m: Matchgate, order: Optional[Sequence[int]], n: int) -> Tuple[int, int]:
    """Map the gate edge to Jordan-Wigner positions."""
    order = tuple(range(n)) if order is None else tuple(order)
    if len(order) != n:
        raise SizeMismatch(f"order has {len(order)} entries for n={n}")
    u, v = m.edge
    try:
        return order.index(u), order.index(v)
    except ValueError as e:
        raise IndexOutOfRange(f"gate edge {m.edge} outside 0..{n - 1}") from e


def _embed(n: int, indices: Sequence[int], local: np.ndarray) -> np.ndarray:
    """Embed a local generator into a 2n x 2n zero matrix."""
    full = np.zeros((2 * n, 2 * n))
    full[np.ix_(indices, indices)] = local
    return full


def _path_indices(low: int) -> List[int]:
    """Get the Majorana indices of positions (low, low + 1)."""
    return [2 * low, 2 * low + 1, 2 * low + 2, 2 * low + 3]


def _wrap_indices(n: int) -> List[int]:
    """Get the Majorana indices of positions (0, n - 1)."""
    return [0, 1, 2 * n - 2, 2 * n - 1]


def gate_rotation(
    m: Matchgate, n: int, order: Optional[Sequence[int]] = None
) -> Tuple[QuadraticGenerator, np.ndarray]:
    """
    Get the generator and the rotation of a nearest-neighbour gate.

    :param m: a matchgate on consecutive Jordan-Wigner positions.
    :param n: the number of qubits.
    :param order: the Jordan-Wigner order of the vertices, identity by default.
    :return: the generator h and the 2n x 2n rotation exp(-h).
    """
    first, second = _positions(m, order, n)
    if abs(first - second) != 1:
        raise NotNearestNeighbor(f"gate on {m.edge} is not nearest-neighbour")
    h = _oriented(gate_to_hamiltonian(m), first, second)
    indices = _path_indices(min(first, second))
    generator = QuadraticGenerator(_embed(n, indices, _path_block(h)))
    return generator, generator.rotation()


def wrap_gate_rotation(
    m: Matchgate, n: int, order: Optional[Sequence[int]] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """Get the even-sector and odd-sector rotations of a gate on the closing edge."""
    first, second = _positions(m, order, n)
    if n < 3 or {first, second} != {0, n - 1}:
        raise NotWrapEdge(f"gate on {m.edge} is not on the closing edge")
    h = _oriented(gate_to_hamiltonian(m), first, second)
    indices = _wrap_indices(n)
    return tuple(  # type: ignore
        QuadraticGenerator(_embed(n, indices, _wrap_block(h, sector))).rotation()
        for sector in (EVEN_SECTOR, ODD_SECTOR)
    )


@dataclass
class RotationAccumulator:
    """Represent the running rotations R (even sector) and R' (odd sector)."""

    n: int
    order: Tuple[int, ...]
    cyclic: bool = False
    r: np.ndarray = field(init=False)
    r_prime: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        """Start from the identity."""
        self.r = np.eye(2 * self.n)
        self.r_prime = np.eye(2 * self.n)
        self._position = {vertex: index for index, vertex in enumerate(self.order)}

    def apply(self, m: Matchgate) -> None:
        """Left-multiply the rotation of the next gate as a 4 x 4 block update."""
        u, v = m.edge
        if u not in self._position or v not in self._position:
            raise IndexOutOfRange(f"gate edge {m.edge} outside 0..{self.n - 1}")
        first, second = self._position[u], self._position[v]
        h = _oriented(gate_to_hamiltonian(m), first, second)
        if abs(first - second) == 1:
            indices = _path_indices(min(first, second))
            block = np.real(expm(-_path_block(h)))
            blocks = (block, block)
        elif self.cyclic and {first, second} == {0, self.n - 1}:
            indices = _wrap_indices(self.n)
            blocks = tuple(  # type: ignore
                np.real(expm(-_wrap_block(h, sector)))
                for sector in (EVEN_SECTOR, ODD_SECTOR)
            )
            _logger.debug(f"closing-edge gate on {m.edge}")
        else:
            raise NotNearestNeighbor(f"gate on {m.edge} is not nearest-neighbour")
        self.r[indices, :] = blocks[0] @ self.r[indices, :]
        self.r_prime[indices, :] = blocks[1] @ self.r_prime[indices, :]

    def extend(self, gates: Iterable[Matchgate]) -> None:
        """Apply several gates in time order."""
        for gate in gates:
            self.apply(gate)


def jordan_wigner_order(c: PhysicalCircuit) -> Tuple[Tuple[int, ...], bool]:
    """Get the Jordan-Wigner vertex order of a path or cycle and whether it closes."""
    graph_class = classify(c.graph)
    if graph_class == GraphClass.PATH:
        return path_order(c.graph), False
    if graph_class == GraphClass.CYCLE:
        return cycle_order(c.graph), True
    raise UnsupportedGraph(
        "the rotation simulator needs a path or a cycle; compile the circuit instead"
    )


def accumulate(c: PhysicalCircuit) -> RotationAccumulator:
    """Multiply the per-gate rotations of a path or cycle circuit."""
    order, cyclic = jordan_wigner_order(c)
    accumulator = RotationAccumulator(c.n, order, cyclic)
    accumulator.extend(c.gates)
    return accumulator


def is_special_orthogonal(r: np.ndarray, tolerance: Optional[float] = None) -> bool:
    """Check R^T R = I and det R = 1."""
    tolerance = get_params().roundtrip_tolerance if tolerance is None else tolerance
    orthogonal = np.max(np.abs(r.T @ r - np.eye(r.shape[0]))) <= tolerance
    return bool(orthogonal and abs(np.linalg.det(r) - 1) <= tolerance)


def majorana_covariance(state: ProductState) -> Tuple[np.ndarray, np.ndarray]:
    """
    Get <c_a c_b> and <c_a c_b Z...Z> of a product state in O(n^2).

    :param state: the product state, qubits in Jordan-Wigner order.
    :return: the two 2n x 2n complex tables.
    """
    n = state.n
    bloch = state.bloch()
    x, y, z = bloch[:, 0], bloch[:, 1], bloch[:, 2]
    # <P Z> on the lower site and <P> on the upper site, P in (X, Y)
    left = np.stack([-1j * y, 1j * x], axis=1)
    right = np.stack([x, y], axis=1).astype(complex)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)

    between = np.ones((n, n), dtype=complex)
    for i in range(n - 1):
        between[i, i + 2 :] = np.cumprod(z[i + 1 : n - 1])
    plain = np.einsum("is,ij,jt->isjt", left, between * upper, right)
    plain = plain.reshape(2 * n, 2 * n)

    before = np.concatenate(([1.0], np.cumprod(z)[:-1]))
    after = np.concatenate((np.cumprod(z[::-1])[::-1][1:], [1.0]))
    weighted = np.einsum("i,is,jt,j->isjt", before, right, left, after)
    weighted = (weighted * upper[:, None, :, None]).reshape(2 * n, 2 * n)

    m = plain - plain.T
    parity_m = weighted - weighted.T
    total = np.prod(z)
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        m[a, a] = m[b, b] = 1
        m[a, b], m[b, a] = 1j * z[i], -1j * z[i]
        rest = before[i] * after[i]
        parity_m[a, a] = parity_m[b, b] = total
        parity_m[a, b], parity_m[b, a] = 1j * rest, -1j * rest
    return m, parity_m


def _reordered(state: ProductState, order: Sequence[int]) -> ProductState:
    """Put the qubits of a product state into Jordan-Wigner order."""
    return ProductState(tuple(state.qubits[vertex] for vertex in order))


def _real(value: complex, label: str) -> float:
    """Drop a negligible imaginary residue."""
    tolerance = get_params().agreement_tolerance
    if abs(value.imag) > tolerance:
        raise VerificationFailed(f"{label} has imaginary residue {value.imag:.3e}")
    return float(value.real)


def _check_state(c: PhysicalCircuit, state: ProductState) -> None:
    """Check the state matches the register."""
    if state.n != c.n:
        raise SizeMismatch(f"circuit has {c.n} qubits but the state has {state.n}")


def _require_class(c: PhysicalCircuit, graph_class: GraphClass) -> None:
    """Raise UnsupportedGraph unless the circuit graph has the given class."""
    found = classify(c.graph)
    if found != graph_class:
        raise UnsupportedGraph(
            f"expected a {graph_class.value} graph, got {found.value}"
        )


def expected_z_path(c: PhysicalCircuit, state: ProductState, k: int) -> float:
    """Get <Z_k> after a path circuit, the open-chain formula."""
    _require_class(c, GraphClass.PATH)
    return expected_z(c, state, [k])[k]


def expected_z_cycle(c: PhysicalCircuit, state: ProductState, k: int) -> float:
    """Get <Z_k> after a cycle circuit, split into the two parity sectors."""
    _require_class(c, GraphClass.CYCLE)
    return expected_z(c, state, [k])[k]


def expected_z(
    c: PhysicalCircuit, state: ProductState, ks: Optional[Sequence[int]] = None
) -> Dict[int, float]:
    """
    Get <Z_k> after a path or cycle circuit for several qubits at once.

    :param c: the circuit.
    :param state: the product input, qubits labelled by vertex.
    :param ks: the vertices to evaluate, every vertex by default.
    :return: the expectations by vertex.
    """
    _check_state(c, state)
    ks = list(range(c.n)) if ks is None else list(ks)
    for k in ks:
        if not 0 <= k < c.n:
            raise IndexOutOfRange(f"qubit {k} outside 0..{c.n - 1}")
    accumulator = accumulate(c)
    m, parity_m = majorana_covariance(_reordered(state, accumulator.order))
    position = {vertex: index for index, vertex in enumerate(accumulator.order)}
    r, r_prime = accumulator.r, accumulator.r_prime
    even, odd = (m + parity_m) / 2, (m - parity_m) / 2
    values = {}
    for k in ks:
        a, b = 2 * position[k], 2 * position[k] + 1
        if accumulator.cyclic:
            value = -1j * (r[a] @ even @ r[b] + r_prime[a] @ odd @ r_prime[b])
        else:
            value = -1j * (r[a] @ m @ r[b])
        values[k] = _real(value, f"<Z_{k}>")
    _logger.debug(f"evaluated {len(ks)} expectations on {c.n} qubits")
    return values


def conjugation_rotation(
    u: np.ndarray, edge: Tuple[int, int], n: int
) -> np.ndarray:
    """
    Read the rotation of a two-qubit unitary off U^dagger c_mu U in the Pauli basis.

    :param u: a 4x4 unitary, edge[0] its first tensor factor.
    :param edge: the two target qubits.
    :param n: the number of qubits, vertex order taken as Jordan-Wigner order.
    :return: R with R_{mu nu} = tr(c_nu U^dagger c_mu U) / 2**n.
    """
    full = operator_matrix(u, edge, n)
    operators = majorana_matrices(n)
    conjugated = [full.conj().T @ c_mu @ full for c_mu in operators]
    return np.array(
        [
            [np.real(np.trace(c_nu @ image)) / 2**n for c_nu in operators]
            for image in conjugated
        ]
    )
