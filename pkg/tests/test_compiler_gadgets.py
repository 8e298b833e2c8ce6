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

"""Tests for the entangling gadgets and the single-qubit legs."""

from typing import List

import numpy as np
import pytest

from packages.matchgraph.compiler.gadgets import (
    branch_switch,
    branch_xz,
    compile_cz_branch,
    compile_cz_leaf,
    compile_xz_branch,
    compile_xz_junction,
    median,
    one_qubit_leaf,
    xrot_leaf,
)
from packages.matchgraph.compiler.layout import Layout, Mode, plan_layout
from packages.matchgraph.compiler.logical import (
    CZ,
    LogicalCircuit,
    LogicalGate,
    OneQubit,
    XRot,
    XZRot,
    framed_unitary,
)
from packages.matchgraph.compiler.routing import route_through_ancillas
from packages.matchgraph.errors import SameLogicalQubit
from packages.matchgraph.graphs import Graph, path_graph, pendant_path_graph
from packages.matchgraph.matchgates import (
    PAULI_Y,
    PAULI_Z,
    Matchgate,
    PhysicalCircuit,
    iswap,
    iswap_dagger,
)
from packages.matchgraph.oracle import (
    ProductState,
    encoded_action,
    evolve,
    phase_insensitive_fidelity,
)


HADAMARD = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


def assert_realises(layout: Layout, gates: List[Matchgate], gate: LogicalGate) -> None:
    """Check that the gates act on the code space as the framed logical gate."""
    circuit = PhysicalCircuit(layout.graph, tuple(gates))
    logical, leakage = encoded_action(circuit, layout)
    expected = framed_unitary(LogicalCircuit(layout.n_logical, (gate,)), layout.frames)
    assert max(leakage) < 1e-9
    assert phase_insensitive_fidelity(logical, expected) > 1 - 1e-9


@pytest.fixture
def gadget_layout() -> Layout:
    """Two pairs filling the block of a five-vertex line."""
    return plan_layout(pendant_path_graph(6, 1), Mode.MATCHGATE)


class TestBranchGadgets:
    """Tests for the path-branch gadgets."""

    def test_switch_alone(self, gadget_layout: Layout) -> None:
        """The switch is CZ with no routing around it."""
        assert gadget_layout.pairs == ((1, 2), (3, 4))
        assert gadget_layout.ancillas == frozenset({0, 5})
        gates = compile_cz_branch(gadget_layout, 0, 1)
        switch = branch_switch(gadget_layout.window)  # type: ignore
        assert [g.edge for g in gates] == [g.edge for g in switch]
        assert len(gates) == 11
        assert_realises(gadget_layout, gates, CZ(0, 1))

    def test_switch_reversed(self, gadget_layout: Layout) -> None:
        """Asking for the pairs in the other order still gives CZ."""
        gates = compile_cz_branch(gadget_layout, 1, 0)
        assert len(gates) > 11
        assert_realises(gadget_layout, gates, CZ(1, 0))

    @pytest.mark.parametrize("i, j", [(0, 1), (0, 2), (2, 0), (1, 2)])
    def test_cz_with_routing(self, pendant_path: Graph, i: int, j: int) -> None:
        """Pairs are gathered, switched and sent home."""
        layout = plan_layout(pendant_path, Mode.MATCHGATE)
        assert_realises(layout, compile_cz_branch(layout, i, j), CZ(i, j))

    @pytest.mark.parametrize("i, j", [(0, 1), (1, 0), (3, 1), (2, 3)])
    def test_xz_with_routing(self, pendant_path: Graph, i: int, j: int) -> None:
        """The XY block realises exp(i a X Z) in the plain frame."""
        layout = plan_layout(pendant_path, Mode.XY)
        gates = compile_xz_branch(layout, 0.37, i, j)
        assert {gate.name for gate in gates} <= {"iswap", "iswap_dagger", "xy"}
        assert_realises(layout, gates, XZRot(0.37, i, j))

    def test_same_qubit(self, pendant_path: Graph) -> None:
        """A two-qubit gate needs two logical qubits."""
        with pytest.raises(SameLogicalQubit):
            compile_cz_branch(plan_layout(pendant_path, Mode.MATCHGATE), 1, 1)
        with pytest.raises(SameLogicalQubit):
            compile_xz_branch(plan_layout(pendant_path, Mode.XY), 0.1, 2, 2)


class TestLeafGadgets:
    """Tests for the leaf-routing gadgets."""

    def test_cz_on_star(self, star5: Graph) -> None:
        """Three transpositions through the centre make CZ."""
        layout = plan_layout(star5, Mode.MATCHGATE)
        gates = compile_cz_leaf(layout, 0, 1)
        assert len(gates) == 9
        assert_realises(layout, gates, CZ(0, 1))

    @pytest.mark.slow
    @pytest.mark.parametrize("i, j", [(0, 3), (2, 1)])
    def test_cz_on_binary_tree(self, binary15: Graph, i: int, j: int) -> None:
        """Transpositions run through several ancillas."""
        layout = plan_layout(binary15, Mode.MATCHGATE)
        assert_realises(layout, compile_cz_leaf(layout, i, j), CZ(i, j))

    def test_one_qubit(self, star5: Graph) -> None:
        """G(U, U) on neighbouring tokens applies U."""
        layout = plan_layout(star5, Mode.MATCHGATE)
        gates = one_qubit_leaf(layout, HADAMARD, 1)
        assert [gate.edge for gate in gates] == [(3, 0), (0, 4), (3, 0)]
        assert_realises(layout, gates, OneQubit(HADAMARD, 1))

    def test_xrot_in_y_frame(self, star5: Graph) -> None:
        """Leaf pairs see exp(i a Y)."""
        layout = plan_layout(star5, Mode.XY)
        assert layout.frames == (1, 1)
        assert_realises(layout, xrot_leaf(layout, 0.6, 0), XRot(0.6, 0))

    def test_median(self, star5: Graph, binary15: Graph) -> None:
        """The median is where the three paths meet."""
        assert median(plan_layout(star5, Mode.XY), 1, 2, 3) == 0
        assert median(plan_layout(binary15, Mode.XY), 7, 8, 14) == 3

    @pytest.mark.parametrize("i, j", [(0, 1), (1, 0)])
    def test_junction(self, star5: Graph, i: int, j: int) -> None:
        """The junction realises exp(i a Y Z)."""
        layout = plan_layout(star5, Mode.XY)
        gates = compile_xz_junction(layout, -0.8, i, j)
        assert_realises(layout, gates, XZRot(-0.8, i, j))
        with pytest.raises(SameLogicalQubit):
            compile_xz_junction(layout, 0.1, i, i)


PHASE = np.diag([1, 1j])
ZERO = np.array([1, 0], dtype=complex)


def random_qubit(rng: np.random.Generator) -> np.ndarray:
    """Draw a random normalised single-qubit state."""
    vector = rng.normal(size=2) + 1j * rng.normal(size=2)
    return vector / np.linalg.norm(vector)


def run_gates(
    graph: Graph, gates: List[Matchgate], amplitudes: np.ndarray
) -> np.ndarray:
    """Run gates in order on amplitudes or on a batch of columns."""
    return evolve(PhysicalCircuit(graph, tuple(gates)), amplitudes)


class TestExchangeIdentities:
    """Dense checks of the exchange rules the gadgets are built from."""

    def test_logical_swap_through_qubit(self, rng: np.random.Generator) -> None:
        """Two i-SWAPs move an odd pair past a qubit at the cost of a factor i."""
        for _ in range(10):
            alpha, beta = random_qubit(rng)
            pair = np.zeros(4, dtype=complex)
            pair[0b01], pair[0b10] = alpha, beta
            phi = random_qubit(rng)
            final = run_gates(
                path_graph(3), [iswap(1, 2), iswap(0, 1)], np.kron(pair, phi)
            )
            np.testing.assert_allclose(final, 1j * np.kron(phi, pair), atol=1e-12)

    def test_iswap_through_zero(self, rng: np.random.Generator) -> None:
        """Crossing |0> with i-SWAP applies P, with its inverse P^dagger."""
        psi = random_qubit(rng)
        start = np.kron(ZERO, psi)
        forward = run_gates(path_graph(2), [iswap(0, 1)], start)
        np.testing.assert_allclose(forward, np.kron(PHASE @ psi, ZERO), atol=1e-12)
        backward = run_gates(path_graph(2), [iswap_dagger(0, 1)], start)
        expected = np.kron(PHASE.conj() @ psi, ZERO)
        np.testing.assert_allclose(backward, expected, atol=1e-12)

    def test_alternating_hops_cancel_phase(self, rng: np.random.Generator) -> None:
        """An i-SWAP then an inverse i-SWAP carry a qubit over two |0> unchanged."""
        psi = random_qubit(rng)
        final = run_gates(
            path_graph(3),
            [iswap(1, 2), iswap_dagger(0, 1)],
            np.kron(np.kron(ZERO, ZERO), psi),
        )
        np.testing.assert_allclose(
            final, np.kron(psi, np.kron(ZERO, ZERO)), atol=1e-12
        )

    def test_fswap_transport_out_and_back(
        self, rng: np.random.Generator, binary15: Graph
    ) -> None:
        """f-SWAP hops carry a general qubit through |0> to the root and back."""
        layout = plan_layout(binary15, Mode.MATCHGATE)
        psi = random_qubit(rng)

        def product(at: int) -> np.ndarray:
            qubits = [(1, 0)] * binary15.n
            qubits[at] = (complex(psi[0]), complex(psi[1]))
            return ProductState(tuple(qubits)).to_vector().amplitudes

        outbound = route_through_ancillas(layout, 7, 0)
        inbound = route_through_ancillas(layout, 0, 7, occupied=set())
        assert len(outbound) == len(inbound) == 3
        assert all(g.name == "fswap" for g in outbound + inbound)
        there = run_gates(binary15, outbound, product(7))
        np.testing.assert_allclose(there, product(0), atol=1e-12)
        back = run_gates(binary15, inbound, there)
        np.testing.assert_allclose(back, product(7), atol=1e-12)


class TestBranchXZ:
    """Dense checks of the i-SWAP block behind exp(i a X Z)."""

    @pytest.mark.parametrize("a", [0.3, 1.1, np.pi / 2])
    def test_angles(self, pendant_path: Graph, a: float) -> None:
        """The gadget realises the rotation at generic and quarter-turn angles."""
        layout = plan_layout(pendant_path, Mode.XY)
        gates = compile_xz_branch(layout, a, 0, 1)
        assert_realises(layout, gates, XZRot(a, 0, 1))

    @pytest.mark.parametrize("a", [0.3, 1.1, np.pi / 2])
    def test_bracket_is_yz(self, pendant_path: Graph, a: float) -> None:
        """The middle three gates act as exp(i a Y Z) where the first three move."""
        layout = plan_layout(pendant_path, Mode.XY, 2)
        window = layout.window
        assert window is not None
        slots = [window.vertex(window.g + k) for k in range(-1, 3)]
        assert layout.pairs == (tuple(slots[:2]), tuple(slots[2:]))
        gates = branch_xz(window, a)
        move, bracket, back = gates[:3], gates[3:6], gates[6:]
        assert [g.name for g in back] == [g.inverse().name for g in reversed(move)]
        assert [g.edge for g in back] == [g.edge for g in reversed(move)]

        size = 2**pendant_path.n
        moved = run_gates(pendant_path, move, np.eye(size, dtype=complex))
        columns = moved[:, layout.encoded_indices()]
        targets = np.argmax(np.abs(columns), axis=0)
        phases = columns[targets, np.arange(4)]
        np.testing.assert_allclose(np.abs(phases), 1, atol=1e-12)
        np.testing.assert_allclose(phases / phases[0], [1, 1, 1j, 1j], atol=1e-12)

        middle = run_gates(pendant_path, bracket, np.eye(size, dtype=complex))
        action = middle[np.ix_(targets, targets)]
        np.testing.assert_allclose(np.linalg.norm(action, axis=0), 1, atol=1e-12)
        expected = np.cos(a) * np.eye(4) + 1j * np.sin(a) * np.kron(PAULI_Y, PAULI_Z)
        assert phase_insensitive_fidelity(action, expected) > 1 - 1e-9
