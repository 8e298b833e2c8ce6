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

"""This module contains the logical-to-physical compilers and their verification."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from packages.matchgraph.compiler.gadgets import (
    compile_cz_branch,
    compile_cz_leaf,
    compile_xz_branch,
    compile_xz_junction,
    one_qubit_branch,
    one_qubit_leaf,
    xrot_branch,
    xrot_leaf,
)
from packages.matchgraph.compiler.layout import Layout, Mode, Strategy, plan_layout
from packages.matchgraph.compiler.logical import (
    CZ,
    LogicalCircuit,
    LogicalGate,
    OneQubit,
    XRot,
    XZRot,
    framed_unitary,
)
from packages.matchgraph.compiler.routing import Placement
from packages.matchgraph.errors import RoutingError, SizeMismatch, TooManyQubits
from packages.matchgraph.graphs import Graph
from packages.matchgraph.matchgates import Matchgate, PhysicalCircuit
from packages.matchgraph.models import get_params
from packages.matchgraph.oracle import encoded_action, phase_insensitive_fidelity


_logger = logging.getLogger(__name__)

EXCHANGE_GATES = frozenset({"fswap", "iswap", "iswap_dagger"})

OVERHEAD_CONSTANTS = {
    Strategy.PATH_BRANCH: 20,
    Strategy.XY_PATH_BRANCH: 20,
    Strategy.LEAF_ROUTING: 8,
    Strategy.XY_LEAF_ROUTING: 8,
}


@dataclass(frozen=True)
class CompilationReport:
    """Represent the overhead and the conventions of a compiled circuit."""

    strategy: Strategy
    mode: Mode
    gadget: str
    logical_qubits: int
    physical_qubits: int
    logical_capacity: int
    total_gates: int
    swap_count_per_gate: Tuple[int, ...]
    overhead_constant: int
    overhead_bound: int
    discarded_fraction: float
    pairs: Tuple[Tuple[int, int], ...]
    preparation: Tuple[int, ...]
    frames: Tuple[int, ...]
    hamiltonian_set: Optional[str]

    def to_dict(self) -> Dict[str, Any]:
        """Encode in a fixed field order."""
        digits = get_params().float_digits
        return {
            "strategy": self.strategy.value,
            "mode": self.mode.value,
            "gadget": self.gadget,
            "logical_qubits": self.logical_qubits,
            "physical_qubits": self.physical_qubits,
            "logical_capacity": self.logical_capacity,
            "total_gates": self.total_gates,
            "swap_count_per_gate": list(self.swap_count_per_gate),
            "overhead_constant": self.overhead_constant,
            "overhead_bound": self.overhead_bound,
            "discarded_fraction": float(f"{self.discarded_fraction:.{digits}g}"),
            "pairs": [list(pair) for pair in self.pairs],
            "preparation": list(self.preparation),
            "frames": list(self.frames),
            "hamiltonian_set": self.hamiltonian_set,
        }


@dataclass(frozen=True)
class Verification:
    """Represent the oracle comparison of a compiled circuit."""

    fidelity: float
    leakage: float

    @property
    def passed(self) -> bool:
        """Check the fidelity against the agreement tolerance."""
        return self.fidelity >= 1 - get_params().agreement_tolerance


def gadget_name(layout: Layout) -> str:
    """Get the name of the entangling gadget a layout uses."""
    if layout.strategy == Strategy.PATH_BRANCH:
        return "branch-switch"
    if layout.strategy == Strategy.XY_PATH_BRANCH:
        return "branch-xz"
    if layout.strategy == Strategy.LEAF_ROUTING:
        return "leaf-transposition"
    star = max(layout.tree.degrees().values()) == layout.tree.n - 1
    return "star-junction" if star else "junction"


def overhead_bound(layout: Layout) -> int:
    """Get the allowed exchange count of one two-qubit logical gate."""
    constant = OVERHEAD_CONSTANTS[layout.strategy]
    if layout.window is not None:
        return constant * layout.n_physical
    return constant * layout.longest_path


def lower(gate: LogicalGate) -> List[LogicalGate]:
    """Rewrite rotations in terms of single-qubit gates and CZ."""
    if isinstance(gate, XRot):
        return [OneQubit(gate.matrix(), gate.target)]
    if isinstance(gate, XZRot):
        rotation = XRot(gate.a, gate.i)
        entangler = CZ(gate.i, gate.j)
        return [entangler, OneQubit(rotation.matrix(), gate.i), entangler]
    return [gate]


def _emit_matchgate(
    layout: Layout, placement: Optional[Placement], gate: LogicalGate
) -> List[Matchgate]:
    """Translate one logical gate for an even-parity layout."""
    gates: List[Matchgate] = []
    for step in lower(gate):
        if isinstance(step, OneQubit):
            if placement is not None:
                gates.append(one_qubit_branch(placement, step.u, step.target))
            else:
                gates += one_qubit_leaf(layout, step.u, step.target)
        elif isinstance(step, CZ):
            if placement is not None:
                gates += compile_cz_branch(layout, step.i, step.j, placement)
            else:
                gates += compile_cz_leaf(layout, step.i, step.j)
    return gates


def _emit_xy(
    layout: Layout, placement: Optional[Placement], gate: LogicalGate
) -> List[Matchgate]:
    """Translate one logical gate for an odd-parity layout."""
    if isinstance(gate, XRot):
        if placement is not None:
            return [xrot_branch(placement, gate.a, gate.target)]
        return xrot_leaf(layout, gate.a, gate.target)
    assert isinstance(gate, XZRot)  # nosec
    if placement is not None:
        return compile_xz_branch(layout, gate.a, gate.i, gate.j, placement)
    return compile_xz_junction(layout, gate.a, gate.i, gate.j)


def _compile(
    c: LogicalCircuit, g: Graph, mode: Mode
) -> Tuple[PhysicalCircuit, CompilationReport]:
    """Translate a logical circuit gate by gate and collect the report."""
    layout = plan_layout(g, mode, c.m)
    placement = Placement(layout) if layout.window is not None else None
    emit = _emit_matchgate if mode == Mode.MATCHGATE else _emit_xy
    bound = overhead_bound(layout)
    gates: List[Matchgate] = []
    counts: List[int] = []
    for index, gate in enumerate(c.gates):
        emitted = emit(layout, placement, gate)
        if placement is not None and not placement.at_home():
            raise RoutingError(f"pairs not home after logical gate {index}")
        exchanges = sum(1 for step in emitted if step.name in EXCHANGE_GATES)
        if len(gate.targets) == 2 and exchanges > bound:
            _logger.warning(
                f"logical gate {index} used {exchanges} exchanges, bound {bound}"
            )
        _logger.debug(f"logical gate {index}: {len(emitted)} physical gates")
        gates += emitted
        counts.append(exchanges)
    circuit = PhysicalCircuit(g, tuple(gates))
    report = CompilationReport(
        strategy=layout.strategy,
        mode=mode,
        gadget=gadget_name(layout),
        logical_qubits=layout.n_logical,
        physical_qubits=layout.n_physical,
        logical_capacity=layout.capacity,
        total_gates=len(gates),
        swap_count_per_gate=tuple(counts),
        overhead_constant=OVERHEAD_CONSTANTS[layout.strategy],
        overhead_bound=bound,
        discarded_fraction=layout.discarded_fraction,
        pairs=layout.pairs,
        preparation=layout.preparation,
        frames=layout.frames,
        hamiltonian_set=layout.hamiltonian_set,
    )
    _logger.info(
        f"compiled {len(c.gates)} logical gates into {len(gates)} physical gates"
    )
    return circuit, report


def compile(  # pylint: disable=redefined-builtin
    c: LogicalCircuit, g: Graph, mode: Mode = Mode.MATCHGATE
) -> Tuple[PhysicalCircuit, CompilationReport]:
    """
    Compile a logical circuit into matchgates on the edges of a graph.

    :param c: the logical circuit.
    :param g: a connected graph that is neither a path nor a cycle.
    :param mode: matchgate (even encoding) or xy (odd encoding, XY primitives).
    :return: the physical circuit and its report.
    """
    if mode == Mode.XY:
        return xy_compile(c, g)
    return _compile(c, g, Mode.MATCHGATE)


def xy_compile(
    c: LogicalCircuit, g: Graph
) -> Tuple[PhysicalCircuit, CompilationReport]:
    """Compile X and XZ rotations into i-SWAPs and XY rotations."""
    c.ensure_xy_primitive()
    return _compile(c, g, Mode.XY)


def verify_compilation(
    circuit: PhysicalCircuit, layout: Layout, logical: LogicalCircuit
) -> Verification:
    """
    Compare the encoded action of a compiled circuit with its logical circuit.

    :param circuit: the compiled circuit.
    :param layout: the layout it was compiled for.
    :param logical: the logical circuit.
    :return: the phase-insensitive fidelity and the worst leakage.
    """
    cap = get_params().verify_max_qubits
    if circuit.n > cap:
        raise TooManyQubits(f"{circuit.n} qubits exceed the verification cap of {cap}")
    if logical.m != layout.n_logical:
        raise SizeMismatch(
            f"logical circuit has {logical.m} qubits, the layout {layout.n_logical}"
        )
    action, leakage = encoded_action(circuit, layout)
    expected = framed_unitary(logical, layout.frames)
    fidelity = phase_insensitive_fidelity(expected, action)
    _logger.info(f"fidelity {fidelity:.15g}, leakage {max(leakage):.3e}")
    return Verification(fidelity=fidelity, leakage=max(leakage))
