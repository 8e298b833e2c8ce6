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

"""Tests for the sample generation script."""

from pathlib import Path

import numpy as np
from click.testing import CliRunner

from packages.matchgraph.compiler.layout import Mode
from packages.matchgraph.compiler.logical import (
    CZ,
    LogicalCircuit,
    OneQubit,
    XRot,
    XZRot,
)
from packages.matchgraph.graphs import Graph, GraphClass, classify, cycle_graph
from packages.matchgraph.matchgates import PhysicalCircuit
from packages.matchgraph.oracle import ProductState, expectation_z, run_circuit
from packages.matchgraph.simulator import expected_z
from scripts.generate_samples import (
    generate,
    main,
    random_logical_circuit,
    random_physical_circuit,
)


def test_random_cycle_circuit_simulates(rng: np.random.Generator) -> None:
    """Random cycle circuits agree between the two simulators."""
    circuit = random_physical_circuit(rng, cycle_graph(5), 15)
    assert len(circuit) == 15
    state = ProductState.basis("01101")
    fast = expected_z(circuit, state)
    final = run_circuit(circuit, state)
    for k in range(5):
        assert abs(fast[k] - expectation_z(final, k)) < 1e-9


def test_xy_logical_circuits_use_rotations(rng: np.random.Generator) -> None:
    """XY circuits hold X and XZ rotations only."""
    circuit = random_logical_circuit(rng, 3, 30, Mode.XY)
    assert all(isinstance(gate, (XRot, XZRot)) for gate in circuit.gates)
    circuit.ensure_xy_primitive()


def test_generate(tmp_path: Path) -> None:
    """Every written file loads back."""
    files = generate(tmp_path, 5, 6, 10, seed=7)
    names = {file.relative_to(tmp_path).as_posix() for file in files}
    assert "graphs/cycle6.txt" in names
    assert "logical/xy.json" in names
    circuit = PhysicalCircuit.load(tmp_path / "circuits" / "cycle6.json")
    assert classify(circuit.graph) == GraphClass.CYCLE
    assert LogicalCircuit.load(tmp_path / "logical" / "matchgate.json").m == 2


def test_same_seed_same_files(tmp_path: Path) -> None:
    """The seed fixes the output."""
    generate(tmp_path / "a", 4, 5, 5, seed=3)
    generate(tmp_path / "b", 4, 5, 5, seed=3)
    for name in ("circuits/path4.json", "logical/matchgate.json"):
        first = (tmp_path / "a" / name).read_text(encoding="utf-8")
        assert first == (tmp_path / "b" / name).read_text(encoding="utf-8")


def test_command(tmp_path: Path) -> None:
    """The command prints the written files."""
    result = CliRunner().invoke(main, ["--out", str(tmp_path), "-n", "5"])
    assert result.exit_code == 0, result.output
    assert len(result.output.strip().splitlines()) == 9


def test_default_sizes_match_shipped_graphs(tmp_path: Path) -> None:
    """A default run writes the path and cycle sizes shipped under samples/."""
    result = CliRunner().invoke(main, ["--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    shipped = Path(__file__).parent.parent / "samples"
    for name in ("graphs/path5.txt", "graphs/cycle6.txt"):
        assert Graph.load(tmp_path / name) == Graph.load(shipped / name)
    for name in ("circuits/path5.json", "circuits/cycle6.json"):
        assert (tmp_path / name).exists()


def test_matchgate_logical_circuits_mix_primitives(rng: np.random.Generator) -> None:
    """Matchgate circuits draw every logical gate kind."""
    circuit = random_logical_circuit(rng, 3, 60, Mode.MATCHGATE)
    kinds = {type(gate) for gate in circuit.gates}
    assert kinds == {XRot, XZRot, CZ, OneQubit}
