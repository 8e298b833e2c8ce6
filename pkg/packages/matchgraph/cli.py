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

"""This module contains the matchgraph command line interface."""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click

from packages.matchgraph.compiler import (
    LogicalCircuit,
    Mode,
    compile as compile_circuit,
    plan_layout,
    verify_compilation,
)
from packages.matchgraph.errors import MatchgraphError, ParseError, VerificationFailed
from packages.matchgraph.graphs import (
    Graph,
    GraphClass,
    classify,
    size_certificate,
    spanning_tree_with_branch,
)
from packages.matchgraph.matchgates import PhysicalCircuit
from packages.matchgraph.models import get_params
from packages.matchgraph.oracle import ProductState, expectation_z, run_circuit
from packages.matchgraph.simulator import expected_z


CIRCUIT_FILE = "circuit.json"
REPORT_FILE = "report.json"


class PathArgument(click.Path):
    """Path parameter for CLI."""

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Optional[Path]:
        """Convert path string to `pathlib.Path`"""
        path_string = super().convert(value, param, ctx)
        return None if path_string is None else Path(path_string)


def _round(value: float) -> float:
    """Round to the configured number of significant digits."""
    return float(f"{value:.{get_params().float_digits}g}")


def _emit(content: Dict[str, Any]) -> None:
    """Print one JSON document to standard output."""
    click.echo(json.dumps(content))


def handle_errors(command: Callable) -> Callable:
    """Turn package errors into a JSON line on standard error and an exit code."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except MatchgraphError as e:
            error = {"error": type(e).__name__, "message": str(e)}
            click.echo(json.dumps(error), err=True)
            sys.exit(e.exit_code)

    return wrapper


def _parse_observable(observable: Optional[str], n: int) -> List[int]:
    """Parse Z:k[,k...] into qubit indices, every qubit by default."""
    if observable is None:
        return list(range(n))
    kind, _, indices = observable.partition(":")
    if kind != "Z" or not indices:
        raise ParseError(f"expected Z:k[,k...], got {observable!r}")
    try:
        return [int(k) for k in indices.split(",")]
    except ValueError as e:
        raise ParseError(f"non-integer qubit in {observable!r}") from e


def _load_input(value: str, n: int) -> ProductState:
    """Read a product state from a file or inline text."""
    path = Path(value)
    state = ProductState.load(path) if path.is_file() else ProductState.parse(value)
    if state.n != n:
        raise ParseError(f"input has {state.n} qubits, the circuit {n}")
    return state


def _load_circuit(circuit_path: Path, graph_path: Optional[Path]) -> PhysicalCircuit:
    """Load a physical circuit, replacing its graph when one is given."""
    circuit = PhysicalCircuit.load(circuit_path)
    if graph_path is None:
        return circuit
    graph = Graph.load(graph_path)
    if graph.n != circuit.n:
        raise ParseError(f"graph has {graph.n} vertices, the circuit {circuit.n}")
    return PhysicalCircuit(graph, circuit.gates)


@click.group(name="matchgraph")
@click.option("--verbose", is_flag=True, help="Log per-gate detail.")
def cli(verbose: bool = False) -> None:
    """Simulate and compile matchgate circuits on interaction graphs."""
    logging.basicConfig(format="- %(levelname)s: %(message)s")
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING)


@cli.command(name="classify")
@click.argument(
    "graph_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
)
@handle_errors
def cmd_classify(graph_path: Path) -> None:
    """Classify an interaction graph and recommend a compilation strategy."""
    graph = Graph.load(graph_path)
    graph_class = classify(graph)
    if graph_class != GraphClass.OTHER:
        _emit({"class": graph_class.value, "simulable": True})
        return
    n, leaf_count, path_length, bound = size_certificate(
        spanning_tree_with_branch(graph)
    )
    layout = plan_layout(graph, Mode.MATCHGATE)
    xy_layout = plan_layout(graph, Mode.XY)
    _emit(
        {
            "class": graph_class.value,
            "simulable": False,
            "n": n,
            "l": leaf_count,
            "p": path_length,
            "bound": bound,
            "strategy": layout.strategy.value,
            "capacity": layout.capacity,
            "xy_strategy": xy_layout.strategy.value,
            "xy_capacity": xy_layout.capacity,
        }
    )


@cli.command(name="simulate")
@click.option(
    "--method",
    type=click.Choice(["jw", "dense"]),
    default="jw",
    show_default=True,
    help="Rotation simulator or dense statevector.",
)
@click.option(
    "--graph",
    "graph_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    help="Graph file replacing the graph named by the circuit.",
)
@click.option(
    "--circuit",
    "circuit_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    required=True,
    help="Physical circuit file.",
)
@click.option(
    "--input",
    "input_state",
    required=True,
    help="Bit string, JSON qubit list, or a file holding either.",
)
@click.option("--observable", help="Z:k[,k...], every qubit by default.")
@handle_errors
def cmd_simulate(
    method: str,
    circuit_path: Path,
    input_state: str,
    graph_path: Optional[Path] = None,
    observable: Optional[str] = None,
) -> None:
    """Compute <Z_k> after a physical circuit."""
    circuit = _load_circuit(circuit_path, graph_path)
    state = _load_input(input_state, circuit.n)
    ks = _parse_observable(observable, circuit.n)
    if method == "jw":
        values = expected_z(circuit, state, ks)
    else:
        final = run_circuit(circuit, state)
        values = {k: expectation_z(final, k) for k in ks}
    _emit({str(k): _round(values[k]) for k in ks})


@cli.command(name="compile")
@click.option(
    "--graph",
    "graph_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    required=True,
    help="Physical graph file.",
)
@click.option(
    "--logical",
    "logical_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    required=True,
    help="Logical circuit file.",
)
@click.option(
    "--mode",
    type=click.Choice([mode.value for mode in Mode]),
    default=Mode.MATCHGATE.value,
    show_default=True,
)
@click.option(
    "--out",
    "out_dir",
    type=PathArgument(file_okay=False, dir_okay=True),
    required=True,
    help="Directory receiving circuit.json and report.json.",
)
@handle_errors
def cmd_compile(graph_path: Path, logical_path: Path, mode: str, out_dir: Path) -> None:
    """Compile a logical circuit onto a graph."""
    graph = Graph.load(graph_path)
    logical = LogicalCircuit.load(logical_path)
    circuit, report = compile_circuit(logical, graph, Mode(mode))
    out_dir.mkdir(parents=True, exist_ok=True)
    circuit.dump(out_dir / CIRCUIT_FILE)
    content = report.to_dict()
    (out_dir / REPORT_FILE).write_text(json.dumps(content, indent=2), encoding="utf-8")
    click.echo(
        f"{report.strategy.value}: {report.logical_qubits} logical on "
        f"{report.physical_qubits} physical, {report.total_gates} gates, "
        f"gadget {report.gadget}",
        err=True,
    )
    _emit(content)


@cli.command(name="verify")
@click.option(
    "--graph",
    "graph_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    required=True,
    help="Physical graph file.",
)
@click.option(
    "--logical",
    "logical_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    required=True,
    help="Logical circuit file.",
)
@click.option(
    "--compiled",
    "compiled_path",
    type=PathArgument(exists=True, file_okay=True, dir_okay=False),
    required=True,
    help="Compiled circuit file.",
)
@click.option(
    "--mode",
    type=click.Choice([mode.value for mode in Mode]),
    default=Mode.MATCHGATE.value,
    show_default=True,
)
@handle_errors
def cmd_verify(
    graph_path: Path, logical_path: Path, compiled_path: Path, mode: str
) -> None:
    """Check a compiled circuit against its logical circuit on the dense oracle."""
    graph = Graph.load(graph_path)
    logical = LogicalCircuit.load(logical_path)
    layout = plan_layout(graph, Mode(mode), logical.m)
    circuit = _load_circuit(compiled_path, graph_path)
    result = verify_compilation(circuit, layout, logical)
    _emit(
        {
            "fidelity": _round(result.fidelity),
            "leakage": _round(result.leakage),
            "passed": result.passed,
        }
    )
    if not result.passed:
        raise VerificationFailed(f"fidelity {result.fidelity:.15g} below threshold")
