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
Script for generating random sample inputs.

This script writes, under the output directory,

- graphs/: the path, the cycle and a few trees in the plain-text format
- circuits/: random matchgate circuits on the path and the cycle
- logical/: random logical circuits for both compilation modes
"""

import logging
from pathlib import Path
from typing import List, Optional

import click
import numpy as np
from scipy.stats import unitary_group

from packages.matchgraph.cli import PathArgument
from packages.matchgraph.compiler.layout import Mode
from packages.matchgraph.compiler.logical import (
    CZ,
    LogicalCircuit,
    LogicalGate,
    OneQubit,
    XRot,
    XZRot,
)
from packages.matchgraph.graphs import (
    Graph,
    binary_tree,
    cycle_graph,
    path_graph,
    spider_graph,
    star_graph,
)
from packages.matchgraph.matchgates import PhysicalCircuit, random_matchgate
from packages.matchgraph.models import get_params


_logger = logging.getLogger(__name__)


def random_physical_circuit(
    rng: np.random.Generator, g: Graph, depth: int
) -> PhysicalCircuit:
    """Draw Haar-random matchgates on random edges, in random orientation."""
    edges = sorted(g.edges)
    gates = []
    for _ in range(depth):
        u, v = edges[int(rng.integers(len(edges)))]
        edge = (u, v) if rng.integers(2) else (v, u)
        gates.append(random_matchgate(rng, edge))
    return PhysicalCircuit(g, tuple(gates))


def random_logical_circuit(
    rng: np.random.Generator, m: int, depth: int, mode: Mode
) -> LogicalCircuit:
    """
    Draw a logical circuit from the primitives of a mode.

    XY circuits hold X and XZ rotations; matchgate circuits also draw CZ and
    Haar-random single-qubit gates.
    """
    gates: List[LogicalGate] = []
    for _ in range(depth):
        i, j = (int(q) for q in rng.choice(m, size=2, replace=False))
        a = float(rng.uniform(-np.pi, np.pi))
        kind = int(rng.integers(2 if mode == Mode.XY else 4))
        if kind == 0:
            gates.append(XRot(a, i))
        elif kind == 1:
            gates.append(XZRot(a, i, j))
        elif kind == 2:
            gates.append(CZ(i, j))
        else:
            gates.append(OneQubit(unitary_group.rvs(2, random_state=rng), i))
    return LogicalCircuit(m, tuple(gates))


def generate(
    out: Path, path_n: int, cycle_n: int, depth: int, seed: int
) -> List[Path]:
    """
    Write every sample file and get their paths.

    :param out: the output directory.
    :param path_n: the size of the path.
    :param cycle_n: the size of the cycle.
    :param depth: the gate count of every circuit.
    :param seed: the random seed.
    :return: the written files.
    """
    rng = np.random.default_rng(seed)
    written = []
    graphs = {
        f"path{path_n}": path_graph(path_n),
        f"cycle{cycle_n}": cycle_graph(cycle_n),
        "star5": star_graph(4),
        "binary15": binary_tree(4),
        "spider13": spider_graph(3, 4),
    }
    for folder in ("graphs", "circuits", "logical"):
        (out / folder).mkdir(parents=True, exist_ok=True)
    for name, g in graphs.items():
        file = out / "graphs" / f"{name}.txt"
        file.write_text(g.compile(), encoding="utf-8")
        written.append(file)
    for name in (f"path{path_n}", f"cycle{cycle_n}"):
        file = out / "circuits" / f"{name}.json"
        random_physical_circuit(rng, graphs[name], depth).dump(file)
        written.append(file)
    for mode in Mode:
        file = out / "logical" / f"{mode.value}.json"
        random_logical_circuit(rng, 2, depth, mode).dump(file)
        written.append(file)
    _logger.info(f"wrote {len(written)} sample files with seed {seed}")
    return written


@click.command(name="generate-samples")
@click.option(
    "--out",
    type=PathArgument(file_okay=False, dir_okay=True),
    required=True,
    help="Output directory.",
)
@click.option("-n", "path_n", type=int, default=5, show_default=True, help="Path size.")
@click.option(
    "--cycle", "cycle_n", type=int, default=6, show_default=True, help="Cycle size."
)
@click.option("--depth", type=int, default=20, show_default=True, help="Gate count.")
@click.option("--seed", type=int, help="Random seed, the configured seed by default.")
def main(
    out: Path, path_n: int, cycle_n: int, depth: int, seed: Optional[int] = None
) -> None:
    """Generate random sample graphs and circuits."""
    seed = get_params().seed if seed is None else seed
    for file in generate(out, path_n, cycle_n, depth, seed):
        click.echo(str(file))


if __name__ == "__main__":
    main()  # pylint: disable=no-value-for-parameter
