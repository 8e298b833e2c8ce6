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

"""This module contains the placement of logical qubits on a spanning tree."""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from packages.matchgraph.errors import CapacityExceeded, UnsupportedGraph
from packages.matchgraph.graphs import (
    Graph,
    GraphClass,
    TreeAnalysis,
    classify,
    colouring,
    spanning_tree_with_branch,
    tree_analysis,
)


_logger = logging.getLogger(__name__)

Item = Optional[int]
Pair = Tuple[int, int]


class Mode(Enum):
    """Compilation targets"""

    MATCHGATE = "matchgate"
    XY = "xy"


class Encoding(Enum):
    """Two-qubit encodings of a logical qubit"""

    EVEN = "even"
    ODD = "odd"


class Strategy(Enum):
    """Compilation strategies"""

    PATH_BRANCH = "path-branch"
    LEAF_ROUTING = "leaf-routing"
    XY_PATH_BRANCH = "xy-path-branch"
    XY_LEAF_ROUTING = "xy-leaf-routing"


ENCODINGS = {Mode.MATCHGATE: Encoding.EVEN, Mode.XY: Encoding.ODD}

STRATEGIES = {
    (Mode.MATCHGATE, True): Strategy.PATH_BRANCH,
    (Mode.MATCHGATE, False): Strategy.LEAF_ROUTING,
    (Mode.XY, True): Strategy.XY_PATH_BRANCH,
    (Mode.XY, False): Strategy.XY_LEAF_ROUTING,
}


@dataclass(frozen=True)
class BranchWindow:
    """
    Represent the working line of the path-branch strategies.

    The line is the longest path of the tree read in a fixed orientation, slot s
    being line[s]. The branch vertex sits at slot g and beta is one of its
    neighbours off the line. The gadget block starts at slot g - 1: one ancilla
    and two pairs in matchgate mode, two pairs in XY mode.
    """

    line: Tuple[int, ...]
    g: int
    beta: int
    with_ancilla: bool

    @property
    def block_slots(self) -> int:
        """Get the number of slots of the gadget block."""
        return 5 if self.with_ancilla else 4

    @property
    def left_slots(self) -> int:
        """Get the number of slots before the gadget block."""
        return self.g - 1

    @property
    def right_slots(self) -> int:
        """Get the number of slots after the gadget block."""
        return len(self.line) - self.left_slots - self.block_slots

    @property
    def feasible(self) -> bool:
        """Check that the gadget block fits on the line."""
        return self.g >= 1 and self.right_slots >= 0

    @property
    def capacity(self) -> int:
        """Get the number of logical pairs the line can host."""
        if not self.feasible:
            return 0
        return 2 + self.left_slots // 2 + self.right_slots // 2

    def vertex(self, slot: int) -> int:
        """Get the vertex of a slot."""
        return self.line[slot]

    def target_items(self, m: int, i: int = 0, j: int = 1) -> List[Item]:
        """
        Get the slot items with pairs i and j in the gadget block.

        :param m: the number of logical pairs.
        :param i: the pair placed first in the block.
        :param j: the pair placed second in the block.
        :return: per item, None for an ancilla slot or the logical index of a pair.
        """
        if m > self.capacity:
            raise CapacityExceeded(
                f"{m} logical qubits exceed the line capacity {self.capacity}"
            )
        block_pairs: List[int] = [i, j] if m >= 2 else list(range(m))
        others = [q for q in range(m) if q not in block_pairs]
        k = min(self.left_slots // 2, len(others))
        left: List[Item] = [None] * (self.left_slots - 2 * k)
        left += others[:k]
        rest: List[Item] = list(others[k:])
        block: List[Item] = [None] if self.with_ancilla else []
        block += block_pairs
        used = self.left_slots + len(block) + len(block_pairs) + 2 * len(rest)
        return left + block + rest + [None] * (len(self.line) - used)

    def home_items(self, m: int) -> List[Item]:
        """Get the resting arrangement."""
        return self.target_items(m)


def slot_starts(items: Sequence[Item]) -> List[int]:
    """Get the first slot of every item."""
    starts, slot = [], 0
    for item in items:
        starts.append(slot)
        slot += 1 if item is None else 2
    return starts


def branch_windows(analysis: TreeAnalysis, with_ancilla: bool) -> List[BranchWindow]:
    """Get every feasible window, forward orientation before reverse."""
    path = analysis.longest_path
    on_path = set(path)
    tree = analysis.tree
    windows = []
    for j in range(1, len(path) - 1):
        off_path = [v for v in tree.neighbors(path[j]) if v not in on_path]
        if not off_path:
            continue
        for line, g in ((path, j), (path[::-1], len(path) - 1 - j)):
            window = BranchWindow(tuple(line), g, off_path[0], with_ancilla)
            if window.feasible:
                windows.append(window)
    return windows


def best_window(analysis: TreeAnalysis, mode: Mode) -> Optional[BranchWindow]:
    """Get the window of largest capacity, the first one on ties."""
    windows = branch_windows(analysis, mode == Mode.MATCHGATE)
    if not windows:
        return None
    return max(windows, key=lambda w: (w.capacity, -windows.index(w)))


def leaf_pairs(analysis: TreeAnalysis, mode: Mode) -> List[Pair]:
    """
    Pair the leaves by ascending index.

    In XY mode only leaves of the same colour are paired, so that every
    pair sits at even distance.
    """
    if mode == Mode.MATCHGATE:
        classes = [list(analysis.leaves)]
    else:
        colours = colouring(analysis.tree)
        classes = [[v for v in analysis.leaves if colours[v] == c] for c in (0, 1)]
    pairs = []
    for leaves in classes:
        pairs += [(leaves[k], leaves[k + 1]) for k in range(0, len(leaves) - 1, 2)]
    return sorted(pairs)


@dataclass(frozen=True)
class Layout:
    """Represent the placement of m logical qubits on the physical graph."""

    graph: Graph
    tree: Graph
    strategy: Strategy
    mode: Mode
    pairs: Tuple[Pair, ...]
    ancillas: FrozenSet[int]
    unused: FrozenSet[int]
    capacity: int
    longest_path: int
    window: Optional[BranchWindow] = None
    frames: Tuple[int, ...] = ()

    @property
    def encoding(self) -> Encoding:
        """Get the encoding."""
        return ENCODINGS[self.mode]

    @property
    def n_physical(self) -> int:
        """Get the number of physical qubits."""
        return self.graph.n

    @property
    def n_logical(self) -> int:
        """Get the number of logical qubits."""
        return len(self.pairs)

    @property
    def preparation(self) -> Tuple[int, ...]:
        """Get the vertices that receive X when preparing the encoded zero state."""
        if self.encoding == Encoding.EVEN:
            return ()
        return tuple(sorted(second for _, second in self.pairs))

    @property
    def hamiltonian_set(self) -> Optional[str]:
        """Get the effective generator set realised in XY mode."""
        if self.mode == Mode.MATCHGATE:
            return None
        return "B" if self.frames and all(self.frames) else "A"

    @property
    def discarded_fraction(self) -> float:
        """Get the fraction of physical qubits not holding logical content."""
        return 1 - 2 * self.n_logical / self.n_physical

    def encoded_indices(self) -> np.ndarray:
        """Get the physical basis index of every logical basis state."""
        m, n = self.n_logical, self.n_physical
        indices = np.zeros(2**m, dtype=np.int64)
        for x in range(2**m):
            bits = [0] * n
            for logical, (first, second) in enumerate(self.pairs):
                value = (x >> (m - 1 - logical)) & 1
                bits[first] = value
                bits[second] = value if self.encoding == Encoding.EVEN else 1 - value
            indices[x] = int("".join(map(str, bits)), 2)
        return indices


def path_branch_capacity(analysis: TreeAnalysis, mode: Mode) -> int:
    """Get the capacity of the path-branch strategy."""
    window = best_window(analysis, mode)
    return 0 if window is None else window.capacity


def leaf_capacity(analysis: TreeAnalysis, mode: Mode) -> int:
    """Get the capacity of the leaf-routing strategy."""
    return len(leaf_pairs(analysis, mode))


def _prefer_path(analysis: TreeAnalysis, n: int, mode: Mode) -> bool:
    """Decide between the longest path and the leaves."""
    root = math.sqrt(n)
    path_capacity = path_branch_capacity(analysis, mode)
    if analysis.p <= root or path_capacity == 0:
        return False
    if analysis.l > root and leaf_capacity(analysis, mode) > path_capacity:
        return False
    return True


def plan_layout(g: Graph, mode: Mode, m: Optional[int] = None) -> Layout:
    """
    Choose the strategy for a graph and place m logical qubits.

    :param g: a connected graph that is neither a path nor a cycle.
    :param mode: the compilation target.
    :param m: the number of logical qubits, the capacity by default.
    :return: the layout.
    """
    graph_class = classify(g)
    if graph_class != GraphClass.OTHER:
        raise UnsupportedGraph(
            f"graph is a {graph_class.value}; simulate it classically instead"
        )
    tree = spanning_tree_with_branch(g)
    analysis = tree_analysis(tree)
    use_path = _prefer_path(analysis, g.n, mode)
    strategy = STRATEGIES[(mode, use_path)]
    if use_path:
        layout = _path_branch_layout(g, analysis, mode, m)
    else:
        layout = _leaf_layout(g, analysis, mode, m)
    _logger.info(
        f"{strategy.value}: n={g.n}, l={analysis.l}, p={analysis.p}, "
        f"capacity={layout.capacity}, logical={layout.n_logical}"
    )
    return layout


def _ensure_capacity(m: int, capacity: int) -> None:
    """Raise CapacityExceeded when m logical qubits do not fit."""
    if m > capacity:
        raise CapacityExceeded(
            f"{m} logical qubits requested, the layout hosts {capacity}"
        )


def _path_branch_layout(
    g: Graph, analysis: TreeAnalysis, mode: Mode, m: Optional[int]
) -> Layout:
    """Place pairs along the working line."""
    window = best_window(analysis, mode)
    assert window is not None  # nosec
    m = window.capacity if m is None else m
    _ensure_capacity(m, window.capacity)
    items = window.home_items(m)
    pairs: List[Pair] = [(0, 0)] * m
    for item, start in zip(items, slot_starts(items)):
        if item is not None:
            pairs[item] = (window.vertex(start), window.vertex(start + 1))
    ancillas = {window.beta}
    if mode == Mode.MATCHGATE:
        ancillas.add(window.vertex(window.g - 1))
    occupied = {v for pair in pairs for v in pair} | ancillas
    _logger.debug(f"branch vertex {window.vertex(window.g)}, beta {window.beta}")
    return Layout(
        graph=g,
        tree=analysis.tree,
        strategy=STRATEGIES[(mode, True)],
        mode=mode,
        pairs=tuple(pairs),
        ancillas=frozenset(ancillas),
        unused=frozenset(set(range(g.n)) - occupied),
        capacity=window.capacity,
        longest_path=analysis.p,
        window=window,
        frames=(0,) * m,
    )


def _leaf_layout(
    g: Graph, analysis: TreeAnalysis, mode: Mode, m: Optional[int]
) -> Layout:
    """Place pairs on the leaves, internal vertices serving as ancillas."""
    candidates = leaf_pairs(analysis, mode)
    m = len(candidates) if m is None else m
    _ensure_capacity(m, len(candidates))
    pairs = candidates[:m]
    leaves = set(analysis.leaves)
    paired = {v for pair in pairs for v in pair}
    return Layout(
        graph=g,
        tree=analysis.tree,
        strategy=STRATEGIES[(mode, False)],
        mode=mode,
        pairs=tuple(pairs),
        ancillas=frozenset(set(range(g.n)) - leaves),
        unused=frozenset(leaves - paired),
        capacity=len(candidates),
        longest_path=analysis.p,
        frames=(1 if mode == Mode.XY else 0,) * m,
    )


def choose_strategy(g: Graph, mode: Mode = Mode.MATCHGATE) -> Tuple[Strategy, Layout]:
    """Pick the strategy of a graph and its full-capacity layout."""
    layout = plan_layout(g, mode)
    return layout.strategy, layout
