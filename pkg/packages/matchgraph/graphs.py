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

"""This module contains the interaction graphs and their tree analysis."""

import logging
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from packages.matchgraph.errors import (
    DisconnectedGraph,
    InvalidCertificate,
    IsAPath,
    NoBranchVertex,
    NotATree,
    ParseError,
)


_logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphClass(Enum):
    """Interaction graph classes"""

    PATH = "path"
    CYCLE = "cycle"
    OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """Represent an undirected simple interaction graph on vertices 0..n-1."""

    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self) -> None:
        """Validate the vertex count and the edge set."""
        if self.n < 1:
            raise ParseError(f"a graph needs at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if u == v:
                raise ParseError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParseError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise ParseError(f"edge ({u}, {v}) is not normalised")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph, rejecting loops and duplicate edges."""
        normalised = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if u == v:
                raise ParseError(f"loop at vertex {u}")
            if key in normalised:
                raise ParseError(f"duplicate edge ({u}, {v})")
            normalised.add(key)
        return cls(n=n, edges=frozenset(normalised))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build a graph from a networkx graph with integer nodes 0..n-1."""
        return cls.from_edges(graph.number_of_nodes(), graph.edges())

    def to_networkx(self) -> nx.Graph:
        """Get the networkx view of the graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(sorted(self.edges))
        return graph

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether u and v are adjacent."""
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> List[int]:
        """Get the sorted neighbours of v."""
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))

    def degrees(self) -> Dict[int, int]:
        """Get the degree of every vertex."""
        degrees = {v: 0 for v in range(self.n)}
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return degrees

    @classmethod
    def parse(cls, content: str) -> "Graph":
        """Parse the plain-text graph format."""
        lines = []
        for raw in content.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
        if not lines:
            raise ParseError("empty graph file")
        header = lines[0].split()
        if len(header) != 2 or header[0] != "n":
            raise ParseError(f"expected 'n <count>' header, got {lines[0]!r}")
        try:
            n = int(header[1])
            edges = []
            for line in lines[1:]:
                fields = line.split()
                if len(fields) != 2:
                    raise ParseError(f"expected 'u v', got {line!r}")
                edges.append((int(fields[0]), int(fields[1])))
        except ValueError as e:
            raise ParseError(f"non-integer field in graph file: {e}") from e
        return cls.from_edges(n, edges)

    @classmethod
    def load(cls, file: Path) -> "Graph":
        """Load from file."""
        return cls.parse(file.read_text(encoding="utf-8"))

    def compile(self) -> str:
        """Compile to the plain-text graph format."""
        lines = [f"n {self.n}"] + [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TreeAnalysis:
    """Represent the structures of a spanning tree that drive compilation."""

    tree: Graph
    longest_path: Tuple[int, ...]
    leaves: Tuple[int, ...]
    branch_points: Tuple[int, ...]

    @property
    def l(self) -> int:  # noqa: E743
        """Get the number of leaves."""
        return len(self.leaves)

    @property
    def p(self) -> int:
        """Get the number of vertices on the longest path."""
        return len(self.longest_path)


def path_graph(n: int) -> Graph:
    """Get the path 0-1-...-(n-1)."""
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    """Get the cycle 0-1-...-(n-1)-0."""
    return Graph.from_networkx(nx.cycle_graph(n))


def star_graph(leaves: int) -> Graph:
    """Get the star with centre 0."""
    return Graph.from_networkx(nx.star_graph(leaves))


def binary_tree(levels: int) -> Graph:
    """Get the complete binary tree with the given number of levels."""
    return Graph.from_networkx(nx.balanced_tree(2, levels - 1))


def spider_graph(legs: int, length: int) -> Graph:
    """Get a centre 0 with `legs` paths of `length` vertices attached."""
    edges = []
    vertex = 1
    for _ in range(legs):
        previous = 0
        for _ in range(length):
            edges.append((previous, vertex))
            previous = vertex
            vertex += 1
    return Graph.from_edges(vertex, edges)


def pendant_path_graph(n: int, attach: int) -> Graph:
    """Get the path 0..n-2 with vertex n-1 joined to the path vertex `attach`."""
    edges = [(v, v + 1) for v in range(n - 2)] + [(attach, n - 1)]
    return Graph.from_edges(n, edges)


def classify(g: Graph) -> GraphClass:
    """Classify a connected graph as a path, a cycle, or neither."""
    if not nx.is_connected(g.to_networkx()):
        raise DisconnectedGraph(f"graph with n={g.n} is not connected")
    degrees = g.degrees().values()
    if len(g.edges) == g.n - 1 and max(degrees, default=0) <= 2:
        return GraphClass.PATH
    if all(d == 2 for d in degrees):
        return GraphClass.CYCLE
    return GraphClass.OTHER


def is_tree(g: Graph) -> bool:
    """Check whether the graph is a tree."""
    return len(g.edges) == g.n - 1 and nx.is_connected(g.to_networkx())


def _ensure_tree(t: Graph) -> None:
    """Raise unless the graph is a tree."""
    if not is_tree(t):
        raise NotATree(f"graph with n={t.n} and {len(t.edges)} edges is not a tree")


def spanning_tree_with_branch(g: Graph) -> Graph:
    """
    Get a spanning tree keeping every edge at the lowest-index branching vertex.

    :param g: a connected graph with a vertex of degree three or more.
    :return: the breadth-first spanning tree grown from that vertex.
    """
    degrees = g.degrees()
    branching = [v for v in range(g.n) if degrees[v] >= 3]
    if not branching:
        raise NoBranchVertex("every vertex has degree at most two")
    root = branching[0]
    visited = {root}
    edges = []
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for neighbor in g.neighbors(vertex):
            if neighbor not in visited:
                visited.add(neighbor)
                edges.append((vertex, neighbor))
                queue.append(neighbor)
    if len(visited) != g.n:
        raise DisconnectedGraph(f"graph with n={g.n} is not connected")
    _logger.debug(f"spanning tree grown from branching vertex {root}")
    return Graph.from_edges(g.n, edges)


def _farthest(tree: nx.Graph, source: int) -> int:
    """Get the farthest vertex from source, smallest index on ties."""
    distances = nx.single_source_shortest_path_length(tree, source)
    return max(distances, key=lambda v: (distances[v], -v))


def longest_path(t: Graph) -> Tuple[int, ...]:
    """Get a longest path of a tree, starting at its lower-index endpoint."""
    _ensure_tree(t)
    tree = t.to_networkx()
    start = _farthest(tree, 0)
    end = _farthest(tree, start)
    path = nx.shortest_path(tree, start, end)
    if path[0] > path[-1]:
        path.reverse()
    return tuple(path)


def leaves(t: Graph) -> Tuple[int, ...]:
    """Get the degree-one vertices."""
    return tuple(v for v, d in sorted(t.degrees().items()) if d == 1)


def branch_points(t: Graph) -> Tuple[int, ...]:
    """Get the vertices of degree three or more."""
    return tuple(v for v, d in sorted(t.degrees().items()) if d >= 3)


def tree_analysis(t: Graph) -> TreeAnalysis:
    """Analyse a tree."""
    return TreeAnalysis(
        tree=t,
        longest_path=longest_path(t),
        leaves=leaves(t),
        branch_points=branch_points(t),
    )


def strip_decomposition(t: Graph) -> List[List[int]]:
    """
    Delete leaf-to-branch strips until a path remains, then delete the path.

    :param t: a tree that is not a path.
    :return: the strips in deletion order; they partition the vertices.
    """
    _ensure_tree(t)
    if classify(t) == GraphClass.PATH:
        raise IsAPath(f"tree with n={t.n} is a path")
    remaining = t.to_networkx()
    strips: List[List[int]] = []
    while max(d for _, d in remaining.degree()) >= 3:
        leaf = min(v for v, d in remaining.degree() if d == 1)
        strip = [leaf]
        previous, current = leaf, next(iter(remaining.neighbors(leaf)))
        while remaining.degree(current) == 2:
            strip.append(current)
            previous, current = current, next(
                v for v in remaining.neighbors(current) if v != previous
            )
        remaining.remove_nodes_from(strip)
        strips.append(strip)
    ends = sorted(v for v, d in remaining.degree() if d <= 1)
    if remaining.number_of_nodes() == 1:
        strips.append(list(remaining.nodes()))
    else:
        strips.append(nx.shortest_path(remaining, ends[0], ends[-1]))
    _logger.debug(f"strip decomposition of {t.n}-vertex tree: {strips}")
    return strips


def size_certificate(t: Graph) -> Tuple[int, int, int, int]:
    """
    Certify the leaf/longest-path bound of a tree that is not a path.

    :param t: a tree that is not a path.
    :return: (n, l, p, (l - 2)(p - 1) + p), with n at most the last entry.
    """
    strips = strip_decomposition(t)
    analysis = tree_analysis(t)
    leaf_count, path_length = analysis.l, analysis.p
    bound = (leaf_count - 2) * (path_length - 1) + path_length
    covered = sorted(v for strip in strips for v in strip)
    if covered != list(range(t.n)) or len(strips) != leaf_count - 1:
        raise InvalidCertificate(f"strips {strips} do not partition the tree")
    if t.n > bound or max(leaf_count, path_length) <= math.sqrt(t.n):
        raise InvalidCertificate(f"bound violated: n={t.n}, l={leaf_count}")
    return t.n, leaf_count, path_length, bound


def path_order(g: Graph) -> Tuple[int, ...]:
    """Get the vertices of a path graph in walking order from its lower endpoint."""
    if g.n == 1:
        return (0,)
    start = min(v for v, d in g.degrees().items() if d == 1)
    return _walk(g, start)


def cycle_order(g: Graph) -> Tuple[int, ...]:
    """Get the vertices of a cycle graph walking from 0 to its smaller neighbour."""
    return _walk(g, 0)


def _walk(g: Graph, start: int) -> Tuple[int, ...]:
    """Walk a graph of maximum degree two without revisiting vertices."""
    order = [start]
    seen = {start}
    while True:
        step = [v for v in g.neighbors(order[-1]) if v not in seen]
        if not step:
            return tuple(order)
        order.append(step[0])
        seen.add(step[0])


def colouring(t: Graph) -> Dict[int, int]:
    """Get the two-colouring of a tree by distance parity from vertex 0."""
    distances = nx.single_source_shortest_path_length(t.to_networkx(), 0)
    return {v: d % 2 for v, d in distances.items()}


def tree_path(t: Graph, source: int, target: int) -> List[int]:
    """Get the unique path between two vertices of a tree."""
    return nx.shortest_path(t.to_networkx(), source, target)
