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

"""This module contains the entangling gadgets and the single-qubit legs."""

import logging
from typing import List, Optional

import numpy as np

from packages.matchgraph.compiler.layout import BranchWindow, Layout, slot_starts
from packages.matchgraph.compiler.routing import (
    Placement,
    leg,
    occupied_vertices,
    transposition,
)
from packages.matchgraph.errors import AncillaDirty, SameLogicalQubit
from packages.matchgraph.graphs import tree_path
from packages.matchgraph.matchgates import (
    Matchgate,
    fswap,
    g_aa,
    iswap,
    iswap_dagger,
    xy,
)


_logger = logging.getLogger(__name__)


def _distinct(i: int, j: int) -> None:
    """Reject a two-qubit gate on a single logical qubit."""
    if i == j:
        raise SameLogicalQubit(f"logical qubit {i} named twice")


def branch_switch(window: BranchWindow) -> List[Matchgate]:
    """
    Get the eleven f-SWAPs that act as CZ on the two pairs of the gadget block.

    Slot g - 1 and beta hold |0>; the pairs occupy slots g..g+3.
    """
    alpha, one, two, three, four = (window.vertex(window.g + k) for k in range(-1, 4))
    beta = window.beta
    return [
        fswap(two, three),
        fswap(three, four),
        fswap(alpha, one),
        fswap(one, two),
        fswap(beta, one),
        fswap(alpha, one),
        fswap(one, two),
        fswap(beta, one),
        fswap(one, two),
        fswap(three, four),
        fswap(two, three),
    ]


def branch_xz(window: BranchWindow, a: float) -> List[Matchgate]:
    """
    Get the i-SWAP sequence that acts as exp(i a X Z) on the gadget block.

    The first pair sits on slots g - 1 and g, the second on g + 1 and g + 2;
    beta holds |0>.
    """
    one, two, three, four = (window.vertex(window.g + k) for k in range(-1, 3))
    five = window.beta
    return [
        iswap_dagger(two, five),
        iswap_dagger(two, three),
        iswap_dagger(three, four),
        iswap(two, five),
        xy(a, one, two),
        iswap_dagger(two, five),
        iswap(three, four),
        iswap(two, three),
        iswap(two, five),
    ]


def _check_ancillas(placement: Placement) -> None:
    """Raise AncillaDirty unless the gadget ancillas hold |0>."""
    window = placement.window
    pair_vertices = {
        v for i in placement.items if i is not None for v in placement.pair_vertices(i)
    }
    if window.beta in pair_vertices:
        raise AncillaDirty(f"ancilla {window.beta} holds a pair")
    if window.with_ancilla:
        slot = window.g - 1
        starts = slot_starts(placement.items)
        index = max(k for k, start in enumerate(starts) if start <= slot)
        if placement.items[index] is not None:
            raise AncillaDirty(f"ancilla {window.vertex(slot)} holds a pair")


def compile_cz_branch(
    layout: Layout, i: int, j: int, placement: Optional[Placement] = None
) -> List[Matchgate]:
    """
    Get the gates of CZ between pairs i and j on a path-branch layout.

    :param layout: a path-branch layout.
    :param i: the first logical qubit.
    :param j: the second logical qubit.
    :param placement: the current line arrangement, home by default.
    :return: routing in, the switch, routing back home.
    """
    _distinct(i, j)
    placement = Placement(layout) if placement is None else placement
    gates = placement.gather(i, j)
    _check_ancillas(placement)
    gates += branch_switch(placement.window)
    gates += placement.restore()
    return gates


def compile_xz_branch(
    layout: Layout, a: float, i: int, j: int, placement: Optional[Placement] = None
) -> List[Matchgate]:
    """Get the gates of exp(i a X_i Z_j) on an XY path-branch layout."""
    _distinct(i, j)
    placement = Placement(layout) if placement is None else placement
    gates = placement.gather(i, j)
    _check_ancillas(placement)
    gates += branch_xz(placement.window, a)
    gates += placement.restore()
    return gates


def one_qubit_branch(placement: Placement, u: np.ndarray, logical: int) -> Matchgate:
    """Get G(U, U) on a resting pair."""
    first, second = placement.pair_vertices(logical)
    return g_aa(u, first, second)


def xrot_branch(placement: Placement, a: float, logical: int) -> Matchgate:
    """Get xy(a) on a resting odd-encoded pair."""
    first, second = placement.pair_vertices(logical)
    return xy(a, first, second)


def compile_cz_leaf(layout: Layout, i: int, j: int) -> List[Matchgate]:
    """
    Get the gates of CZ between two leaf pairs.

    Three transpositions (A1 B1), (A1 A2), (A2 B1) make one cross exchange each,
    routed through the |0> vertices between the leaves; the two tokens of pair i
    end swapped, which leaves its logical state alone.
    """
    _distinct(i, j)
    (a1, a2), (b1, _) = layout.pairs[i], layout.pairs[j]
    gates: List[Matchgate] = []
    for first, second in ((a1, b1), (a1, a2), (a2, b1)):
        gates += transposition(layout, first, second)
    return gates


def one_qubit_leaf(layout: Layout, u: np.ndarray, logical: int) -> List[Matchgate]:
    """Get G(U, U) applied after hopping the first token next to the second."""
    first, second = layout.pairs[logical]
    route = leg(layout, first, second, occupied_vertices(layout))
    return [*route.outbound, g_aa(u, route.end, second), *route.inbound]


def xrot_leaf(layout: Layout, a: float, logical: int) -> List[Matchgate]:
    """Get xy(a) applied after hopping the first token next to the second."""
    first, second = layout.pairs[logical]
    route = leg(layout, first, second, occupied_vertices(layout))
    return [*route.outbound, xy(a, route.end, second), *route.inbound]


def median(layout: Layout, x: int, y: int, z: int) -> int:
    """Get the vertex shared by the three tree paths between x, y and z."""
    shared = (
        set(tree_path(layout.tree, x, y))
        & set(tree_path(layout.tree, x, z))
        & set(tree_path(layout.tree, y, z))
    )
    return shared.pop()


def compile_xz_junction(layout: Layout, a: float, i: int, j: int) -> List[Matchgate]:
    """
    Get the gates of exp(i a Y_i Z_j) on an XY leaf layout.

    The two tokens of pair i and the first token of pair j hop to the neighbours
    of their median, where the i-SWAP sequence runs before they hop back.
    """
    _distinct(i, j)
    (a1, a2), (b1, _) = layout.pairs[i], layout.pairs[j]
    centre = median(layout, a1, a2, b1)
    occupied = occupied_vertices(layout)
    legs = [leg(layout, vertex, centre, occupied) for vertex in (a1, a2, b1)]
    u1, u5, u4 = (route.end for route in legs)
    _logger.debug(f"junction at {centre} with arms {u1}, {u5}, {u4}")
    gates: List[Matchgate] = [gate for route in legs for gate in route.outbound]
    gates += [
        iswap_dagger(centre, u4),
        iswap(centre, u5),
        xy(a, u1, centre),
        iswap_dagger(centre, u5),
        iswap(centre, u4),
    ]
    gates += [gate for route in reversed(legs) for gate in route.inbound]
    return gates
