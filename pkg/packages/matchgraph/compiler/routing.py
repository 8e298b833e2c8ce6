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

"""This module contains the transport of logical content along the tree."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set, Tuple, cast

from packages.matchgraph.compiler.layout import (
    BranchWindow,
    Encoding,
    Item,
    Layout,
    slot_starts,
)
from packages.matchgraph.errors import (
    BlockedRoute,
    PathNotClear,
    RoutingError,
)
from packages.matchgraph.graphs import tree_path
from packages.matchgraph.matchgates import Matchgate, fswap, iswap, iswap_dagger


_logger = logging.getLogger(__name__)

SlotPair = Tuple[int, int]


def exchange_gate(encoding: Encoding, u: int, v: int, sign: int = 1) -> Matchgate:
    """Get the exchange gate of an encoding: f-SWAP, or i-SWAP to the power sign."""
    if encoding == Encoding.EVEN:
        return fswap(u, v)
    return iswap(u, v) if sign > 0 else iswap_dagger(u, v)


def item_exchange(left: Item, right: Item, start: int) -> List[SlotPair]:
    """
    Get the slot exchanges, in time order, that swap two adjacent items.

    Pairs keep their orientation and no pair token crosses its partner.
    """
    if left is None and right is None:
        return []
    if right is None:
        return [(start + 1, start + 2), (start, start + 1)]
    if left is None:
        return [(start, start + 1), (start + 1, start + 2)]
    return [
        (start + 1, start + 2),
        (start, start + 1),
        (start + 2, start + 3),
        (start + 1, start + 2),
    ]


def arrange(current: Sequence[Item], target: Sequence[Item]) -> List[SlotPair]:
    """
    Sort the items of a line into a target order by adjacent exchanges.

    :param current: the items now on the line.
    :param target: the wanted items, the same multiset.
    :return: the slot exchanges in time order.
    """
    if sorted(current, key=str) != sorted(target, key=str):
        raise BlockedRoute(f"cannot arrange {list(current)} into {list(target)}")
    items = list(current)
    exchanges: List[SlotPair] = []
    for index, wanted in enumerate(target):
        position = next(p for p in range(index, len(items)) if items[p] == wanted)
        while position > index:
            start = slot_starts(items)[position - 1]
            exchanges += item_exchange(items[position - 1], items[position], start)
            items[position - 1], items[position] = items[position], items[position - 1]
            position -= 1
    return exchanges


@dataclass
class Placement:
    """Represent the items currently resting on the working line."""

    layout: Layout
    items: List[Item] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Start from the home arrangement."""
        if self.layout.window is None:
            raise RoutingError("placements track path-branch layouts only")
        if not self.items:
            self.items = self.home()

    @property
    def window(self) -> BranchWindow:
        """Get the working line."""
        return cast(BranchWindow, self.layout.window)

    def home(self) -> List[Item]:
        """Get the home arrangement."""
        return self.window.home_items(self.layout.n_logical)

    def at_home(self) -> bool:
        """Check that every pair rests on its home slots."""
        return self.items == self.home()

    def pair_slots(self, logical: int) -> SlotPair:
        """Get the slots of a pair."""
        position = self.items.index(logical)
        start = slot_starts(self.items)[position]
        return start, start + 1

    def pair_vertices(self, logical: int) -> Tuple[int, int]:
        """Get the current (first, second) vertices of a pair."""
        first, second = self.pair_slots(logical)
        return self.window.vertex(first), self.window.vertex(second)

    def move_to(self, target: Sequence[Item]) -> List[Matchgate]:
        """Rearrange the line and get the exchange gates."""
        exchanges = arrange(self.items, target)
        self.items = list(target)
        vertex = self.window.vertex
        return [
            exchange_gate(self.layout.encoding, vertex(s), vertex(t))
            for s, t in exchanges
        ]

    def gather(self, i: int, j: int) -> List[Matchgate]:
        """Bring pairs i and j into the gadget block."""
        return self.move_to(self.window.target_items(self.layout.n_logical, i, j))

    def restore(self) -> List[Matchgate]:
        """Send every pair back home."""
        return self.move_to(self.home())


def route_logical(
    layout: Layout, logical: int, destination: Tuple[int, int]
) -> List[Matchgate]:
    """
    Move a pair from its home to a destination pair of line vertices.

    :param layout: a path-branch layout.
    :param logical: the logical qubit to move.
    :param destination: the (first, second) vertices, consecutive along the line.
    :return: exchange gates moving the pair; other pairs shift to make room.
    """
    placement = Placement(layout)
    line = placement.window.line
    first, second = destination
    if first not in line or second not in line:
        raise BlockedRoute(f"destination {destination} is not on the working line")
    slot = line.index(first)
    if slot + 1 >= len(line) or line[slot + 1] != second:
        raise BlockedRoute(f"destination {destination} is not a line step")
    remaining = [item for item in placement.items if item != logical]
    filled, position = 0, 0
    while filled < slot and position < len(remaining):
        filled += 1 if remaining[position] is None else 2
        position += 1
    if filled != slot:
        raise BlockedRoute(f"slot {slot} splits a resident pair")
    target = remaining[:position] + [logical] + remaining[position:]
    gates = placement.move_to(target)
    _logger.debug(f"logical {logical} moved to {destination} with {len(gates)} gates")
    return gates


def occupied_vertices(layout: Layout) -> Set[int]:
    """Get the vertices holding pair tokens at home."""
    return {v for pair in layout.pairs for v in pair}


def alternating_signs(hops: int, start: Optional[int] = None) -> List[int]:
    """
    Get alternating i-SWAP powers for a run of hops.

    An odd run opens with the inverse, an even run with i-SWAP.
    """
    if start is None:
        start = -1 if hops % 2 else 1
    return [start * (-1) ** k for k in range(hops)]


def route_through_ancillas(
    layout: Layout,
    vertex: int,
    destination: int,
    occupied: Optional[Set[int]] = None,
) -> List[Matchgate]:
    """
    Hop the token of a vertex along the tree through |0> ancillas.

    :param layout: the layout; its encoding picks the exchange gate.
    :param vertex: the vertex whose token moves.
    :param destination: the vertex the token ends on.
    :param occupied: the vertices not holding |0>, the home pairs by default.
    :return: one exchange gate per hop.
    """
    occupied = occupied_vertices(layout) if occupied is None else occupied
    path = tree_path(layout.tree, vertex, destination)
    blocked = [v for v in path[1:] if v in occupied]
    if blocked:
        raise PathNotClear(f"vertices {blocked} between {vertex} and {destination}")
    signs = alternating_signs(len(path) - 1)
    return [
        exchange_gate(layout.encoding, path[k], path[k + 1], signs[k])
        for k in range(len(path) - 1)
    ]


@dataclass(frozen=True)
class Leg:
    """Represent a token hopped next to a meeting point and back."""

    outbound: Tuple[Matchgate, ...]
    inbound: Tuple[Matchgate, ...]
    end: int


def leg(layout: Layout, vertex: int, toward: int, occupied: Set[int]) -> Leg:
    """
    Hop a token toward a vertex, stopping on its last neighbour, and the way back.

    The return continues the sign alternation of the outbound run.
    """
    path = tree_path(layout.tree, vertex, toward)
    stops = path[:-1]
    blocked = [v for v in stops[1:] if v in occupied]
    if blocked:
        raise PathNotClear(f"vertices {blocked} between {vertex} and {toward}")
    hops = len(stops) - 1
    signs = alternating_signs(hops)
    back = alternating_signs(hops, -signs[-1]) if hops else []
    outbound = tuple(
        exchange_gate(layout.encoding, stops[k], stops[k + 1], signs[k])
        for k in range(hops)
    )
    inbound = tuple(
        exchange_gate(layout.encoding, stops[k], stops[k + 1], back[hops - 1 - k])
        for k in reversed(range(hops))
    )
    return Leg(outbound, inbound, stops[-1])


def transposition(layout: Layout, first: int, second: int) -> List[Matchgate]:
    """
    Exchange the tokens of two vertices through the |0> vertices between them.

    The first token hops next to the second, one exchange involves both tokens,
    and the hops are undone in reverse. Even encoding only.
    """
    if layout.encoding != Encoding.EVEN:
        raise RoutingError("transpositions need the even encoding")
    path = tree_path(layout.tree, first, second)
    hops = route_through_ancillas(layout, first, path[-2])
    meet = fswap(path[-2], second)
    return hops + [meet] + [gate.inverse() for gate in reversed(hops)]
