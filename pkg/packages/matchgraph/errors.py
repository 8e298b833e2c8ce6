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

"""This module contains the exceptions raised by the matchgraph package."""


class MatchgraphError(Exception):
    """Base class of every error raised by the package."""

    exit_code = 11


class InvalidParams(MatchgraphError):
    """A configuration value is missing or has the wrong type."""

    exit_code = 10


class ParseError(MatchgraphError):
    """An input file could not be parsed."""

    exit_code = 2


class DisconnectedGraph(MatchgraphError):
    """The interaction graph is not connected."""

    exit_code = 3


class GraphMismatch(MatchgraphError):
    """The graph does not have the shape an operation requires."""

    exit_code = 4


class UnsupportedGraph(GraphMismatch):
    """The requested method does not apply to this graph class."""


class NoBranchVertex(GraphMismatch):
    """No vertex of degree three or more exists."""


class NotATree(GraphMismatch):
    """The graph contains a cycle."""


class IsAPath(GraphMismatch):
    """The tree is a path."""


class NotNearestNeighbor(GraphMismatch):
    """The gate does not act on consecutive qubits of the path order."""


class NotWrapEdge(GraphMismatch):
    """The gate does not act on the closing edge of the cycle order."""


class TooManyQubits(MatchgraphError):
    """The dense oracle cannot hold the requested number of qubits."""

    exit_code = 5


class CapacityExceeded(MatchgraphError):
    """The layout cannot host the requested number of logical qubits."""

    exit_code = 6


class NonPrimitiveGate(MatchgraphError):
    """The XY compiler was given a gate outside its primitive set."""

    exit_code = 7


class GateError(MatchgraphError):
    """A gate or a gate target is invalid."""

    exit_code = 8


class NotUnitary(GateError):
    """The matrix is not unitary within tolerance."""


class DeterminantMismatch(GateError):
    """The parity blocks of a matchgate have different determinants."""


class UnknownGate(GateError):
    """No named gate exists with this name."""


class MissingParameter(GateError):
    """The named gate needs a parameter."""


class TargetOutOfRange(GateError):
    """A gate target is not a qubit of the register."""


class DuplicateTarget(GateError):
    """A gate names the same qubit twice."""


class IndexOutOfRange(GateError):
    """A qubit or Majorana index is out of range."""


class SizeMismatch(GateError):
    """Two objects that must describe the same register differ in size."""


class RoutingError(MatchgraphError):
    """A transport of logical content could not be planned."""

    exit_code = 9


class BlockedRoute(RoutingError):
    """The destination cannot be reached along the working line."""


class PathNotClear(RoutingError):
    """A vertex on the transport path does not hold an ancilla."""


class AncillaDirty(RoutingError):
    """A gadget ancilla is occupied when the gadget starts."""


class SameLogicalQubit(RoutingError):
    """A two-qubit logical gate names the same logical qubit twice."""


class VerificationFailed(MatchgraphError):
    """A compiled circuit does not reproduce its logical circuit."""

    exit_code = 1


class LeakageExceeded(VerificationFailed):
    """A circuit moved amplitude out of the code space."""


class InvalidCertificate(VerificationFailed):
    """A size certificate of a tree does not validate."""
