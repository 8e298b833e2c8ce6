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

"""This module contains Pauli strings with exact phase bookkeeping."""

from dataclasses import dataclass
from functools import reduce
from typing import Tuple

import numpy as np

from packages.matchgraph.errors import SizeMismatch


LETTERS = "IXYZ"

MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# single-qubit products as (letter, power of i)
PRODUCTS = {
    ("X", "Y"): ("Z", 1),
    ("Y", "Z"): ("X", 1),
    ("Z", "X"): ("Y", 1),
    ("Y", "X"): ("Z", 3),
    ("Z", "Y"): ("X", 3),
    ("X", "Z"): ("Y", 3),
}


def _multiply_letters(left: str, right: str) -> Tuple[str, int]:
    """Multiply two single-qubit Paulis."""
    if left == "I":
        return right, 0
    if right == "I":
        return left, 0
    if left == right:
        return "I", 0
    return PRODUCTS[(left, right)]


@dataclass(frozen=True)
class PauliString:
    """Represent i**power times a tensor product of single-qubit Paulis."""

    letters: str
    power: int = 0

    def __post_init__(self) -> None:
        """Normalise the phase power and check the letters."""
        if set(self.letters) - set(LETTERS):
            raise ValueError(f"invalid Pauli letters {self.letters!r}")
        object.__setattr__(self, "power", self.power % 4)

    @property
    def n(self) -> int:
        """Get the number of qubits."""
        return len(self.letters)

    @property
    def phase(self) -> complex:
        """Get the phase as one of 1, i, -1, -i."""
        return (1, 1j, -1, -1j)[self.power]

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Multiply two Pauli strings on the same register."""
        if self.n != other.n:
            raise SizeMismatch(f"cannot multiply {self.n} and {other.n} qubit strings")
        letters = []
        power = self.power + other.power
        for left, right in zip(self.letters, other.letters):
            letter, extra = _multiply_letters(left, right)
            letters.append(letter)
            power += extra
        return PauliString("".join(letters), power)

    def to_matrix(self) -> np.ndarray:
        """Get the dense matrix, qubit 0 being the first tensor factor."""
        dense = reduce(np.kron, (MATRICES[letter] for letter in self.letters))
        return self.phase * dense

    def __str__(self) -> str:
        """Get a readable form such as -i ZYI."""
        return f"{('', 'i ', '-', '-i ')[self.power]}{self.letters}"
