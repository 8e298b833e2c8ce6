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

"""Shared fixtures of the matchgraph tests."""

from typing import Iterator

import numpy as np
import pytest

from packages.matchgraph.graphs import (
    Graph,
    binary_tree,
    pendant_path_graph,
    spider_graph,
    star_graph,
)
from packages.matchgraph.models import get_params


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator shared by the randomised tests."""
    return np.random.default_rng(get_params().seed)


@pytest.fixture
def fresh_params() -> Iterator[None]:
    """Drop the cached parameters before and after a test."""
    get_params.cache_clear()
    yield
    get_params.cache_clear()


@pytest.fixture
def pendant_path() -> Graph:
    """Path 0..7 with vertex 8 hanging off vertex 2."""
    return pendant_path_graph(9, 2)


@pytest.fixture
def star5() -> Graph:
    """Star with four leaves."""
    return star_graph(4)


@pytest.fixture
def binary15() -> Graph:
    """Complete binary tree with four levels."""
    return binary_tree(4)


@pytest.fixture
def spider13() -> Graph:
    """Three legs of four vertices around a centre."""
    return spider_graph(3, 4)
