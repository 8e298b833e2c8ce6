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

"""Compilation of logical circuits into matchgate and XY circuits."""

from packages.matchgraph.compiler.core import (  # noqa: F401
    CompilationReport,
    Verification,
    compile,
    verify_compilation,
    xy_compile,
)
from packages.matchgraph.compiler.layout import (  # noqa: F401
    Layout,
    Mode,
    Strategy,
    choose_strategy,
    plan_layout,
)
from packages.matchgraph.compiler.logical import LogicalCircuit  # noqa: F401
