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

"""Tests for the configuration parameters."""

from pathlib import Path

import pytest
import yaml

from packages.matchgraph.errors import InvalidParams
from packages.matchgraph.models import PARAMS_FILE, Params, get_params


def _args() -> dict:
    """Read the shipped parameter arguments."""
    with open(PARAMS_FILE, "r", encoding="utf-8") as stream:
        return dict(yaml.safe_load(stream)["models"]["params"]["args"])


def test_defaults(fresh_params: None) -> None:
    """The shipped file holds the documented tolerances and caps."""
    params = get_params()
    assert params.unitarity_tolerance == 1e-12
    assert params.roundtrip_tolerance == 1e-10
    assert params.agreement_tolerance == 1e-9
    assert params.dense_max_qubits == 20
    assert params.verify_max_qubits <= params.dense_max_qubits
    assert params.float_digits == 15


def test_environment_override(
    fresh_params: None, monkeypatch: pytest.MonkeyPatch
) -> None:
    """Environment variables replace the seed and the caps."""
    monkeypatch.setenv("MATCHGRAPH_SEED", "7")
    monkeypatch.setenv("MATCHGRAPH_DENSE_MAX_QUBITS", "12")
    monkeypatch.setenv("MATCHGRAPH_VERIFY_MAX_QUBITS", "10")
    params = Params.load()
    assert params.seed == 7
    assert params.dense_max_qubits == 12
    assert params.verify_max_qubits == 10


def test_environment_override_not_integer(
    fresh_params: None, monkeypatch: pytest.MonkeyPatch
) -> None:
    """A non-integer override is rejected."""
    monkeypatch.setenv("MATCHGRAPH_SEED", "seven")
    with pytest.raises(InvalidParams, match="MATCHGRAPH_SEED"):
        Params.load()


def test_missing_key() -> None:
    """Every parameter is mandatory."""
    args = _args()
    del args["leakage_tolerance"]
    with pytest.raises(InvalidParams, match="leakage_tolerance"):
        Params(**args)


def test_wrong_type() -> None:
    """Integers are checked as integers."""
    args = _args()
    args["dense_max_qubits"] = "twenty"
    with pytest.raises(InvalidParams, match="dense_max_qubits"):
        Params(**args)


def test_verify_cap_above_dense_cap() -> None:
    """The verification cap cannot exceed the dense cap."""
    args = _args()
    args["verify_max_qubits"] = args["dense_max_qubits"] + 1
    with pytest.raises(InvalidParams, match="verify_max_qubits"):
        Params(**args)


def test_load_custom_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """A custom yaml file can be loaded."""
    for variable in (
        "MATCHGRAPH_SEED",
        "MATCHGRAPH_DENSE_MAX_QUBITS",
        "MATCHGRAPH_VERIFY_MAX_QUBITS",
    ):
        monkeypatch.delenv(variable, raising=False)
    args = _args()
    args["seed"] = 3
    file = tmp_path / "params.yaml"
    file.write_text(
        yaml.safe_dump({"models": {"params": {"args": args}}}), encoding="utf-8"
    )
    assert Params.load(file).seed == 3
