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

"""End-to-end tests for the matchgraph command line."""

import json
from pathlib import Path
from typing import Any, Dict, List

import pytest
from click.testing import CliRunner, Result

from packages.matchgraph.cli import CIRCUIT_FILE, REPORT_FILE, cli


pytestmark = pytest.mark.e2e

SAMPLES = Path(__file__).parent.parent / "samples"
GRAPHS = SAMPLES / "graphs"
CIRCUITS = SAMPLES / "circuits"
LOGICAL = SAMPLES / "logical"


def invoke(*args: Any) -> Result:
    """Run the CLI with string arguments."""
    return CliRunner().invoke(cli, [str(arg) for arg in args])


def last_json(result: Result) -> Dict[str, Any]:
    """Decode the last line the command printed."""
    return json.loads(result.output.strip().splitlines()[-1])


def assert_fails(result: Result, error: str, exit_code: int) -> None:
    """Check the error line and the exit code."""
    assert result.exit_code == exit_code, result.output
    assert last_json(result)["error"] == error


class TestClassify:
    """Tests for the classify command."""

    def test_path(self) -> None:
        """Paths are simulable."""
        result = invoke("classify", GRAPHS / "path5.txt")
        assert result.exit_code == 0, result.output
        assert last_json(result) == {"class": "path", "simulable": True}

    def test_cycle(self) -> None:
        """Cycles are simulable."""
        result = invoke("classify", GRAPHS / "cycle6.txt")
        assert last_json(result)["class"] == "cycle"

    def test_pendant_path(self) -> None:
        """The certificate and both strategies are reported."""
        result = invoke("classify", GRAPHS / "pendant_path9.txt")
        assert result.exit_code == 0, result.output
        assert last_json(result) == {
            "class": "other",
            "simulable": False,
            "n": 9,
            "l": 3,
            "p": 8,
            "bound": 15,
            "strategy": "path-branch",
            "capacity": 3,
            "xy_strategy": "xy-path-branch",
            "xy_capacity": 4,
        }

    def test_binary_tree(self) -> None:
        """Bushy trees route through leaves."""
        content = last_json(invoke("classify", GRAPHS / "binary15.txt"))
        assert content["strategy"] == "leaf-routing"
        assert content["capacity"] == 4

    def test_bad_graph(self, tmp_path: Path) -> None:
        """Malformed graph files exit with the parse code."""
        bad = tmp_path / "bad.txt"
        bad.write_text("vertices 3\n0 1\n", encoding="utf-8")
        assert_fails(invoke("classify", bad), "ParseError", 2)

    def test_disconnected(self, tmp_path: Path) -> None:
        """Disconnected graphs have their own code."""
        graph = tmp_path / "split.txt"
        graph.write_text("n 4\n0 1\n2 3\n", encoding="utf-8")
        assert_fails(invoke("classify", graph), "DisconnectedGraph", 3)

    def test_invalid_certificate(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """A certificate that does not validate is reported, not raised."""
        monkeypatch.setattr(
            "packages.matchgraph.graphs.strip_decomposition", lambda t: [[0]]
        )
        result = invoke("classify", GRAPHS / "star5.txt")
        assert_fails(result, "InvalidCertificate", 1)


class TestSimulate:
    """Tests for the simulate command."""

    def test_methods_agree_on_cycle(self) -> None:
        """The rotation simulator matches the dense statevector."""
        values: List[Dict[str, float]] = []
        for method in ("jw", "dense"):
            result = invoke(
                "simulate",
                "--method",
                method,
                "--circuit",
                CIRCUITS / "cycle6.json",
                "--input",
                SAMPLES / "inputs" / "cycle6.json",
            )
            assert result.exit_code == 0, result.output
            values.append(last_json(result))
        jw, dense = values
        assert list(jw) == [str(k) for k in range(6)]
        for k in jw:
            assert jw[k] == pytest.approx(dense[k], abs=1e-9)

    def test_observable(self) -> None:
        """Only the requested qubits are reported."""
        result = invoke(
            "simulate",
            "--circuit",
            CIRCUITS / "path5.json",
            "--input",
            "01010",
            "--observable",
            "Z:0,3",
        )
        assert result.exit_code == 0, result.output
        content = last_json(result)
        assert list(content) == ["0", "3"]
        assert all(-1 <= value <= 1 for value in content.values())

    def test_bad_observable(self) -> None:
        """Only Z observables are accepted."""
        result = invoke(
            "simulate",
            "--circuit",
            CIRCUITS / "path5.json",
            "--input",
            "01010",
            "--observable",
            "X:1",
        )
        assert_fails(result, "ParseError", 2)

    def test_input_size(self) -> None:
        """The input must cover every qubit."""
        result = invoke(
            "simulate", "--circuit", CIRCUITS / "path5.json", "--input", "010"
        )
        assert_fails(result, "ParseError", 2)

    def test_tree_needs_dense(self, tmp_path: Path) -> None:
        """Circuits on trees run on the dense oracle only."""
        circuit = tmp_path / "star.json"
        content = {
            "n": 5,
            "graph": str(GRAPHS / "star5.txt"),
            "gates": [{"name": "xy", "param": 0.5, "edge": [0, 1]}],
        }
        circuit.write_text(json.dumps(content), encoding="utf-8")
        args = ["simulate", "--circuit", circuit, "--input", "01000"]
        assert_fails(invoke(*args), "UnsupportedGraph", 4)
        result = invoke(*args, "--method", "dense")
        assert result.exit_code == 0, result.output
        assert len(last_json(result)) == 5


class TestCompileAndVerify:
    """Tests for the compile and verify commands."""

    @pytest.mark.parametrize(
        "graph, logical, mode, strategy",
        [
            ("star5.txt", "h_cz_h.json", "matchgate", "leaf-routing"),
            ("pendant_path9.txt", "h_cz_h.json", "matchgate", "path-branch"),
            ("pendant_path9.txt", "xy_rotations.json", "xy", "xy-path-branch"),
            ("star5.txt", "xy_rotations.json", "xy", "xy-leaf-routing"),
        ],
    )
    def test_round(
        self, tmp_path: Path, graph: str, logical: str, mode: str, strategy: str
    ) -> None:
        """Compiled circuits pass verification."""
        result = invoke(
            "compile",
            "--graph",
            GRAPHS / graph,
            "--logical",
            LOGICAL / logical,
            "--mode",
            mode,
            "--out",
            tmp_path / "out",
        )
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "out" / REPORT_FILE).read_text())
        assert report["strategy"] == strategy
        assert report["logical_qubits"] == 2
        result = invoke(
            "verify",
            "--graph",
            GRAPHS / graph,
            "--logical",
            LOGICAL / logical,
            "--compiled",
            tmp_path / "out" / CIRCUIT_FILE,
            "--mode",
            mode,
        )
        assert result.exit_code == 0, result.output
        content = last_json(result)
        assert content["passed"] is True
        assert content["fidelity"] == pytest.approx(1, abs=1e-9)

    def test_verify_wrong_logical(self, tmp_path: Path) -> None:
        """A circuit checked against another logical circuit fails."""
        out = tmp_path / "out"
        invoke(
            "compile",
            "--graph",
            GRAPHS / "star5.txt",
            "--logical",
            LOGICAL / "h_cz_h.json",
            "--out",
            out,
        )
        result = invoke(
            "verify",
            "--graph",
            GRAPHS / "star5.txt",
            "--logical",
            LOGICAL / "xy_rotations.json",
            "--compiled",
            out / CIRCUIT_FILE,
        )
        assert_fails(result, "VerificationFailed", 1)

    def test_xy_rejects_cz(self, tmp_path: Path) -> None:
        """The XY mode needs rotation primitives."""
        result = invoke(
            "compile",
            "--graph",
            GRAPHS / "star5.txt",
            "--logical",
            LOGICAL / "h_cz_h.json",
            "--mode",
            "xy",
            "--out",
            tmp_path,
        )
        assert_fails(result, "NonPrimitiveGate", 7)

    def test_path_not_compiled(self, tmp_path: Path) -> None:
        """Simulable graphs are refused."""
        result = invoke(
            "compile",
            "--graph",
            GRAPHS / "path5.txt",
            "--logical",
            LOGICAL / "h_cz_h.json",
            "--out",
            tmp_path,
        )
        assert_fails(result, "UnsupportedGraph", 4)

    def test_corrupted_circuit_fails(self, tmp_path: Path) -> None:
        """Dropping one compiled gate breaks verification."""
        out = tmp_path / "out"
        args = ["--graph", GRAPHS / "star5.txt", "--logical", LOGICAL / "h_cz_h.json"]
        assert invoke("compile", *args, "--out", out).exit_code == 0
        content = json.loads((out / CIRCUIT_FILE).read_text(encoding="utf-8"))
        content["gates"] = content["gates"][1:]
        corrupted = tmp_path / "corrupted.json"
        corrupted.write_text(json.dumps(content), encoding="utf-8")
        result = invoke("verify", *args, "--compiled", corrupted)
        assert result.exit_code == 1, result.output
        assert last_json(result)["error"] in {"LeakageExceeded", "VerificationFailed"}
