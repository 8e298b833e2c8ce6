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

"""This module contains the configuration parameters of the matchgraph package."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Type

import yaml
from dotenv import load_dotenv

from packages.matchgraph.errors import InvalidParams


PARAMS_FILE = Path(__file__).parent / "params.yaml"

ENV_OVERRIDES = {
    "MATCHGRAPH_SEED": "seed",
    "MATCHGRAPH_DENSE_MAX_QUBITS": "dense_max_qubits",
    "MATCHGRAPH_VERIFY_MAX_QUBITS": "verify_max_qubits",
}


class Params:
    """Parameters."""

    def __init__(self, **kwargs: Any) -> None:
        """Initialize the parameters object."""
        self.unitarity_tolerance = self._ensure("unitarity_tolerance", kwargs, float)
        self.roundtrip_tolerance = self._ensure("roundtrip_tolerance", kwargs, float)
        self.agreement_tolerance = self._ensure("agreement_tolerance", kwargs, float)
        self.leakage_tolerance = self._ensure("leakage_tolerance", kwargs, float)
        self.dense_max_qubits = self._ensure("dense_max_qubits", kwargs, int)
        self.verify_max_qubits = self._ensure("verify_max_qubits", kwargs, int)
        self.float_digits = self._ensure("float_digits", kwargs, int)
        self.seed = self._ensure("seed", kwargs, int)
        if self.verify_max_qubits > self.dense_max_qubits:
            raise InvalidParams(
                f"verify_max_qubits={self.verify_max_qubits} exceeds "
                f"dense_max_qubits={self.dense_max_qubits}"
            )

    @staticmethod
    def _ensure(key: str, kwargs: Dict[str, Any], type_: Type) -> Any:
        """Get and type-check a mandatory parameter."""
        if key not in kwargs:
            raise InvalidParams(f"'{key}' required, but it is not set")
        value = kwargs[key]
        if type_ is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if not isinstance(value, type_) or isinstance(value, bool):
            raise InvalidParams(
                f"'{key}' must be a {type_.__name__}, got {type(value).__name__}"
            )
        return value

    @classmethod
    def load(cls, file: Optional[Path] = None) -> "Params":
        """Load the parameters from the yaml file, applying environment overrides."""
        load_dotenv()
        with open(file or PARAMS_FILE, "r", encoding="utf-8") as stream:
            config = yaml.safe_load(stream)
        args = dict(config["models"]["params"]["args"])
        for variable, key in ENV_OVERRIDES.items():
            value = os.getenv(variable)
            if value:
                try:
                    args[key] = int(value)
                except ValueError as e:
                    raise InvalidParams(
                        f"{variable} must be an integer, got {value!r}"
                    ) from e
        return cls(**args)


@lru_cache(maxsize=None)
def get_params() -> Params:
    """Get the process-wide parameters."""
    return Params.load()
