# Copyright (c) 2026 Ronald Rink, http://d-fens.ch
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""RunConfig class."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
from collections.abc import Callable
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any

from dacite import Config, DaciteError, from_dict

from biz.dfch.logging import log

from ..compress import TwinKind
from ..errors import ConfigError
from ..harness import EvalConfig, Experiment, HarnessSettings, InferenceMode, SweepConfig
from ..merge import MergeMethod, MergeRecipe
from ..router import RouterConfig
from ..toyzoo import ExpertConfig, SuiteConfig

OUTPUT_ENVIRONMENT_VARIABLE = "TWINFORGE_OUT"
DEFAULT_OUTPUT_DIR = "out"
CONFIG_ECHO_NAME = "config.json"
_HASH_LENGTH = 12


@dataclass(frozen=True)
class RunConfig:  # pylint: disable=R0902
    """The JSON run configuration.

    Every section has complete defaults, so `{}` is a valid configuration.
    """

    suite: SuiteConfig = field(default_factory=SuiteConfig)
    experts: ExpertConfig = field(default_factory=ExpertConfig)
    merge: MergeRecipe = field(default_factory=MergeRecipe)
    router: RouterConfig = field(default_factory=RouterConfig)
    eval: EvalConfig = field(default_factory=EvalConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    output_dir: str = DEFAULT_OUTPUT_DIR
    seeds: tuple[int, ...] = (0,)

    def __post_init__(self):
        if not self.seeds:
            raise ConfigError("seeds must not be empty.")
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in self.seeds):
            raise ConfigError(f"seeds must be non-negative integers: {self.seeds}.")

    _dacite_config = Config(
        strict=True,
        cast=[tuple, float],
        type_hooks={
            MergeMethod: MergeMethod.parse,
            InferenceMode: InferenceMode.parse,
            Experiment: Experiment,
            TwinKind: TwinKind,
        },
    )

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> RunConfig:
        """Binds a parsed JSON document; unknown keys are rejected.

        Raises:
            ConfigError: On unknown keys, wrong types or invalid values.
        """

        try:
            return from_dict(data_class=cls, data=data, config=cls._dacite_config)
        except (DaciteError, ValueError) as ex:
            raise ConfigError(f"Invalid configuration: {ex}") from ex

    @classmethod
    def load(cls, path: Path | None) -> RunConfig:
        """Reads the configuration file, or the defaults for `None`.

        Raises:
            ConfigError: If the file cannot be read or parsed.
        """

        if path is None:
            return cls()

        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as ex:
            raise ConfigError(f"Cannot read configuration '{path}': {ex}") from ex

        if not isinstance(data, dict):
            raise ConfigError(f"Configuration '{path}' must hold a JSON object.")

        return cls.from_mapping(data)

    @property
    def settings(self) -> HarnessSettings:
        """The harness view of this configuration."""

        return HarnessSettings(
            suite=self.suite, experts=self.experts, merge=self.merge, router=self.router, eval=self.eval
        )

    @property
    def seed(self) -> int:
        """The first seed; single-run commands use it."""

        return self.seeds[0]

    def with_environment(self) -> RunConfig:
        """Applies the output directory override from the environment."""

        value = os.environ.get(OUTPUT_ENVIRONMENT_VARIABLE)
        if not value:
            return self

        log.debug("%s overrides output_dir with '%s'.", OUTPUT_ENVIRONMENT_VARIABLE, value)
        return replace(self, output_dir=value)

    def to_dict(self) -> dict[str, Any]:
        """The config echo: every field, defaults included."""

        return json.loads(json.dumps(asdict(self)))

    def digest(self) -> str:
        """First hex digits of the SHA-256 of the canonical echo without the output directory."""

        echo = self.to_dict()
        echo.pop("output_dir")
        canonical = json.dumps(echo, sort_keys=True, separators=(",", ":"))

        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:_HASH_LENGTH]

    def run_directory(self, command: str) -> Path:
        """`<output_dir>/<digest>/<command>`, created if missing."""

        result = Path(self.output_dir) / self.digest() / command
        result.mkdir(parents=True, exist_ok=True)

        return result

    def with_arguments(self, args: argparse.Namespace) -> RunConfig:
        """Applies the command line overrides that are present on `args`.

        Raises:
            ArgumentError: If an override is out of range.
            ConfigError: If a name does not parse.
        """

        assert isinstance(args, argparse.Namespace)

        def value(name: str) -> Any:
            return getattr(args, name, None)

        result = self
        merge: dict[str, Any] = {}
        if value("method") is not None:
            merge["method"] = _parse(MergeMethod.parse, value("method"), "method")
        if value("rank") is not None:
            merge["twin_rank"] = value("rank")
        if value("density") is not None:
            merge["ties_density"] = value("density")
        if value("drop_rate") is not None:
            merge["dare_drop_rate"] = value("drop_rate")
        if value("gamma") is not None:
            merge["gammas"] = tuple(value("gamma"))
        if merge:
            result = replace(result, merge=replace(result.merge, **merge))

        evaluation: dict[str, Any] = {}
        if value("mode") is not None:
            evaluation["mode"] = _parse(InferenceMode.parse, value("mode"), "mode")
        if value("group_count") is not None:
            evaluation["group_count"] = value("group_count")
        if evaluation:
            result = replace(result, eval=replace(result.eval, **evaluation))

        sweep: dict[str, Any] = {}
        if value("experiment") is not None:
            sweep["experiment"] = _parse(Experiment, value("experiment").replace("-", "_"), "experiment")
        if value("values") is not None:
            sweep["values"] = tuple(value("values"))
        if value("jobs") is not None:
            sweep["jobs"] = value("jobs")
        if sweep:
            result = replace(result, sweep=replace(result.sweep, **sweep))

        if value("seed") is not None:
            result = replace(result, seeds=tuple(value("seed")))

        return result


def _parse(parser: Callable[[str], Any], text: str, name: str) -> Any:
    try:
        return parser(text)
    except ValueError as ex:
        raise ConfigError(f"Invalid {name}: '{text}'.") from ex
