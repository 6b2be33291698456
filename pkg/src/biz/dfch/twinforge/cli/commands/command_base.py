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

"""CommandBase class."""

from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path

from biz.dfch.logging import log

from ...checkpoint import Checkpoint, load
from ...errors import ConfigError
from ...harness import Zoo
from ...toyzoo import Architecture, TaskSuite, ToyModel, score
from .command_context import CommandContext

FT_SCORE_META_KEY = "ft_score"


class CommandBase(ABC):  # pylint: disable=R0903
    """Represents a command of the command line."""

    @abstractmethod
    def invoke(self, context: CommandContext) -> None:
        """Invokes the command."""

        assert isinstance(context, CommandContext)

    @staticmethod
    def load_checkpoints(paths: list[Path]) -> list[Checkpoint]:
        """Loads checkpoints in the given order."""

        result = [load(e) for e in paths]
        log.debug("Loaded %d checkpoints.", len(result))

        return result

    @staticmethod
    def zoo_of(suite: TaskSuite, base: Checkpoint, experts: list[Checkpoint], seed: int) -> Zoo:
        """A zoo over loaded artifacts. Reference scores come from the expert metadata or are recomputed."""

        if len(experts) != suite.task_count:
            raise ConfigError(f"{len(experts)} experts for a suite of {suite.task_count} tasks.")

        architecture = Architecture.of(base.shapes)
        model = ToyModel(architecture=architecture, params=base)
        scores = tuple(CommandBase.reference_score(e, architecture, suite, t) for t, e in enumerate(experts))

        return Zoo(
            suite=suite, architecture=architecture, base=model, experts=tuple(experts), ft_scores=scores, seed=seed
        )

    @staticmethod
    def reference_score(expert: Checkpoint, architecture: Architecture, suite: TaskSuite, task: int) -> float:
        """Own-task test score of an expert."""

        if FT_SCORE_META_KEY in expert.meta:
            return float(expert.meta[FT_SCORE_META_KEY])

        return score(ToyModel(architecture=architecture, params=expert), suite.tasks[task].test)
