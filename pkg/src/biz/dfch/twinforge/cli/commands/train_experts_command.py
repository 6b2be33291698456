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

"""TrainExpertsCommand class."""

from rich.table import Table

from ...checkpoint import save
from ...harness import build_zoo, make_suite
from ...toyzoo import TaskSuite
from .command_base import FT_SCORE_META_KEY, CommandBase
from .gen_suite_command import SUITE_FILE

BASE_FILE = "base.safetensors"


def expert_file(task: int) -> str:
    """File name of the expert of `task`."""

    return f"expert{task}.safetensors"


class TrainExpertsCommand(CommandBase):  # pylint: disable=R0903
    """Pretrains the base and fine-tunes one expert per task.

    Each expert carries its own-task test score in the `ft_score` metadata.
    A generated suite is written next to the checkpoints.
    """

    def invoke(self, context) -> None:
        super().invoke(context)

        config = context.config
        if context.args.suite is None:
            suite = make_suite(config.suite, config.seed)
            suite.save(context.output(SUITE_FILE))
        else:
            suite = TaskSuite.load(context.args.suite)

        zoo = build_zoo(suite, config.experts, config.seed)
        save(zoo.base.params, context.output(BASE_FILE))

        table = Table(title="Experts")
        table.add_column("task")
        table.add_column("own-task score", justify="right")
        table.add_column("file")
        for t, (expert, value) in enumerate(zip(zoo.experts, zoo.ft_scores, strict=True)):
            path = context.output(expert_file(t))
            save(expert.with_meta(**{FT_SCORE_META_KEY: repr(value)}), path)
            table.add_row(str(t), f"{value:.4f}", str(path))

        context.console.print(table)
