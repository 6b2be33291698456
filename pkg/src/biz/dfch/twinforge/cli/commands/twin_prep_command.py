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

"""TwinPrepCommand class."""

from ...checkpoint import save
from ...harness import apply_static, build_shared, method_for, write_json
from ...merge import SHARED_NAME, extract_twins
from ...toyzoo import TaskSuite
from .command_base import CommandBase

SHARED_FILE = "shared.safetensors"
TWINS_FILE = "twins.json"


def twin_file(task: int) -> str:
    """File name of the twin vector of `task`."""

    return f"twin{task}.safetensors"


class TwinPrepCommand(CommandBase):  # pylint: disable=R0903
    """Builds the shared expert and compresses the exclusive twin vectors."""

    def invoke(self, context) -> None:
        super().invoke(context)

        config = context.config
        recipe = config.merge
        base = self.load_checkpoints([context.args.base])[0]
        experts = self.load_checkpoints(context.args.experts)

        if context.args.suite is None:
            method = method_for(recipe.shared_method, recipe.dare_drop_rate is not None)
            shared = apply_static(base, experts, method, recipe, config.seed).with_meta(name=SHARED_NAME)
        else:
            zoo = self.zoo_of(TaskSuite.load(context.args.suite), base, experts, config.seed)
            shared = build_shared(zoo, recipe, config.seed)

        save(shared, context.output(SHARED_FILE))
        twins = extract_twins(shared, experts, recipe.twin_rank)
        for t, twin in enumerate(twins):
            twin.save(context.output(twin_file(t)))

        records = [
            {
                "file": twin_file(t),
                "requested_rank": twin.rank,
                "effective_ranks": twin.effective_ranks,
                "parameters": twin.parameter_count,
            }
            for t, twin in enumerate(twins)
        ]
        write_json(records, context.output(TWINS_FILE))

        stored = sum(e.parameter_count for e in twins)
        dense = sum(e.dense_parameter_count for e in twins)
        context.console.print(
            f"Shared expert and {len(twins)} twins written to '{context.run_dir}' "
            f"({stored:,} of {dense:,} parameters)."
        )
