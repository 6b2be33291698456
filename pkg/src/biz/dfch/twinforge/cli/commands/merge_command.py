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

"""MergeCommand class."""

from ...checkpoint import save
from ...errors import ArgumentError
from ...harness import apply_static, merge_static, method_for
from ...merge import MergeMethod
from ...toyzoo import TaskSuite
from .command_base import CommandBase

MERGED_FILE = "merged.safetensors"


class MergeCommand(CommandBase):  # pylint: disable=R0903
    """Merges experts with a static method.

    Without a suite the coefficients must be configured; with a suite missing
    coefficients are searched on the validation splits.
    """

    def invoke(self, context) -> None:
        super().invoke(context)

        config = context.config
        recipe = config.merge
        if recipe.method == MergeMethod.TWIN:
            raise ArgumentError("Twin merging is dynamic; use twin-prep, train-router and infer.")

        method = method_for(recipe.method, recipe.dare_drop_rate is not None)
        base = self.load_checkpoints([context.args.base])[0]
        experts = self.load_checkpoints(context.args.experts)

        if context.args.suite is None:
            merged = apply_static(base, experts, method, recipe, config.seed)
        else:
            zoo = self.zoo_of(TaskSuite.load(context.args.suite), base, experts, config.seed)
            merged = merge_static(zoo, method, recipe, config.seed)

        path = context.output(MERGED_FILE)
        save(merged.with_meta(name="merged", method=str(method)), path)
        context.console.print(f"Merged {len(experts)} experts with '{method}': '{path}'.")
