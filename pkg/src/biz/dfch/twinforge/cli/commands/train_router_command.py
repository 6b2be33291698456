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

"""TrainRouterCommand class."""

from ...errors import ConfigError
from ...harness import fit_router
from ...toyzoo import Architecture, TaskSuite, ToyModel
from .command_base import CommandBase

ROUTER_FILE = "router.safetensors"


class TrainRouterCommand(CommandBase):  # pylint: disable=R0903
    """Trains the router on shared expert embeddings of the validation splits."""

    def invoke(self, context) -> None:
        super().invoke(context)

        config = context.config
        shared = self.load_checkpoints([context.args.shared])[0]
        suite = TaskSuite.load(context.args.suite)
        model = ToyModel(architecture=Architecture.of(shared.shapes), params=shared)

        router = fit_router(suite, model, config.router, config.seed)
        if router is None:
            raise ConfigError("A router needs at least two tasks.")

        path = context.output(ROUTER_FILE)
        router.save(path)
        context.console.print(f"Router for {router.task_count} tasks written: '{path}'.")
