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

"""commands package."""

from .command_base import CommandBase
from .command_context import CommandContext
from .command_name import CommandName
from .eval_command import EvalCommand
from .gen_suite_command import GenSuiteCommand
from .infer_command import InferCommand
from .merge_command import MergeCommand
from .selftest_command import SelftestCommand
from .storage_command import StorageCommand
from .sweep_command import SweepCommand
from .train_experts_command import TrainExpertsCommand
from .train_router_command import TrainRouterCommand
from .twin_prep_command import TwinPrepCommand

COMMANDS: dict[CommandName, type[CommandBase]] = {
    CommandName.GEN_SUITE: GenSuiteCommand,
    CommandName.TRAIN_EXPERTS: TrainExpertsCommand,
    CommandName.MERGE: MergeCommand,
    CommandName.TWIN_PREP: TwinPrepCommand,
    CommandName.TRAIN_ROUTER: TrainRouterCommand,
    CommandName.INFER: InferCommand,
    CommandName.EVAL: EvalCommand,
    CommandName.SWEEP: SweepCommand,
    CommandName.STORAGE: StorageCommand,
    CommandName.SELFTEST: SelftestCommand,
}

__all__ = [
    "COMMANDS",
    "CommandBase",
    "CommandContext",
    "CommandName",
    "EvalCommand",
    "GenSuiteCommand",
    "InferCommand",
    "MergeCommand",
    "SelftestCommand",
    "StorageCommand",
    "SweepCommand",
    "TrainExpertsCommand",
    "TrainRouterCommand",
    "TwinPrepCommand",
]
