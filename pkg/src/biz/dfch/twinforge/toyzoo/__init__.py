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

"""toyzoo package."""

from .adapter_algebra import adapter_delta, merge_adapter
from .architecture import Architecture
from .expert_config import ExpertConfig
from .model_factory import DEFAULT_ADAPTER_RANK, init_model, parse_layers, with_adapter
from .scoring import score, score_tasks
from .split_name import SplitName
from .suite_config import SuiteConfig
from .task_suite import MAX_VALIDATION_ITEMS, TaskData, TaskSplit, TaskSuite, gen_suite, split_sizes
from .toy_layer import ToyLayer
from .toy_model import Activations, ToyModel, forward
from .trainer import cross_entropy, pretrain_base, softmax, train_expert

__all__ = [
    "DEFAULT_ADAPTER_RANK",
    "MAX_VALIDATION_ITEMS",
    "Activations",
    "Architecture",
    "ExpertConfig",
    "SplitName",
    "SuiteConfig",
    "TaskData",
    "TaskSplit",
    "TaskSuite",
    "ToyLayer",
    "ToyModel",
    "adapter_delta",
    "cross_entropy",
    "forward",
    "gen_suite",
    "init_model",
    "merge_adapter",
    "parse_layers",
    "pretrain_base",
    "score",
    "score_tasks",
    "softmax",
    "train_expert",
    "with_adapter",
]
