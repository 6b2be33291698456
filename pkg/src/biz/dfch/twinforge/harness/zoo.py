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

"""Zoo class: a suite, its base model and the fine-tuned experts."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, replace

from biz.dfch.logging import log

from ..checkpoint import Checkpoint
from ..seeding import derive_seed
from ..toyzoo import (
    Architecture,
    ExpertConfig,
    SuiteConfig,
    TaskSuite,
    ToyModel,
    gen_suite,
    merge_adapter,
    parse_layers,
    pretrain_base,
    score,
    train_expert,
)


@dataclass(frozen=True)
class Zoo:
    """Everything a merge experiment starts from."""

    suite: TaskSuite
    architecture: Architecture
    base: ToyModel
    experts: tuple[Checkpoint, ...]
    ft_scores: tuple[float, ...]
    seed: int

    @property
    def task_count(self) -> int:
        """Number of experts."""

        return len(self.experts)

    def subset(self, indices: Sequence[int]) -> Zoo:
        """The zoo restricted to the selected tasks."""

        return replace(
            self,
            suite=self.suite.subset(indices),
            experts=tuple(self.experts[i] for i in indices),
            ft_scores=tuple(self.ft_scores[i] for i in indices),
        )


def make_suite(config: SuiteConfig, seed: int) -> TaskSuite:
    """Generates the suite described by `config`."""

    return gen_suite(
        task_count=config.tasks,
        input_dim=config.input_dim,
        classes=config.classes,
        n_per_task=config.n_per_task,
        shared_strength=config.shared_strength,
        seed=seed,
    )


def make_base(suite: TaskSuite, config: ExpertConfig, seed: int) -> ToyModel:
    """The pretrained model of a suite."""

    architecture = Architecture(input_dim=suite.input_dim, hidden_dim=config.hidden_dim, classes=suite.classes)
    base = pretrain_base(suite, architecture, config.pretrain_epochs, config.pretrain_lr, derive_seed(seed, 20))

    return ToyModel(architecture=architecture, params=base.params.with_meta(name="base"))


def fine_tune(base: ToyModel, suite: TaskSuite, task: int, config: ExpertConfig, seed: int) -> Checkpoint:
    """Trains the expert of one task and returns its dense checkpoint."""

    model = train_expert(
        base,
        suite.tasks[task].train,
        epochs=config.epochs,
        lr=config.lr,
        seed=derive_seed(seed, 10, task),
        use_adapter=config.use_adapter,
        adapter_modules=parse_layers(config.adapter_modules),
        adapter_rank=config.adapter_rank,
        batch_size=config.batch_size,
        momentum=config.momentum,
    )
    params = merge_adapter(model) if model.adapter is not None else model.params

    return params.with_meta(name=f"expert{task}")


def build_zoo(suite: TaskSuite, config: ExpertConfig, seed: int) -> Zoo:
    """Pretrains the base and fine-tunes one expert per task of `suite`."""

    base = make_base(suite, config, seed)
    experts = tuple(fine_tune(base, suite, t, config, seed) for t in range(suite.task_count))
    ft_scores = tuple(
        score(ToyModel(architecture=base.architecture, params=expert), suite.tasks[t].test)
        for t, expert in enumerate(experts)
    )
    log.info("Zoo (seed %d): expert own-task scores %s.", seed, [round(s, 4) for s in ft_scores])

    return Zoo(suite=suite, architecture=base.architecture, base=base, experts=experts, ft_scores=ft_scores, seed=seed)
