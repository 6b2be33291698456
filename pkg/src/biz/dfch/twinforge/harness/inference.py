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

"""The inference loop: embed, route, merge dynamically and score."""

from __future__ import annotations

import time
from collections.abc import Mapping, Sequence
from typing import Any

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import Checkpoint
from ..compress import TwinVector
from ..errors import ConfigError
from ..merge import TwinBank
from ..router import Router, RoutingDecision, embed, group_weights
from ..seeding import make_rng
from ..toyzoo import Architecture, SplitName, TaskSuite, ToyModel
from .eval_config import DEFAULT_BATCH_SIZE
from .experiment_report import ExperimentReport
from .inference_mode import InferenceMode
from .metrics import normalized_score
from .storage import StorageAccount


def mixture_items(
    suite: TaskSuite,
    alphas: Sequence[float] | None,
    seed: int,
    split: SplitName = SplitName.TEST,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The shuffled test mixture: features, labels and task ids.

    The task with the largest mixture weight contributes its whole split;
    every other task contributes a share proportional to its weight.
    """

    weights = suite.alphas if alphas is None else tuple(alphas)
    if len(weights) != suite.task_count:
        raise ConfigError(f"{len(weights)} mixture weights for {suite.task_count} tasks.")

    largest = max(weights)
    xs: list[np.ndarray] = []
    ys: list[np.ndarray] = []
    ids: list[np.ndarray] = []
    for t, (task, alpha) in enumerate(zip(suite.tasks, weights, strict=True)):
        data = task.split(split)
        count = max(1, min(len(data), round(len(data) * alpha / largest)))
        xs.append(data.x[:count])
        ys.append(data.y[:count])
        ids.append(np.full(count, t, dtype=np.int64))

    x, y, task_ids = np.concatenate(xs), np.concatenate(ys), np.concatenate(ids)
    order = make_rng(seed, 7).permutation(x.shape[0])

    return x[order], y[order], task_ids[order]


class _MergedPredictor:  # pylint: disable=R0903
    """Predicts with one merged model per distinct weight vector."""

    def __init__(self, bank: TwinBank, architecture: Architecture):
        self._bank = bank
        self._architecture = architecture
        self.merge_count = 0

    def predict(self, x: np.ndarray, weights: Sequence[np.ndarray]) -> np.ndarray:
        result = np.empty(x.shape[0], dtype=np.int64)
        buckets: dict[bytes, list[int]] = {}
        for idx, w in enumerate(weights):
            buckets.setdefault(np.asarray(w, dtype=np.float64).tobytes(), []).append(idx)

        for members in buckets.values():
            merged = self._bank.merge(weights[members[0]])
            self.merge_count += 1
            model = ToyModel(architecture=self._architecture, params=merged)
            result[members] = model.predict(x[members])

        return result


def route_items(  # pylint: disable=R0913,R0917
    shared: Checkpoint,
    router: Router | None,
    architecture: Architecture,
    x: np.ndarray,
    task_count: int,
    oracle_ids: np.ndarray | None = None,
) -> list[RoutingDecision]:
    """Router decisions for `x`; one-hot decisions for oracle ids or a single task."""

    if oracle_ids is not None:
        return [RoutingDecision.one_hot(int(t), task_count) for t in oracle_ids]
    if router is None:
        if task_count > 1:
            raise ConfigError("A router is required for more than one task.")
        return [RoutingDecision.one_hot(0, 1) for _ in range(x.shape[0])]

    return router.route_batch(embed(ToyModel(architecture=architecture, params=shared), x))


def dynamic_predictions(  # pylint: disable=R0913,R0917
    bank: TwinBank,
    architecture: Architecture,
    x: np.ndarray,
    decisions: Sequence[RoutingDecision],
    mode: InferenceMode,
    group_count: int,
    seed: int,
    batch_size: int = DEFAULT_BATCH_SIZE,
) -> tuple[np.ndarray, int]:
    """Predictions of the dynamically merged models and the number of merges."""

    predictor = _MergedPredictor(bank, architecture)
    predictions = np.empty(x.shape[0], dtype=np.int64)
    for start in range(0, x.shape[0], batch_size):
        stop = min(start + batch_size, x.shape[0])
        batch = decisions[start:stop]
        if mode == InferenceMode.GROUPED:
            assignment = group_weights(batch, group_count, seed)
            weights = [assignment.weights[g] for g in assignment.groups]
        else:
            weights = [d.weights for d in batch]
        predictions[start:stop] = predictor.predict(x[start:stop], weights)

    return predictions, predictor.merge_count


def run_inference(  # pylint: disable=R0913,R0914,R0917
    shared: Checkpoint,
    twins: Sequence[TwinVector],
    router: Router | None,
    suite: TaskSuite,
    architecture: Architecture,
    ft_scores: Sequence[float],
    mode: InferenceMode = InferenceMode.PER_SAMPLE,
    group_count: int = 20,
    seed: int = 0,
    oracle: bool = False,
    alphas: Sequence[float] | None = None,
    batch_size: int = DEFAULT_BATCH_SIZE,
    storage: StorageAccount | None = None,
    config: Mapping[str, Any] | None = None,
) -> ExperimentReport:
    """Runs the inference loop over the shuffled test mixture.

    Every input is embedded by the shared expert and routed. Per-sample mode
    merges shared + sum_t w_t twin_t per input; grouped mode groups each batch
    with `group_weights` and merges once per group. A router is not needed
    with a single twin or oracle one-hot routing.

    Raises:
        ConfigError: If router, twins, suite and reference scores disagree on the task count.
    """

    assert isinstance(mode, InferenceMode)

    started = time.perf_counter()
    task_count = len(twins)
    if suite.task_count != task_count or len(ft_scores) != task_count:
        raise ConfigError(f"{task_count} twins, {suite.task_count} suite tasks, {len(ft_scores)} reference scores.")
    if router is not None and router.task_count != task_count:
        raise ConfigError(f"The router was trained for {router.task_count} tasks, got {task_count} twins.")

    bank = TwinBank(shared, twins)
    x, y, task_ids = mixture_items(suite, alphas, seed)
    decisions = route_items(shared, router, architecture, x, task_count, task_ids if oracle else None)
    predictions, merge_count = dynamic_predictions(
        bank, architecture, x, decisions, mode, group_count, seed, batch_size
    )

    correct = predictions == y
    per_task = tuple(float(np.mean(correct[task_ids == t])) for t in range(task_count))
    wall_time = time.perf_counter() - started

    report = ExperimentReport(
        per_task_scores=per_task,
        ft_scores=tuple(float(e) for e in ft_scores),
        normalized_score=normalized_score(per_task, ft_scores),
        merge_count=merge_count,
        config=dict(config or {}),
        wall_time=wall_time,
        storage=storage,
    )
    log.info(
        "Inference (%s): normalized %.2f, %d merges, %.2fs.",
        mode,
        report.normalized_score,
        report.merge_count,
        wall_time,
    )

    return report
