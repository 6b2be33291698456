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

"""Controlled experiments over seeds and one knob each."""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import diff
from ..compress import TwinKind, sparsify_twin
from ..errors import ConfigError
from ..merge import TwinBank, dynamic_merge, extract_twins, task_arithmetic
from ..seeding import derive_seed
from ..toyzoo import TaskSuite, ToyLayer, ToyModel, score
from .experiment import Experiment
from .harness_settings import HarnessSettings
from .inference import dynamic_predictions, route_items
from .inference_mode import InferenceMode
from .method_name import MethodName
from .metrics import normalized_score
from .pipeline import TwinArtifacts, evaluate_static, evaluate_twin, fit_router, merge_static, prepare_twin
from .result_table import UNSEEN_TASK, ResultRow, SweepResult, score_rows
from .sweep_config import SweepConfig
from .zoo import Zoo, build_zoo, fine_tune, make_base, make_suite

COMPARED_METHODS = (
    MethodName.WEIGHT_AVERAGE,
    MethodName.TASK_ARITHMETIC,
    MethodName.TIES,
    MethodName.TASK_ARITHMETIC_DARE,
    MethodName.TIES_DARE,
)
TASK_SWEEP_METHODS = (MethodName.WEIGHT_AVERAGE, MethodName.TASK_ARITHMETIC)
UNSEEN_METHODS = (MethodName.WEIGHT_AVERAGE, MethodName.TASK_ARITHMETIC, MethodName.TIES)

DEFAULT_SPARSITY_RATES = (0.0, 0.5, 0.9, 0.99)
DEFAULT_TASK_COUNTS = (1, 2, 3, 4)
DEFAULT_EPOCHS = (5, 10, 20, 40, 80)
DEFAULT_GROUP_COUNTS = (1, 5, 20, 400)
COEFF_GRID_RANGE = (-2.0, 2.0)
COEFF_GRID_STEP = 0.5
NONOVERLAP_LAYERS = ((ToyLayer.LAYER0.value,), (ToyLayer.LAYER1.value, ToyLayer.HEAD.value))

Cell = Callable[[], list[ResultRow]]


def run_cells(cells: Sequence[Cell], jobs: int = 1) -> list[ResultRow]:
    """Runs independent cells, in parallel for `jobs` > 1, and concatenates their rows in cell order."""

    if jobs <= 1 or len(cells) <= 1:
        results = [cell() for cell in cells]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(lambda cell: cell(), cells))

    return [row for rows in results for row in rows]


def _zoo(settings: HarnessSettings, seed: int) -> Zoo:
    return build_zoo(make_suite(settings.suite, seed), settings.experts, seed)


def _twin_rows(  # pylint: disable=R0913,R0917
    zoo: Zoo, settings: HarnessSettings, seed: int, knob: str, value: object, artifacts: TwinArtifacts
) -> list[ResultRow]:
    report = evaluate_twin(zoo, artifacts, settings.eval, seed)
    return score_rows(knob, value, MethodName.TWIN, seed, report.per_task_scores, report.normalized_score)


def _static_rows(  # pylint: disable=R0913,R0917
    zoo: Zoo, settings: HarnessSettings, seed: int, knob: str, value: object, method: MethodName
) -> list[ResultRow]:
    scores, normalized = evaluate_static(zoo, merge_static(zoo, method, settings.merge, seed))
    return score_rows(knob, value, method, seed, scores, normalized)


def compare_methods(settings: HarnessSettings, seeds: Sequence[int], jobs: int = 1) -> SweepResult:
    """The main comparison: the fine-tuned experts, the static merges and twin merging."""

    def cell(seed: int) -> list[ResultRow]:
        zoo = _zoo(settings, seed)
        rows = score_rows("method", "-", MethodName.FINETUNED, seed, zoo.ft_scores, 100.0)
        for method in COMPARED_METHODS:
            rows += _static_rows(zoo, settings, seed, "method", "-", method)
        rows += _twin_rows(zoo, settings, seed, "method", "-", prepare_twin(zoo, settings.merge, settings.router, seed))
        return rows

    return _per_seed(Experiment.COMPARE, cell, seeds, jobs, _metadata(settings, seeds))


def sweep_sparsity(  # pylint: disable=R0913,R0917
    settings: HarnessSettings,
    seeds: Sequence[int],
    rates: Sequence[float] = DEFAULT_SPARSITY_RATES,
    kinds: Sequence[TwinKind] = tuple(TwinKind),
    jobs: int = 1,
) -> SweepResult:
    """Twin merging with exclusive vectors compressed at increasing sparsity.

    The row with value `-` is the uncompressed per-sample twin baseline.
    """

    def cell(seed: int) -> list[ResultRow]:
        zoo = _zoo(settings, seed)
        artifacts = prepare_twin(zoo, settings.merge, settings.router, seed)
        rows = _twin_rows(zoo, settings, seed, "sparsity", "-", artifacts)
        deltas = [diff(expert, artifacts.shared) for expert in zoo.experts]
        for rate, kind in itertools.product(rates, kinds):
            twins = [sparsify_twin(d, kind, rate, derive_seed(seed, 40, t)) for t, d in enumerate(deltas)]
            report = evaluate_twin(zoo, artifacts, settings.eval, seed, twins=twins, experts=settings.experts)
            log.debug(
                "Sparsity %s %s (seed %d): %.2f, k=%s.", rate, kind, seed, report.normalized_score, report.storage.k
            )
            rows += score_rows("sparsity", rate, kind, seed, report.per_task_scores, report.normalized_score)
        return rows

    return _per_seed(Experiment.SPARSITY, cell, seeds, jobs, _metadata(settings, seeds))


def sweep_tasks(
    settings: HarnessSettings,
    seeds: Sequence[int],
    task_counts: Sequence[int] = DEFAULT_TASK_COUNTS,
    jobs: int = 1,
) -> SweepResult:
    """Merging the first T experts of one zoo for every T in `task_counts`."""

    if not task_counts or min(task_counts) < 1:
        raise ConfigError(f"Task counts must be positive: {task_counts}.")

    suite_config = replace(settings.suite, tasks=max(2, settings.suite.tasks, *task_counts))
    cell_settings = replace(settings, suite=suite_config, eval=replace(settings.eval, alphas=None))

    def cell(seed: int) -> list[ResultRow]:
        full = _zoo(cell_settings, seed)
        rows: list[ResultRow] = []
        for count in task_counts:
            zoo = full.subset(range(count))
            for method in TASK_SWEEP_METHODS:
                rows += _static_rows(zoo, cell_settings, seed, "tasks", count, method)
            artifacts = prepare_twin(zoo, cell_settings.merge, cell_settings.router, seed)
            rows += _twin_rows(zoo, cell_settings, seed, "tasks", count, artifacts)
        return rows

    return _per_seed(Experiment.TASKS, cell, seeds, jobs, _metadata(cell_settings, seeds))


def sweep_epochs(
    settings: HarnessSettings,
    seeds: Sequence[int],
    epochs: Sequence[int] = DEFAULT_EPOCHS,
    jobs: int = 1,
) -> SweepResult:
    """Task arithmetic of experts fine-tuned for longer and longer.

    The `finetuned` rows hold the raw own-task scores of the experts.
    """

    def cell(seed: int, value: int) -> list[ResultRow]:
        cell_settings = replace(settings, experts=replace(settings.experts, epochs=value))
        zoo = _zoo(cell_settings, seed)
        rows = score_rows("epochs", value, MethodName.FINETUNED, seed, zoo.ft_scores, None)
        rows += _static_rows(zoo, cell_settings, seed, "epochs", value, MethodName.TASK_ARITHMETIC)
        return rows

    cells = [_bind(cell, s, e) for e in epochs for s in seeds]
    return SweepResult(Experiment.EPOCHS, tuple(run_cells(cells, jobs)), _metadata(settings, seeds))


def sweep_single_task_sparsity(  # pylint: disable=R0913,R0917
    settings: HarnessSettings,
    seeds: Sequence[int],
    rates: Sequence[float] = DEFAULT_SPARSITY_RATES,
    kinds: Sequence[TwinKind] = tuple(TwinKind),
    jobs: int = 1,
) -> SweepResult:
    """Every expert alone with its task vector compressed, scored on its own task."""

    def cell(seed: int) -> list[ResultRow]:
        zoo = _zoo(settings, seed)
        base = zoo.base.params
        deltas = [diff(expert, base) for expert in zoo.experts]
        rows: list[ResultRow] = []
        for rate, kind in itertools.product(rates, kinds):
            scores = []
            for t, delta in enumerate(deltas):
                twin = sparsify_twin(delta, kind, rate, derive_seed(seed, 40, t))
                model = ToyModel(architecture=zoo.architecture, params=dynamic_merge(base, [twin], [1.0]))
                scores.append(score(model, zoo.suite.tasks[t].test))
            rows += score_rows("sparsity", rate, kind, seed, scores, normalized_score(scores, zoo.ft_scores))
        return rows

    return _per_seed(Experiment.SINGLE_TASK_SPARSITY, cell, seeds, jobs, _metadata(settings, seeds))


def coefficient_pairs(
    start: float = COEFF_GRID_RANGE[0], stop: float = COEFF_GRID_RANGE[1], step: float = COEFF_GRID_STEP
) -> list[tuple[float, float]]:
    """All (g1, g2) pairs of the coefficient grid, both ends included."""

    count = int(round((stop - start) / step)) + 1
    axis = [start + i * step for i in range(count)]

    return list(itertools.product(axis, axis))


def coeff_grid(
    settings: HarnessSettings,
    seeds: Sequence[int],
    pairs: Sequence[tuple[float, float]] | None = None,
    jobs: int = 1,
) -> SweepResult:
    """Task arithmetic of the first two experts over a grid of coefficient pairs.

    A `pretrain` row holds the score of the pretrained model.
    """

    selected = coefficient_pairs() if pairs is None else list(pairs)
    cell_settings = replace(settings, eval=replace(settings.eval, alphas=None))

    def cell(seed: int) -> list[ResultRow]:
        zoo = _zoo(cell_settings, seed).subset([0, 1])
        base = zoo.base.params
        rows = score_rows("gammas", "-", MethodName.PRETRAIN, seed, *evaluate_static(zoo, base))
        for pair in selected:
            merged = task_arithmetic(base, zoo.experts, pair)
            scores, normalized = evaluate_static(zoo, merged)
            rows += score_rows("gammas", _pair_text(pair), MethodName.TASK_ARITHMETIC, seed, scores, normalized)
        return rows

    return _per_seed(Experiment.COEFF_GRID, cell, seeds, jobs, _metadata(cell_settings, seeds))


def nonoverlap_experiment(settings: HarnessSettings, seeds: Sequence[int], jobs: int = 1) -> SweepResult:
    """Two adapter experts on disjoint layers merged by plain addition, against adapters on every layer.

    The `finetuned` rows hold the own-task scores of the non-overlapping experts.
    """

    cell_settings = replace(settings, eval=replace(settings.eval, alphas=None))

    def zoo_for(suite: TaskSuite, base: ToyModel, seed: int, layers: Sequence[tuple[str, ...] | None]) -> Zoo:
        experts = tuple(
            fine_tune(base, suite, t, replace(cell_settings.experts, use_adapter=True, adapter_modules=modules), seed)
            for t, modules in enumerate(layers)
        )
        ft_scores = tuple(
            float(score(ToyModel(architecture=base.architecture, params=e), suite.tasks[t].test))
            for t, e in enumerate(experts)
        )
        return Zoo(
            suite=suite, architecture=base.architecture, base=base, experts=experts, ft_scores=ft_scores, seed=seed
        )

    def cell(seed: int) -> list[ResultRow]:
        suite = make_suite(cell_settings.suite, seed).subset([0, 1])
        base = make_base(suite, cell_settings.experts, seed)
        rows: list[ResultRow] = []
        for method, layers in ((MethodName.NONOVERLAP, NONOVERLAP_LAYERS), (MethodName.OVERLAP, (None, None))):
            zoo = zoo_for(suite, base, seed, layers)
            if method == MethodName.NONOVERLAP:
                rows += score_rows("layers", "-", MethodName.FINETUNED, seed, zoo.ft_scores, None)
            merged = task_arithmetic(base.params, zoo.experts, (1.0, 1.0))
            rows += score_rows("layers", "-", method, seed, *evaluate_static(zoo, merged))
        return rows

    expert_layers = {"expert0": NONOVERLAP_LAYERS[0], "expert1": NONOVERLAP_LAYERS[1]}
    metadata = _metadata(cell_settings, seeds) | {"layers": expert_layers}
    return _per_seed(Experiment.NONOVERLAP, cell, seeds, jobs, metadata)


def ablation(settings: HarnessSettings, seeds: Sequence[int], jobs: int = 1) -> SweepResult:
    """Which part of twin merging carries the score.

    Rows: the pretrained model, the shared expert, dynamic merging of the
    task vectors onto the pretrained model, and twin merging.
    """

    def cell(seed: int) -> list[ResultRow]:
        zoo = _zoo(settings, seed)
        artifacts = prepare_twin(zoo, settings.merge, settings.router, seed)
        rows = score_rows("component", "-", MethodName.PRETRAIN, seed, *evaluate_static(zoo, zoo.base.params))
        rows += score_rows("component", "-", MethodName.SHARED, seed, *evaluate_static(zoo, artifacts.shared))

        base = zoo.base.params
        pretrain_artifacts = TwinArtifacts(
            shared=base,
            twins=tuple(extract_twins(base, zoo.experts, settings.merge.twin_rank)),
            router=fit_router(zoo.suite, zoo.base, settings.router, seed),
        )
        report = evaluate_twin(zoo, pretrain_artifacts, settings.eval, seed)
        rows += score_rows(
            "component", "-", MethodName.PRETRAIN_DYNAMIC, seed, report.per_task_scores, report.normalized_score
        )
        rows += _twin_rows(zoo, settings, seed, "component", "-", artifacts)
        return rows

    return _per_seed(Experiment.ABLATION, cell, seeds, jobs, _metadata(settings, seeds))


def sweep_unseen(settings: HarnessSettings, seeds: Sequence[int], jobs: int = 1) -> SweepResult:
    """The last task is held out of experts and router; every method is scored on it without normalization."""

    cell_settings = replace(settings, eval=replace(settings.eval, alphas=None))

    def cell(seed: int) -> list[ResultRow]:
        full = _zoo(cell_settings, seed)
        held_out = full.task_count - 1
        zoo = full.subset(range(held_out))
        held = full.suite.tasks[held_out].test
        rows: list[ResultRow] = []
        for method in UNSEEN_METHODS:
            model = ToyModel(architecture=zoo.architecture, params=merge_static(zoo, method, cell_settings.merge, seed))
            rows.append(ResultRow("task", str(held_out), str(method), str(seed), UNSEEN_TASK, score(model, held)))

        artifacts = prepare_twin(zoo, cell_settings.merge, cell_settings.router, seed)
        decisions = route_items(artifacts.shared, artifacts.router, zoo.architecture, held.x, zoo.task_count)
        predictions, _ = dynamic_predictions(
            TwinBank(artifacts.shared, artifacts.twins),
            zoo.architecture,
            held.x,
            decisions,
            cell_settings.eval.mode,
            cell_settings.eval.group_count,
            seed,
            cell_settings.eval.batch_size,
        )
        twin_score = float(np.mean(predictions == held.y))
        rows.append(ResultRow("task", str(held_out), str(MethodName.TWIN), str(seed), UNSEEN_TASK, twin_score))
        return rows

    return _per_seed(Experiment.UNSEEN, cell, seeds, jobs, _metadata(cell_settings, seeds))


def grouping(
    settings: HarnessSettings,
    seeds: Sequence[int],
    group_counts: Sequence[int] = DEFAULT_GROUP_COUNTS,
    jobs: int = 1,
) -> SweepResult:
    """Per-sample twin merging against group-wise merging with each group count."""

    def cell(seed: int) -> list[ResultRow]:
        zoo = _zoo(settings, seed)
        artifacts = prepare_twin(zoo, settings.merge, settings.router, seed)
        per_sample = replace(settings.eval, mode=InferenceMode.PER_SAMPLE)
        report = evaluate_twin(zoo, artifacts, per_sample, seed)
        rows = score_rows("group_count", "-", MethodName.TWIN, seed, report.per_task_scores, report.normalized_score)
        for count in group_counts:
            grouped = replace(settings.eval, mode=InferenceMode.GROUPED, group_count=count)
            report = evaluate_twin(zoo, artifacts, grouped, seed)
            log.debug("Grouping %d (seed %d): %d merges.", count, seed, report.merge_count)
            rows += score_rows(
                "group_count", count, MethodName.TWIN_GROUPED, seed, report.per_task_scores, report.normalized_score
            )
        return rows

    return _per_seed(Experiment.GROUPING, cell, seeds, jobs, _metadata(settings, seeds))


def parse_pair(value: str) -> tuple[float, float]:
    """Parses a coefficient pair `g1;g2`.

    Raises:
        ConfigError: On a malformed pair.
    """

    parts = value.split(";")
    try:
        if len(parts) != 2:
            raise ValueError(value)
        return float(parts[0]), float(parts[1])
    except ValueError as ex:
        raise ConfigError(f"Invalid coefficient pair '{value}'. Expected 'g1;g2'.") from ex


def _parse_values(values: Sequence[str], kind: type) -> list:
    try:
        return [kind(e) for e in values]
    except ValueError as ex:
        raise ConfigError(f"Invalid sweep values {list(values)} for {kind.__name__}.") from ex


def run_experiment(config: SweepConfig, settings: HarnessSettings, seeds: Sequence[int]) -> SweepResult:
    """Dispatches a sweep to its experiment.

    Raises:
        ConfigError: On an empty seed list or malformed knob values.
    """

    assert isinstance(config, SweepConfig)
    assert isinstance(settings, HarnessSettings)

    if not seeds:
        raise ConfigError("At least one seed is required.")

    log.info("Running experiment '%s' over seeds %s.", config.experiment, list(seeds))
    values = config.values
    jobs = config.jobs

    match config.experiment:
        case Experiment.COMPARE:
            return compare_methods(settings, seeds, jobs)
        case Experiment.SPARSITY:
            rates = DEFAULT_SPARSITY_RATES if values is None else _parse_values(values, float)
            return sweep_sparsity(settings, seeds, rates, config.kinds, jobs)
        case Experiment.TASKS:
            counts = DEFAULT_TASK_COUNTS if values is None else _parse_values(values, int)
            return sweep_tasks(settings, seeds, counts, jobs)
        case Experiment.EPOCHS:
            epochs = DEFAULT_EPOCHS if values is None else _parse_values(values, int)
            return sweep_epochs(settings, seeds, epochs, jobs)
        case Experiment.SINGLE_TASK_SPARSITY:
            rates = DEFAULT_SPARSITY_RATES if values is None else _parse_values(values, float)
            return sweep_single_task_sparsity(settings, seeds, rates, config.kinds, jobs)
        case Experiment.COEFF_GRID:
            pairs = None if values is None else [parse_pair(e) for e in values]
            return coeff_grid(settings, seeds, pairs, jobs)
        case Experiment.NONOVERLAP:
            return nonoverlap_experiment(settings, seeds, jobs)
        case Experiment.ABLATION:
            return ablation(settings, seeds, jobs)
        case Experiment.UNSEEN:
            return sweep_unseen(settings, seeds, jobs)
        case Experiment.GROUPING:
            counts = DEFAULT_GROUP_COUNTS if values is None else _parse_values(values, int)
            return grouping(settings, seeds, counts, jobs)

    raise ConfigError(f"Invalid {Experiment.__name__}: '{config.experiment}'.")


def _bind(cell: Callable[..., list[ResultRow]], *args) -> Cell:
    return lambda: cell(*args)


def _per_seed(  # pylint: disable=R0913,R0917
    experiment: Experiment,
    cell: Callable[[int], list[ResultRow]],
    seeds: Sequence[int],
    jobs: int,
    metadata: dict,
) -> SweepResult:
    return SweepResult(experiment, tuple(run_cells([_bind(cell, s) for s in seeds], jobs)), metadata)


def _pair_text(pair: Sequence[float]) -> str:
    return ";".join(repr(float(e)) for e in pair)


def _metadata(settings: HarnessSettings, seeds: Sequence[int]) -> dict:
    return {"seeds": [int(e) for e in seeds], "tasks": settings.suite.tasks}
