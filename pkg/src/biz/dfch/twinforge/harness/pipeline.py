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

"""Merge methods evaluated on a zoo, with validation coefficient search."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from ..checkpoint import Checkpoint
from ..compress import TwinVector
from ..errors import ArgumentError
from ..merge import (
    SHARED_NAME,
    MergeMethod,
    MergeRecipe,
    extract_twins,
    search_coefficient,
    task_arithmetic,
    task_arithmetic_dare,
    ties_merge,
    ties_merge_dare,
    weight_average,
)
from ..router import Router, RouterConfig, embed_suite, train_router
from ..seeding import derive_seed
from ..toyzoo import ExpertConfig, SplitName, TaskSuite, ToyModel, parse_layers, score_tasks
from .eval_config import EvalConfig
from .experiment_report import ExperimentReport
from .inference import run_inference
from .method_name import MethodName
from .metrics import normalized_score
from .storage import StorageAccount, storage_report
from .zoo import Zoo

DEFAULT_DARE_DROP_RATE = 0.7


@dataclass(frozen=True)
class TwinArtifacts:
    """Output of the pre-calculation: shared expert, twins and router."""

    shared: Checkpoint
    twins: tuple[TwinVector, ...]
    router: Router | None


def validation_score(zoo: Zoo, params: Checkpoint) -> float:
    """Mean validation accuracy of a checkpoint over all tasks of the zoo."""

    return float(np.mean(score_tasks(params, zoo.architecture, zoo.suite, SplitName.VALIDATION)))


def split_scores(zoo: Zoo, params: Checkpoint) -> list[float]:
    """Test accuracy of a checkpoint per task."""

    return score_tasks(params, zoo.architecture, zoo.suite, SplitName.TEST)


def _search(zoo: Zoo, grid: Sequence[float], build: Callable[[float], Checkpoint]) -> float:
    if zoo.task_count == 1:
        return 1.0

    return search_coefficient(grid, lambda value: validation_score(zoo, build(value))).best


def select_gammas(zoo: Zoo, recipe: MergeRecipe, drop_rate: float | None = None, seed: int = 0) -> tuple[float, ...]:
    """Configured task arithmetic coefficients, or a scalar picked on validation data.

    A single expert uses coefficient 1.
    """

    explicit = recipe.gammas_for(zoo.task_count)
    if explicit is not None:
        return explicit

    base, experts, count = zoo.base.params, zoo.experts, zoo.task_count
    if drop_rate is None:
        best = _search(zoo, recipe.gamma_grid, lambda g: task_arithmetic(base, experts, [g] * count))
    else:
        best = _search(
            zoo, recipe.gamma_grid, lambda g: task_arithmetic_dare(base, experts, [g] * count, drop_rate, seed)
        )

    return (best,) * count


def select_ties_lambda(zoo: Zoo, recipe: MergeRecipe, drop_rate: float | None = None, seed: int = 0) -> float:
    """Configured ties scaling, or the value picked on validation data."""

    if recipe.ties_lambda is not None:
        return recipe.ties_lambda

    base, experts, density = zoo.base.params, zoo.experts, recipe.ties_density
    if drop_rate is None:
        return _search(zoo, recipe.gamma_grid, lambda lam: ties_merge(base, experts, density, lam))

    return _search(zoo, recipe.gamma_grid, lambda lam: ties_merge_dare(base, experts, density, lam, drop_rate, seed))


def method_for(method: MergeMethod, dare: bool = False) -> MethodName:
    """The static merge of a recipe method, with or without drop-and-rescale.

    Raises:
        ArgumentError: For twin merging, which is not static.
    """

    assert isinstance(method, MergeMethod)

    match method:
        case MergeMethod.AVERAGE:
            return MethodName.WEIGHT_AVERAGE
        case MergeMethod.TASK_ARITHMETIC:
            return MethodName.TASK_ARITHMETIC_DARE if dare else MethodName.TASK_ARITHMETIC
        case MergeMethod.TIES:
            return MethodName.TIES_DARE if dare else MethodName.TIES

    raise ArgumentError(f"'{method}' is not a static merge method.")


def _drop_rate(recipe: MergeRecipe) -> float:
    return recipe.dare_drop_rate if recipe.dare_drop_rate is not None else DEFAULT_DARE_DROP_RATE


def apply_static(  # pylint: disable=R0913,R0917
    base: Checkpoint,
    experts: Sequence[Checkpoint],
    method: MethodName,
    recipe: MergeRecipe,
    seed: int,
    gammas: Sequence[float] | None = None,
    lambda_: float | None = None,
) -> Checkpoint:
    """One static merge with known coefficients; the recipe's values fill in missing ones.

    Raises:
        ArgumentError: If a coefficient is neither given nor configured.
    """

    assert isinstance(method, MethodName)

    gammas = recipe.gammas_for(len(experts)) if gammas is None else tuple(gammas)
    lambda_ = recipe.ties_lambda if lambda_ is None else lambda_
    dare_seed = derive_seed(seed, 50)

    match method:
        case MethodName.PRETRAIN:
            return base
        case MethodName.WEIGHT_AVERAGE:
            return weight_average(experts)
        case MethodName.TASK_ARITHMETIC | MethodName.TASK_ARITHMETIC_DARE:
            if gammas is None:
                raise ArgumentError(f"'{method}' needs coefficients: configure gammas or search them on a suite.")
            if method == MethodName.TASK_ARITHMETIC:
                return task_arithmetic(base, experts, gammas)
            return task_arithmetic_dare(base, experts, gammas, _drop_rate(recipe), dare_seed)
        case MethodName.TIES | MethodName.TIES_DARE:
            if lambda_ is None:
                raise ArgumentError(f"'{method}' needs a scaling: configure ties_lambda or search it on a suite.")
            if method == MethodName.TIES:
                return ties_merge(base, experts, recipe.ties_density, lambda_)
            return ties_merge_dare(base, experts, recipe.ties_density, lambda_, _drop_rate(recipe), dare_seed)

    raise ArgumentError(f"'{method}' is not a static merge method.")


def merge_static(zoo: Zoo, method: MethodName, recipe: MergeRecipe, seed: int) -> Checkpoint:
    """One static merge of all experts of the zoo, coefficients searched on validation data if not configured."""

    assert isinstance(method, MethodName)

    if method == MethodName.SHARED:
        return build_shared(zoo, recipe, seed)

    dare_seed = derive_seed(seed, 50)
    drop_rate = _drop_rate(recipe) if method in (MethodName.TASK_ARITHMETIC_DARE, MethodName.TIES_DARE) else None
    gammas: tuple[float, ...] | None = None
    lambda_: float | None = None
    if method in (MethodName.TASK_ARITHMETIC, MethodName.TASK_ARITHMETIC_DARE):
        gammas = select_gammas(zoo, recipe, drop_rate, dare_seed)
    if method in (MethodName.TIES, MethodName.TIES_DARE):
        lambda_ = select_ties_lambda(zoo, recipe, drop_rate, dare_seed)

    return apply_static(zoo.base.params, zoo.experts, method, recipe, seed, gammas, lambda_)


def build_shared(zoo: Zoo, recipe: MergeRecipe, seed: int) -> Checkpoint:
    """The shared expert built with the recipe's shared method, drop-and-rescale applied if configured."""

    method = method_for(recipe.shared_method, recipe.dare_drop_rate is not None)

    return merge_static(zoo, method, recipe, seed).with_meta(name=SHARED_NAME)


def fit_router(suite: TaskSuite, shared: ToyModel, config: RouterConfig, seed: int) -> Router | None:
    """Router trained on shared-expert embeddings of the validation splits; `None` for one task."""

    if suite.task_count == 1:
        return None

    embeddings, task_ids = embed_suite(shared, suite, SplitName.VALIDATION, config.max_items_per_task)

    return train_router(
        embeddings,
        task_ids,
        task_count=suite.task_count,
        epochs=config.epochs,
        lr=config.lr,
        seed=derive_seed(seed, 30),
        hidden_dim=config.hidden_dim,
        batch_size=config.batch_size,
        momentum=config.momentum,
    )


def prepare_twin(zoo: Zoo, recipe: MergeRecipe, router_config: RouterConfig, seed: int) -> TwinArtifacts:
    """Shared expert, lossless or rank-r twins, and the router."""

    shared = build_shared(zoo, recipe, seed)
    twins = tuple(extract_twins(shared, zoo.experts, recipe.twin_rank))
    router = fit_router(zoo.suite, ToyModel(architecture=zoo.architecture, params=shared), router_config, seed)

    return TwinArtifacts(shared=shared, twins=twins, router=router)


def storage_for(zoo: Zoo, experts: ExpertConfig, twins: Sequence[TwinVector], router: Router | None) -> StorageAccount:
    """Storage accounting of a twin deployment of the zoo."""

    architecture = zoo.architecture
    total = architecture.parameter_count
    if experts.use_adapter:
        shapes = [architecture.weight_shape(e) for e in parse_layers(experts.adapter_modules)]
        adapted = sum(rows * cols for rows, cols in shapes)
    else:
        adapted = total

    stored = sum(t.parameter_count for t in twins)
    dense = sum(t.dense_parameter_count for t in twins)
    ratio = min(1.0, stored / dense) if dense else 1.0
    router_params = 0 if router is None else sum(int(e.size) for e in (*router.weights, *router.biases))

    return storage_report(
        T=len(twins), P=total, P_a=adapted, P_f=total - adapted, P_r=router_params, k=max(ratio, 1e-12)
    )


def evaluate_twin(  # pylint: disable=R0913,R0917
    zoo: Zoo,
    artifacts: TwinArtifacts,
    config: EvalConfig,
    seed: int,
    twins: Sequence[TwinVector] | None = None,
    experts: ExpertConfig | None = None,
) -> ExperimentReport:
    """Runs the inference loop with the artifacts, optionally with other twins."""

    selected = artifacts.twins if twins is None else tuple(twins)
    storage = None if experts is None else storage_for(zoo, experts, selected, artifacts.router)

    return run_inference(
        artifacts.shared,
        selected,
        artifacts.router,
        zoo.suite,
        zoo.architecture,
        zoo.ft_scores,
        mode=config.mode,
        group_count=config.group_count,
        seed=seed,
        oracle=config.oracle,
        alphas=config.alphas,
        batch_size=config.batch_size,
        storage=storage,
    )


def evaluate_static(zoo: Zoo, params: Checkpoint) -> tuple[list[float], float]:
    """Per-task test scores and the normalized score of a checkpoint."""

    scores = split_scores(zoo, params)

    return scores, normalized_score(scores, zoo.ft_scores)
