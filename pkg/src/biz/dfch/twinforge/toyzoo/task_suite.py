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

"""Synthetic multi-task suites."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import read_tensors, write_tensors
from ..errors import ArgumentError, DataError, FormatError
from ..linalg import DTYPE
from ..seeding import make_rng
from .split_name import SplitName

NOISE_SIGMA = 0.5
LAYOUT_NORM = 8.0
MAX_VALIDATION_ITEMS = 1000
_SUITE_KIND = "suite"


@dataclass(frozen=True)
class TaskSplit:
    """Features (n x d, float32) and class labels (n, int64) of one split."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        assert self.x.ndim == 2, self.x.shape
        assert self.y.ndim == 1 and self.y.shape[0] == self.x.shape[0], (self.x.shape, self.y.shape)

    def __len__(self) -> int:
        return int(self.y.shape[0])


@dataclass(frozen=True)
class TaskData:
    """Train, validation and test split of one task."""

    train: TaskSplit
    validation: TaskSplit
    test: TaskSplit

    def split(self, name: SplitName) -> TaskSplit:
        """Returns the split called `name`."""

        assert isinstance(name, SplitName)

        return getattr(self, name.value)


@dataclass(frozen=True)
class TaskSuite:  # pylint: disable=R0902
    """T classification tasks over a shared input space with mixture weights.

    `layout` holds the global class means (c x d), `means` the per-task class
    means (T x c x d).
    """

    tasks: tuple[TaskData, ...]
    alphas: tuple[float, ...]
    seed: int
    classes: int
    shared_strength: float
    layout: np.ndarray
    means: np.ndarray

    def __post_init__(self):
        if len(self.alphas) != len(self.tasks):
            raise DataError(f"{len(self.alphas)} mixture weights for {len(self.tasks)} tasks.")
        if any(a <= 0.0 for a in self.alphas) or not math.isclose(sum(self.alphas), 1.0, abs_tol=1e-9):
            raise DataError(f"Mixture weights must be positive and sum to 1: {self.alphas}.")
        for idx, task in enumerate(self.tasks):
            if len(task.validation) > MAX_VALIDATION_ITEMS:
                raise DataError(f"Task {idx}: {len(task.validation)} validation items exceed {MAX_VALIDATION_ITEMS}.")

    @property
    def task_count(self) -> int:
        """Number of tasks T."""

        return len(self.tasks)

    @property
    def input_dim(self) -> int:
        """Feature dimension d."""

        return int(self.layout.shape[1])

    def subset(self, indices: Sequence[int]) -> TaskSuite:
        """A suite of the selected tasks with renormalised mixture weights."""

        if not indices:
            raise ArgumentError("A task subset must not be empty.")

        total = sum(self.alphas[i] for i in indices)
        return TaskSuite(
            tasks=tuple(self.tasks[i] for i in indices),
            alphas=tuple(self.alphas[i] / total for i in indices),
            seed=self.seed,
            classes=self.classes,
            shared_strength=self.shared_strength,
            layout=self.layout,
            means=self.means[list(indices)],
        )

    def save(self, path: Path | str) -> None:
        """Writes the suite as `task{t}.x`, `task{t}.y`, `task{t}.means` and `layout`."""

        tensors: dict[str, np.ndarray] = {"layout": self.layout.astype(DTYPE)}
        splits: list[str] = []
        for t, task in enumerate(self.tasks):
            parts = (task.train, task.validation, task.test)
            tensors[f"task{t}.x"] = np.concatenate([e.x for e in parts]).astype(DTYPE)
            tensors[f"task{t}.y"] = np.concatenate([e.y for e in parts]).astype(DTYPE)
            tensors[f"task{t}.means"] = self.means[t].astype(DTYPE)
            splits.append(":".join(str(len(e)) for e in parts))

        meta = {
            "kind": _SUITE_KIND,
            "seed": str(self.seed),
            "alphas": ",".join(repr(float(a)) for a in self.alphas),
            "classes": str(self.classes),
            "shared_strength": repr(float(self.shared_strength)),
            "splits": ",".join(splits),
        }
        write_tensors(Path(path), tensors, meta)

    @staticmethod
    def load(path: Path | str) -> TaskSuite:
        """Reads a suite written by `save`."""

        tensors, meta = read_tensors(Path(path))
        if meta.get("kind") != _SUITE_KIND:
            raise FormatError(f"'{path}': not a task suite (kind='{meta.get('kind')}').")

        try:
            alphas = tuple(float(e) for e in meta["alphas"].split(","))
            splits = [tuple(int(n) for n in e.split(":")) for e in meta["splits"].split(",")]
            tasks: list[TaskData] = []
            for t, (n_train, n_val, _) in enumerate(splits):
                x, y = tensors[f"task{t}.x"], tensors[f"task{t}.y"].astype(np.int64)
                bounds = (0, n_train, n_train + n_val, x.shape[0])
                parts = [TaskSplit(x=x[lo:hi], y=y[lo:hi]) for lo, hi in zip(bounds, bounds[1:])]
                tasks.append(TaskData(*parts))
            means = np.stack([tensors[f"task{t}.means"] for t in range(len(splits))])

            return TaskSuite(
                tasks=tuple(tasks),
                alphas=alphas,
                seed=int(meta["seed"]),
                classes=int(meta["classes"]),
                shared_strength=float(meta["shared_strength"]),
                layout=tensors["layout"],
                means=means,
            )
        except (KeyError, ValueError, AssertionError) as ex:
            raise FormatError(f"'{path}': invalid suite: {ex}") from ex


def split_sizes(n_per_task: int) -> tuple[int, int, int]:
    """Train, validation and test sizes: 60/20/20 with at most 1000 validation items."""

    n_test = n_per_task // 5
    n_val = min(MAX_VALIDATION_ITEMS, n_per_task // 5)

    return n_per_task - n_val - n_test, n_val, n_test


def _haar_orthogonal(rng: np.random.Generator, m: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((m, m)))
    return q * np.sign(np.diag(r))


def gen_suite(  # pylint: disable=R0913,R0914,R0917
    task_count: int = 4,
    input_dim: int = 32,
    classes: int = 4,
    n_per_task: int = 2000,
    shared_strength: float = 0.5,
    seed: int = 0,
    alphas: Sequence[float] | None = None,
) -> TaskSuite:
    """Generates a seeded suite of Gaussian-cluster classification tasks.

    The global layout places c class means of norm 8 in a random subspace Q
    of dimension min(d, 2c). Task t sees the layout rotated by a seeded Haar
    rotation O_t inside Q, and its class means are

        shared_strength * L_k + (1 - shared_strength) * Q O_t Q^T L_k.

    Samples are drawn with isotropic noise sigma = 0.5 and balanced labels.

    Raises:
        ArgumentError: On out-of-range parameters.
    """

    if task_count < 2:
        raise ArgumentError(f"A suite needs at least 2 tasks, got {task_count}.")
    if input_dim < 1 or classes < 2:
        raise ArgumentError(f"Invalid dimensions: input_dim={input_dim}, classes={classes}.")
    if n_per_task < 5:
        raise ArgumentError(f"n_per_task must be at least 5, got {n_per_task}.")
    if not 0.0 <= shared_strength <= 1.0:
        raise ArgumentError(f"shared_strength must be in [0, 1], got '{shared_strength}'.")

    if alphas is None:
        mixture = tuple([1.0 / task_count] * task_count)
    else:
        mixture = tuple(float(a) for a in alphas)
        if len(mixture) != task_count or any(a <= 0.0 for a in mixture):
            raise ArgumentError(f"Expected {task_count} positive mixture weights, got {mixture}.")
        total = sum(mixture)
        mixture = tuple(a / total for a in mixture)

    rng = make_rng(seed, 0)
    subspace_dim = min(input_dim, 2 * classes)
    q, _ = np.linalg.qr(rng.standard_normal((input_dim, subspace_dim)))
    coefficients = rng.standard_normal((classes, subspace_dim))
    coefficients *= LAYOUT_NORM / np.linalg.norm(coefficients, axis=1, keepdims=True)
    layout = coefficients @ q.T

    n_train, n_val, _ = split_sizes(n_per_task)
    tasks: list[TaskData] = []
    means: list[np.ndarray] = []
    for t in range(task_count):
        task_rng = make_rng(seed, 1, t)
        rotated = (coefficients @ _haar_orthogonal(task_rng, subspace_dim).T) @ q.T
        task_means = shared_strength * layout + (1.0 - shared_strength) * rotated
        means.append(task_means)

        y = task_rng.permutation(np.arange(n_per_task) % classes)
        x = task_means[y] + NOISE_SIGMA * task_rng.standard_normal((n_per_task, input_dim))
        x = x.astype(DTYPE)

        bounds = (0, n_train, n_train + n_val, n_per_task)
        parts = [TaskSplit(x=x[lo:hi], y=y[lo:hi].astype(np.int64)) for lo, hi in zip(bounds, bounds[1:])]
        tasks.append(TaskData(*parts))

    log.debug(
        "Generated suite: T=%d d=%d c=%d n=%d strength=%s seed=%d.",
        task_count,
        input_dim,
        classes,
        n_per_task,
        shared_strength,
        seed,
    )

    return TaskSuite(
        tasks=tuple(tasks),
        alphas=mixture,
        seed=seed,
        classes=classes,
        shared_strength=float(shared_strength),
        layout=layout.astype(DTYPE),
        means=np.stack(means).astype(DTYPE),
    )
