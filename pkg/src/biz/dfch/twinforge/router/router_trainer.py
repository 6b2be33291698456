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

"""Router training by minibatch gradient descent with momentum."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from biz.dfch.logging import log

from ..errors import ArgumentError, DataError, TrainingError
from ..linalg import DTYPE
from ..seeding import make_rng
from .router import BN_EPSILON, Router, init_router, leaky_relu
from .routing_decision import softmax

BN_MOMENTUM = 0.1
MAX_ITEMS_PER_TASK = 1000


@dataclass
class _BatchNormCache:
    normalized: np.ndarray
    inv_std: np.ndarray


def _batch_norm_backward(grad: np.ndarray, cache: _BatchNormCache) -> np.ndarray:
    n = grad.shape[0]
    x_hat = cache.normalized

    return (cache.inv_std / n) * (n * grad - grad.sum(axis=0) - x_hat * (grad * x_hat).sum(axis=0))


@dataclass
class RouterTrainer:  # pylint: disable=R0902
    """Trains a router on (embedding, task id) pairs.

    The loss is the cross-entropy of the task id summed over the minibatch.
    Batch normalization uses batch statistics and updates the running
    statistics with momentum 0.1. `history` holds the mean loss per epoch.
    """

    task_count: int
    epochs: int = 10
    lr: float = 5e-4
    seed: int = 0
    hidden_dim: int = 64
    batch_size: int = 64
    momentum: float = 0.9
    history: list[float] = field(default_factory=list)

    def _validate(self, embeddings: np.ndarray, task_ids: np.ndarray) -> None:
        if self.task_count < 2:
            raise ArgumentError(f"A router needs at least 2 tasks, got {self.task_count}.")
        if embeddings.ndim != 2 or task_ids.ndim != 1 or embeddings.shape[0] != task_ids.shape[0]:
            raise DataError(f"Embeddings {embeddings.shape} and task ids {task_ids.shape} do not align.")
        if not np.all(np.isfinite(embeddings)):
            raise DataError("Embeddings contain non-finite values.")
        if task_ids.size and (task_ids.min() < 0 or task_ids.max() >= self.task_count):
            raise DataError(f"Task ids must be in [0, {self.task_count}).")

        counts = np.bincount(task_ids, minlength=self.task_count)
        for task, count in enumerate(counts):
            if count == 0:
                raise DataError(f"Task {task} has no router training items.")
            if count > MAX_ITEMS_PER_TASK:
                raise DataError(f"Task {task} has {count} router training items, at most {MAX_ITEMS_PER_TASK} allowed.")

    def fit(self, embeddings: np.ndarray, task_ids: np.ndarray) -> Router:  # pylint: disable=R0914
        """Returns the trained router. Zero epochs return the initialized router."""

        x_all = np.asarray(embeddings, dtype=np.float64)
        y_all = np.asarray(task_ids, dtype=np.int64)
        self._validate(x_all, y_all)

        router = init_router(x_all.shape[1], self.task_count, self.hidden_dim, self.seed)
        self.history = []
        if self.epochs == 0:
            return router

        w = [e.astype(np.float64) for e in router.weights]
        b = [e.astype(np.float64) for e in router.biases]
        running_mean = [e.astype(np.float64) for e in router.running_mean]
        running_var = [e.astype(np.float64) for e in router.running_var]
        velocity = [np.zeros_like(e) for e in (*w, *b)]
        rng = make_rng(self.seed, 5)
        n = x_all.shape[0]

        for epoch in range(self.epochs):
            order = rng.permutation(n)
            total, seen = 0.0, 0
            for start in range(0, n, self.batch_size):
                idx = order[start : start + self.batch_size]
                # Batch statistics need at least two items.
                if idx.shape[0] < 2:
                    continue
                x, y = x_all[idx], y_all[idx]

                inputs: list[np.ndarray] = []
                caches: list[_BatchNormCache] = []
                h = x
                for layer in range(2):
                    inputs.append(h)
                    z = h @ w[layer].T + b[layer]
                    mean = z.mean(axis=0)
                    var = z.var(axis=0)
                    inv_std = 1.0 / np.sqrt(var + BN_EPSILON)
                    x_hat = (z - mean) * inv_std
                    caches.append(_BatchNormCache(normalized=x_hat, inv_std=inv_std))
                    running_mean[layer] = (1.0 - BN_MOMENTUM) * running_mean[layer] + BN_MOMENTUM * mean
                    unbiased = var * idx.shape[0] / (idx.shape[0] - 1)
                    running_var[layer] = (1.0 - BN_MOMENTUM) * running_var[layer] + BN_MOMENTUM * unbiased
                    h = leaky_relu(x_hat, router.leaky_slope)
                inputs.append(h)
                logits = h @ w[2].T + b[2]

                probs = softmax(logits)
                loss = float(-np.sum(np.log(probs[np.arange(y.shape[0]), y] + 1e-300)))
                if not np.isfinite(loss):
                    raise TrainingError(f"Router training diverged in epoch {epoch}.")
                total += loss
                seen += y.shape[0]

                grad = probs
                grad[np.arange(y.shape[0]), y] -= 1.0
                grads_w: list[np.ndarray] = [np.empty(0)] * 3
                grads_b: list[np.ndarray] = [np.empty(0)] * 3
                for layer in (2, 1, 0):
                    grads_w[layer] = grad.T @ inputs[layer]
                    grads_b[layer] = grad.sum(axis=0)
                    if layer == 0:
                        break
                    grad = grad @ w[layer]
                    cache = caches[layer - 1]
                    grad = grad * np.where(cache.normalized > 0.0, 1.0, router.leaky_slope)
                    grad = _batch_norm_backward(grad, cache)

                for i, (param, g) in enumerate(zip((*w, *b), (*grads_w, *grads_b), strict=True)):
                    velocity[i] *= self.momentum
                    velocity[i] += g
                    param -= self.lr * velocity[i]

            epoch_loss = total / max(seen, 1)
            self.history.append(epoch_loss)
            log.debug("Router epoch %d: loss %.6f.", epoch, epoch_loss)

        log.info("Router trained: %d items, %d tasks, final loss %.6f.", n, self.task_count, self.history[-1])

        return Router(
            weights=(w[0].astype(DTYPE), w[1].astype(DTYPE), w[2].astype(DTYPE)),
            biases=(b[0].astype(DTYPE), b[1].astype(DTYPE), b[2].astype(DTYPE)),
            running_mean=(running_mean[0].astype(DTYPE), running_mean[1].astype(DTYPE)),
            running_var=(running_var[0].astype(DTYPE), running_var[1].astype(DTYPE)),
            leaky_slope=router.leaky_slope,
        )


def train_router(  # pylint: disable=R0913,R0917
    embeddings: np.ndarray,
    task_ids: np.ndarray,
    task_count: int | None = None,
    epochs: int = 10,
    lr: float = 5e-4,
    seed: int = 0,
    hidden_dim: int = 64,
    batch_size: int = 64,
    momentum: float = 0.9,
) -> Router:
    """Trains a router to predict the task id of an embedding.

    Raises:
        DataError: If a task has no items or more than 1000 items.
    """

    ids = np.asarray(task_ids, dtype=np.int64)
    count = int(ids.max()) + 1 if task_count is None and ids.size else task_count or 0

    trainer = RouterTrainer(
        task_count=count,
        epochs=epochs,
        lr=lr,
        seed=seed,
        hidden_dim=hidden_dim,
        batch_size=batch_size,
        momentum=momentum,
    )

    return trainer.fit(embeddings, ids)
