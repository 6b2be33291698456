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

"""Minibatch gradient descent with momentum for toy models."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import Checkpoint
from ..errors import ArgumentError, DataError, ShapeError, TrainingError
from ..linalg import DTYPE
from ..seeding import make_rng
from .architecture import Architecture
from .model_factory import DEFAULT_ADAPTER_RANK, init_model, with_adapter
from .task_suite import NOISE_SIGMA, TaskSplit, TaskSuite
from .toy_layer import ToyLayer
from .toy_model import ToyModel, forward

DEFAULT_BATCH_SIZE = 64
DEFAULT_MOMENTUM = 0.9


def softmax(logits: np.ndarray) -> np.ndarray:
    """Row-wise softmax."""

    shifted = logits - np.max(logits, axis=-1, keepdims=True)
    exps = np.exp(shifted)

    return exps / np.sum(exps, axis=-1, keepdims=True)


def cross_entropy(logits: np.ndarray, y: np.ndarray) -> float:
    """Mean cross-entropy of integer labels."""

    shifted = logits - np.max(logits, axis=1, keepdims=True)
    log_probs = shifted - np.log(np.sum(np.exp(shifted), axis=1, keepdims=True))

    return float(-np.mean(log_probs[np.arange(y.shape[0]), y]))


def _weight_gradients(
    weights: Mapping[str, np.ndarray], x: np.ndarray, y: np.ndarray
) -> tuple[float, dict[str, np.ndarray]]:
    """Loss and gradients with respect to the effective weights and biases."""

    act = forward(weights, x)
    n = x.shape[0]

    grad_logits = softmax(act.logits)
    grad_logits[np.arange(n), y] -= 1.0
    grad_logits /= n

    grads: dict[str, np.ndarray] = {}
    grads[ToyLayer.HEAD.weight] = grad_logits.T @ act.hidden1
    grads[ToyLayer.HEAD.bias] = grad_logits.sum(axis=0)

    grad_z1 = (grad_logits @ weights[ToyLayer.HEAD.weight]) * (1.0 - act.hidden1**2)
    grads[ToyLayer.LAYER1.weight] = grad_z1.T @ act.hidden0
    grads[ToyLayer.LAYER1.bias] = grad_z1.sum(axis=0)

    grad_z0 = (grad_z1 @ weights[ToyLayer.LAYER1.weight]) * (1.0 - act.hidden0**2)
    grads[ToyLayer.LAYER0.weight] = grad_z0.T @ x
    grads[ToyLayer.LAYER0.bias] = grad_z0.sum(axis=0)

    return cross_entropy(act.logits, y), grads


class _Optimizer:  # pylint: disable=R0903
    """SGD with momentum: v = mu * v + g; p = p - lr * v."""

    def __init__(self, params: Mapping[str, np.ndarray], lr: float, momentum: float):
        self.lr = lr
        self.momentum = momentum
        self.velocity = {name: np.zeros_like(p) for name, p in params.items()}

    def step(self, params: dict[str, np.ndarray], grads: Mapping[str, np.ndarray]) -> None:
        for name, grad in grads.items():
            v = self.velocity[name]
            v *= self.momentum
            v += grad
            params[name] -= self.lr * v


def _validate(split: TaskSplit, architecture: Architecture, epochs: int, lr: float, batch_size: int) -> None:
    if epochs < 0:
        raise ArgumentError(f"Epochs must be non-negative, got {epochs}.")
    if not np.isfinite(lr) or lr <= 0.0:
        raise ArgumentError(f"Learning rate must be positive, got '{lr}'.")
    if batch_size < 1:
        raise ArgumentError(f"Batch size must be positive, got {batch_size}.")
    if split.x.ndim != 2 or split.x.shape[1] != architecture.input_dim:
        raise ShapeError(f"Data shape {split.x.shape} does not match input dimension {architecture.input_dim}.")
    if len(split) == 0:
        raise DataError("Training data must not be empty.")


def _fit_dense(  # pylint: disable=R0913,R0917
    weights: dict[str, np.ndarray],
    split: TaskSplit,
    epochs: int,
    lr: float,
    seed: int,
    batch_size: int,
    momentum: float,
) -> dict[str, np.ndarray]:
    x = split.x.astype(np.float64)
    y = split.y
    optimizer = _Optimizer(weights, lr, momentum)
    rng = make_rng(seed, 2)

    for epoch in range(epochs):
        order = rng.permutation(len(split))
        total = 0.0
        for start in range(0, len(split), batch_size):
            idx = order[start : start + batch_size]
            loss, grads = _weight_gradients(weights, x[idx], y[idx])
            if not np.isfinite(loss):
                raise TrainingError(f"Training diverged in epoch {epoch}: loss={loss}.")
            total += loss * idx.shape[0]
            optimizer.step(weights, grads)
        log.debug("Epoch %d: loss %.6f.", epoch, total / len(split))

    return weights


def _fit_adapter(  # pylint: disable=R0913,R0914,R0917
    model: ToyModel,
    split: TaskSplit,
    epochs: int,
    lr: float,
    seed: int,
    batch_size: int,
    momentum: float,
) -> dict[str, np.ndarray]:
    assert model.adapter is not None

    x = split.x.astype(np.float64)
    y = split.y
    base = {name: t.astype(np.float64) for name, t in model.params.items()}
    factors = {name: t.astype(np.float64) for name, t in model.adapter.items()}
    layers = model.adapted_layers
    optimizer = _Optimizer(factors, lr, momentum)
    rng = make_rng(seed, 2)

    for epoch in range(epochs):
        order = rng.permutation(len(split))
        total = 0.0
        for start in range(0, len(split), batch_size):
            idx = order[start : start + batch_size]
            weights = dict(base)
            for layer in layers:
                weights[layer.weight] = base[layer.weight] + factors[layer.lora_b] @ factors[layer.lora_a]
            loss, grads = _weight_gradients(weights, x[idx], y[idx])
            if not np.isfinite(loss):
                raise TrainingError(f"Adapter training diverged in epoch {epoch}: loss={loss}.")
            total += loss * idx.shape[0]

            # dW_eff = G  =>  dA = B^T G, dB = G A^T
            adapter_grads: dict[str, np.ndarray] = {}
            for layer in layers:
                grad = grads[layer.weight]
                adapter_grads[layer.lora_a] = factors[layer.lora_b].T @ grad
                adapter_grads[layer.lora_b] = grad @ factors[layer.lora_a].T
            optimizer.step(factors, adapter_grads)
        log.debug("Epoch %d: adapter loss %.6f.", epoch, total / len(split))

    return factors


def train_expert(  # pylint: disable=R0913,R0917
    base: ToyModel,
    data: TaskSplit,
    epochs: int,
    lr: float,
    seed: int,
    use_adapter: bool = False,
    adapter_modules: Iterable[ToyLayer] | None = None,
    adapter_rank: int = DEFAULT_ADAPTER_RANK,
    batch_size: int = DEFAULT_BATCH_SIZE,
    momentum: float = DEFAULT_MOMENTUM,
) -> ToyModel:
    """Fine-tunes `base` on one task.

    Full fine-tuning updates every tensor. Adapter training attaches fresh
    adapters to `adapter_modules` (all layers if `None`) and updates only
    their factors; the base tensors stay bit-identical.

    Args:
        base (ToyModel): The model to start from.
        data (TaskSplit): The training split.
        epochs (int): Passes over the data; 0 returns `base` unchanged.
        lr (float): Learning rate.
        seed (int): Seed of adapter initialisation and minibatch order.
        use_adapter (bool): Train adapters instead of all tensors.
        adapter_modules (Iterable[ToyLayer] | None): Layers to adapt.
        adapter_rank (int): Adapter rank rho.
        batch_size (int): Minibatch size.
        momentum (float): Momentum coefficient.

    Returns:
        ToyModel: The fine-tuned model.

    Raises:
        TrainingError: If the loss becomes non-finite.
    """

    assert isinstance(base, ToyModel)
    assert isinstance(data, TaskSplit)

    _validate(data, base.architecture, epochs, lr, batch_size)
    if epochs == 0:
        return base

    if not use_adapter:
        weights = _fit_dense(base.effective_weights(), data, epochs, lr, seed, batch_size, momentum)
        params = Checkpoint({name: t.astype(DTYPE) for name, t in weights.items()}, dict(base.params.meta))
        return ToyModel(architecture=base.architecture, params=params)

    layers = tuple(ToyLayer) if adapter_modules is None else tuple(adapter_modules)
    adapted = with_adapter(base, layers, adapter_rank, seed)
    factors = _fit_adapter(adapted, data, epochs, lr, seed, batch_size, momentum)
    adapter = Checkpoint({name: t.astype(DTYPE) for name, t in factors.items()})

    return ToyModel(architecture=base.architecture, params=base.params, adapter=adapter)


def pretrain_base(  # pylint: disable=R0913,R0917
    suite: TaskSuite,
    architecture: Architecture,
    epochs: int,
    lr: float,
    seed: int,
    batch_size: int = DEFAULT_BATCH_SIZE,
) -> ToyModel:
    """The pretrained model: seeded initialisation, then `epochs` passes over
    samples drawn around the global class layout of `suite`."""

    model = init_model(architecture, seed)
    if epochs == 0:
        return model

    rng = make_rng(seed, 3)
    n = sum(len(task.train) for task in suite.tasks)
    y = rng.permutation(np.arange(n) % suite.classes)
    x = suite.layout.astype(np.float64)[y] + NOISE_SIGMA * rng.standard_normal((n, suite.input_dim))
    pool = TaskSplit(x=x.astype(DTYPE), y=y.astype(np.int64))

    log.info("Pretraining base on %d pooled samples for %d epochs.", n, epochs)

    return train_expert(model, pool, epochs, lr, seed, batch_size=batch_size)
