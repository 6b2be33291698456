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

"""Router class and its serialization."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..checkpoint import read_tensors, write_tensors
from ..errors import ArgumentError, FormatError
from ..linalg import DTYPE
from ..seeding import make_rng
from .routing_decision import RoutingDecision

LEAKY_SLOPE = 0.01
BN_EPSILON = 1e-5
_ROUTER_KIND = "router"


def leaky_relu(x: np.ndarray, slope: float) -> np.ndarray:
    """max(x, 0) + slope * min(x, 0)."""

    return np.where(x > 0.0, x, slope * x)


@dataclass(frozen=True)
class Router:
    """Three affine layers with batch normalization and leaky ReLU in between.

    layer0 -> bn0 -> leaky -> layer1 -> bn1 -> leaky -> layer2. Routing runs in
    eval mode and normalizes with the running statistics only, so a decision
    does not depend on the other inputs of a batch.
    """

    weights: tuple[np.ndarray, np.ndarray, np.ndarray]
    biases: tuple[np.ndarray, np.ndarray, np.ndarray]
    running_mean: tuple[np.ndarray, np.ndarray]
    running_var: tuple[np.ndarray, np.ndarray]
    leaky_slope: float = LEAKY_SLOPE

    def __post_init__(self):
        assert len(self.weights) == len(self.biases) == 3
        assert len(self.running_mean) == len(self.running_var) == 2
        for w, b in zip(self.weights, self.biases, strict=True):
            assert w.ndim == 2 and b.shape == (w.shape[0],), (w.shape, b.shape)
        for var in self.running_var:
            if not np.all(var > 0.0):
                raise ArgumentError("Running variances must be positive.")

    @property
    def dims(self) -> tuple[int, int, int, int]:
        """(embed_dim, hidden_dim, hidden_dim, T)."""

        w0, w1, w2 = self.weights
        return (int(w0.shape[1]), int(w0.shape[0]), int(w1.shape[0]), int(w2.shape[0]))

    @property
    def embed_dim(self) -> int:
        """Input dimension."""

        return self.dims[0]

    @property
    def task_count(self) -> int:
        """Output dimension T."""

        return self.dims[3]

    def logits(self, embeddings: np.ndarray) -> np.ndarray:
        """Eval-mode logits for a batch (n x embed_dim).

        Raises:
            ArgumentError: If the embedding dimension does not match.
        """

        x = np.asarray(embeddings, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.embed_dim:
            raise ArgumentError(f"Embedding shape {x.shape} does not match embed_dim {self.embed_dim}.")

        h = x
        for idx in range(2):
            z = h @ self.weights[idx].astype(np.float64).T + self.biases[idx].astype(np.float64)
            mean = self.running_mean[idx].astype(np.float64)
            var = self.running_var[idx].astype(np.float64)
            h = leaky_relu((z - mean) / np.sqrt(var + BN_EPSILON), self.leaky_slope)

        return h @ self.weights[2].astype(np.float64).T + self.biases[2].astype(np.float64)

    def route_batch(self, embeddings: np.ndarray) -> list[RoutingDecision]:
        """One decision per row of `embeddings`."""

        return [RoutingDecision.from_logits(row) for row in self.logits(embeddings)]

    def route(self, emb: np.ndarray) -> RoutingDecision:
        """The decision for a single embedding vector."""

        vector = np.asarray(emb, dtype=np.float64)
        if vector.ndim != 1:
            raise ArgumentError(f"Expected an embedding vector, got shape {vector.shape}.")

        return RoutingDecision.from_logits(self.logits(vector[np.newaxis, :])[0])

    def save(self, path: Path | str) -> None:
        """Writes `layer{0,1,2}.{w,b}` and `bn{0,1}.{mean,var}`."""

        tensors: dict[str, np.ndarray] = {}
        for idx, (w, b) in enumerate(zip(self.weights, self.biases, strict=True)):
            tensors[f"layer{idx}.w"] = w.astype(DTYPE)
            tensors[f"layer{idx}.b"] = b.astype(DTYPE)
        for idx, (mean, var) in enumerate(zip(self.running_mean, self.running_var, strict=True)):
            tensors[f"bn{idx}.mean"] = mean.astype(DTYPE)
            tensors[f"bn{idx}.var"] = var.astype(DTYPE)

        meta = {"kind": _ROUTER_KIND, "tasks": str(self.task_count), "leaky_slope": repr(self.leaky_slope)}
        write_tensors(Path(path), tensors, meta)

    @staticmethod
    def load(path: Path | str) -> Router:
        """Reads a router written by `save`."""

        tensors, meta = read_tensors(Path(path))
        if meta.get("kind") != _ROUTER_KIND:
            raise FormatError(f"'{path}': not a router (kind='{meta.get('kind')}').")

        try:
            router = Router(
                weights=tuple(tensors[f"layer{i}.w"] for i in range(3)),  # type: ignore[arg-type]
                biases=tuple(tensors[f"layer{i}.b"] for i in range(3)),  # type: ignore[arg-type]
                running_mean=tuple(tensors[f"bn{i}.mean"] for i in range(2)),  # type: ignore[arg-type]
                running_var=tuple(tensors[f"bn{i}.var"] for i in range(2)),  # type: ignore[arg-type]
                leaky_slope=float(meta.get("leaky_slope", repr(LEAKY_SLOPE))),
            )
        except (KeyError, ValueError, AssertionError) as ex:
            raise FormatError(f"'{path}': invalid router: {ex}") from ex

        if str(router.task_count) != meta.get("tasks"):
            raise FormatError(
                f"'{path}': metadata declares {meta.get('tasks')} tasks, layers give {router.task_count}."
            )

        return router


def init_router(embed_dim: int, task_count: int, hidden_dim: int = 64, seed: int = 0) -> Router:
    """A fresh router: uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) hidden layers, zero final layer,
    running mean 0 and running variance 1.

    The zero final layer routes every input uniformly.
    """

    if embed_dim < 1 or hidden_dim < 1 or task_count < 1:
        raise ArgumentError(f"Invalid router dims: embed={embed_dim}, hidden={hidden_dim}, tasks={task_count}.")

    rng = make_rng(seed, 4)
    weights: list[np.ndarray] = []
    biases: list[np.ndarray] = []
    for fan_in, fan_out in ((embed_dim, hidden_dim), (hidden_dim, hidden_dim)):
        bound = 1.0 / np.sqrt(fan_in)
        weights.append(rng.uniform(-bound, bound, size=(fan_out, fan_in)).astype(DTYPE))
        biases.append(rng.uniform(-bound, bound, size=fan_out).astype(DTYPE))
    weights.append(np.zeros((task_count, hidden_dim), dtype=DTYPE))
    biases.append(np.zeros(task_count, dtype=DTYPE))

    return Router(
        weights=(weights[0], weights[1], weights[2]),
        biases=(biases[0], biases[1], biases[2]),
        running_mean=(np.zeros(hidden_dim, dtype=DTYPE), np.zeros(hidden_dim, dtype=DTYPE)),
        running_var=(np.ones(hidden_dim, dtype=DTYPE), np.ones(hidden_dim, dtype=DTYPE)),
    )


def route(r: Router, emb: np.ndarray) -> RoutingDecision:
    """w = softmax(R(emb)) in eval mode."""

    assert isinstance(r, Router)

    return r.route(emb)
