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

"""ToyModel class and the forward pass."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from ..checkpoint import Checkpoint
from ..errors import ShapeError
from .architecture import Architecture
from .toy_layer import ToyLayer


@dataclass(frozen=True)
class Activations:
    """Intermediate values of one forward pass."""

    hidden0: np.ndarray
    hidden1: np.ndarray
    logits: np.ndarray


def forward(weights: Mapping[str, np.ndarray], x: np.ndarray) -> Activations:
    """Forward pass tanh -> tanh -> linear over float64 effective weights."""

    hidden0 = np.tanh(x @ weights[ToyLayer.LAYER0.weight].T + weights[ToyLayer.LAYER0.bias])
    hidden1 = np.tanh(hidden0 @ weights[ToyLayer.LAYER1.weight].T + weights[ToyLayer.LAYER1.bias])
    logits = hidden1 @ weights[ToyLayer.HEAD.weight].T + weights[ToyLayer.HEAD.bias]

    return Activations(hidden0=hidden0, hidden1=hidden1, logits=logits)


@dataclass(frozen=True)
class ToyModel:
    """A toy MLP with optional low-rank adapters.

    Adapters are stored as `<layer>.lora_a` (rho x d_in) and `<layer>.lora_b`
    (d_out x rho); the effective weight of an adapted layer is W + B @ A.
    """

    architecture: Architecture
    params: Checkpoint
    adapter: Checkpoint | None = None

    def __post_init__(self):
        assert isinstance(self.architecture, Architecture)
        assert isinstance(self.params, Checkpoint)

        expected = self.architecture.shapes()
        if self.params.shapes != expected:
            raise ShapeError(f"Parameters {self.params.shapes} do not match architecture {expected}.")

        if self.adapter is None:
            return

        assert isinstance(self.adapter, Checkpoint)
        for layer in self.adapted_layers:
            d_out, d_in = self.architecture.weight_shape(layer)
            a, b = self.adapter[layer.lora_a], self.adapter[layer.lora_b]
            if a.ndim != 2 or b.ndim != 2 or a.shape[1] != d_in or b.shape[0] != d_out or a.shape[0] != b.shape[1]:
                raise ShapeError(f"'{layer}': adapter shapes {a.shape} and {b.shape} do not fit ({d_out}, {d_in}).")

    @property
    def adapted_layers(self) -> tuple[ToyLayer, ...]:
        """Layers carrying an adapter."""

        if self.adapter is None:
            return ()

        return tuple(layer for layer in ToyLayer if layer.lora_a in self.adapter)

    def effective_weights(self) -> dict[str, np.ndarray]:
        """All tensors in float64 with adapters folded in."""

        result = {name: t.astype(np.float64) for name, t in self.params.items()}
        for layer in self.adapted_layers:
            assert self.adapter is not None
            a = self.adapter[layer.lora_a].astype(np.float64)
            b = self.adapter[layer.lora_b].astype(np.float64)
            result[layer.weight] = result[layer.weight] + b @ a

        return result

    def _inputs(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.ndim == 1:
            x = x[np.newaxis, :]
        if x.ndim != 2 or x.shape[1] != self.architecture.input_dim:
            raise ShapeError(f"Input shape {x.shape} does not match input dimension {self.architecture.input_dim}.")

        return x

    def forward(self, x: np.ndarray) -> Activations:
        """Forward pass over a batch (n x d) or a single input (d)."""

        return forward(self.effective_weights(), self._inputs(x))

    def embed(self, x: np.ndarray) -> np.ndarray:
        """Penultimate activations (n x h)."""

        return self.forward(x).hidden1

    def predict(self, x: np.ndarray) -> np.ndarray:
        """Predicted class per input."""

        return np.argmax(self.forward(x).logits, axis=1)
