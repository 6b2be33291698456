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

"""Construction of toy models and adapters."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from ..checkpoint import Checkpoint
from ..errors import ArgumentError
from ..linalg import DTYPE
from ..seeding import make_rng
from .architecture import Architecture
from .toy_layer import ToyLayer
from .toy_model import ToyModel

DEFAULT_ADAPTER_RANK = 4


def init_model(architecture: Architecture, seed: int) -> ToyModel:
    """Seeded Xavier-uniform weights and zero biases."""

    assert isinstance(architecture, Architecture)

    rng = make_rng(seed, 0)
    params: dict[str, np.ndarray] = {}
    for layer in ToyLayer:
        d_out, d_in = architecture.weight_shape(layer)
        limit = np.sqrt(6.0 / (d_in + d_out))
        params[layer.weight] = rng.uniform(-limit, limit, size=(d_out, d_in)).astype(DTYPE)
        params[layer.bias] = np.zeros(d_out, dtype=DTYPE)

    return ToyModel(architecture=architecture, params=Checkpoint(params))


def parse_layers(values: Iterable[str] | None) -> tuple[ToyLayer, ...]:
    """Parses layer names; `None` selects every layer.

    Raises:
        ArgumentError: On an unknown layer name.
    """

    if values is None:
        return tuple(ToyLayer)

    result: list[ToyLayer] = []
    for value in values:
        try:
            layer = ToyLayer(value)
        except ValueError as ex:
            raise ArgumentError(f"Unknown layer '{value}'. Valid: {[e.value for e in ToyLayer]}.") from ex
        if layer not in result:
            result.append(layer)

    if not result:
        raise ArgumentError("At least one adapter layer is required.")

    return tuple(sorted(result, key=list(ToyLayer).index))


def with_adapter(
    model: ToyModel,
    layers: Iterable[ToyLayer],
    rank: int = DEFAULT_ADAPTER_RANK,
    seed: int = 0,
    init_scale: float | None = None,
) -> ToyModel:
    """Attaches fresh adapters to `layers`.

    A is drawn from N(0, 1 / d_in); B is zero unless `init_scale` is given, in
    which case B is drawn from N(0, init_scale^2).
    """

    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise ArgumentError(f"Adapter rank must be a positive integer, got '{rank}'.")

    rng = make_rng(seed, 1)
    tensors: dict[str, np.ndarray] = {}
    for layer in layers:
        assert isinstance(layer, ToyLayer)
        d_out, d_in = model.architecture.weight_shape(layer)
        tensors[layer.lora_a] = rng.normal(0.0, 1.0 / np.sqrt(d_in), size=(rank, d_in)).astype(DTYPE)
        if init_scale is None:
            tensors[layer.lora_b] = np.zeros((d_out, rank), dtype=DTYPE)
        else:
            tensors[layer.lora_b] = rng.normal(0.0, init_scale, size=(d_out, rank)).astype(DTYPE)

    return ToyModel(architecture=model.architecture, params=model.params, adapter=Checkpoint(tensors))
