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

"""Folding of low-rank adapters into dense checkpoints."""

from __future__ import annotations

import numpy as np

from ..checkpoint import Checkpoint, Delta
from ..errors import StateError
from ..linalg import DTYPE
from .toy_model import ToyModel


def _ensure_adapter(m: ToyModel) -> None:
    assert isinstance(m, ToyModel)

    if m.adapter is None:
        raise StateError("The model has no adapter.")


def adapter_delta(m: ToyModel) -> Delta:
    """The dense update B @ A per adapted layer, zero elsewhere.

    Raises:
        StateError: If the model has no adapter.
    """

    _ensure_adapter(m)
    assert m.adapter is not None

    params = {name: np.zeros_like(t) for name, t in m.params.items()}
    for layer in m.adapted_layers:
        a = m.adapter[layer.lora_a].astype(np.float64)
        b = m.adapter[layer.lora_b].astype(np.float64)
        params[layer.weight] = (b @ a).astype(DTYPE)

    return Delta(params)


def merge_adapter(m: ToyModel) -> Checkpoint:
    """Dense checkpoint with W + B @ A folded into every adapted layer.

    Raises:
        StateError: If the model has no adapter.
    """

    _ensure_adapter(m)

    folded = m.effective_weights()

    return Checkpoint({name: t.astype(DTYPE) for name, t in folded.items()}, dict(m.params.meta))
