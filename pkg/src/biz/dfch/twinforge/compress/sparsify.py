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

"""Magnitude pruning and drop-and-rescale (DARE) sparsification of deltas."""

from __future__ import annotations

import math
import zlib
from collections.abc import Sequence

import numpy as np

from ..checkpoint import Checkpoint, Delta
from ..errors import ArgumentError
from ..linalg import DTYPE

# Guards ceil() against products such as 0.7 * 10 = 7.000000000000001.
_CEIL_EPSILON = 1e-9


def keep_count(density: float, n: int) -> int:
    """Number of entries magnitude pruning keeps: ceil(density * n)."""

    return min(n, max(0, math.ceil(density * n - _CEIL_EPSILON)))


def prune_tensor(tensor: np.ndarray, density: float) -> np.ndarray:
    """Keeps the ceil(density * n) largest-magnitude entries of one tensor.

    Equal magnitudes keep the lower flat index.
    """

    flat = tensor.reshape(-1)
    k = keep_count(density, flat.size)
    if k >= flat.size:
        return tensor.copy()

    order = np.argsort(-np.abs(flat), kind="stable")
    result = np.zeros_like(flat)
    keep = order[:k]
    result[keep] = flat[keep]

    return result.reshape(tensor.shape)


def magnitude_prune(d: Checkpoint, density: float) -> Delta:
    """Per-tensor top-`density` magnitude pruning without rescaling.

    Raises:
        ArgumentError: If `density` is not in (0, 1].
    """

    if not 0.0 < density <= 1.0:
        raise ArgumentError(f"Density must be in (0, 1], got '{density}'.")

    return Delta({name: prune_tensor(t, density) for name, t in d.items()}, dict(d.meta))


def name_stream(seed: int | Sequence[int], name: str) -> np.random.Generator:
    """A random stream keyed by the seed and a stable hash of a tensor name."""

    entropy = [int(seed)] if isinstance(seed, (int, np.integer)) else [int(e) for e in seed]
    entropy.append(zlib.crc32(name.encode("utf-8")))

    return np.random.default_rng(np.random.SeedSequence(entropy))


def dare_drop(d: Checkpoint, p: float, seed: int | Sequence[int]) -> Delta:
    """Drops each entry with probability `p` and rescales survivors by 1 / (1 - p).

    Every tensor draws its mask from its own name-keyed stream, so the result
    does not depend on the order tensors are processed in.

    Raises:
        ArgumentError: If `p` is not in [0, 1).
    """

    if not 0.0 <= p < 1.0:
        raise ArgumentError(f"Drop rate must be in [0, 1), got '{p}'.")

    if p == 0.0:
        return Delta(dict(d.params), dict(d.meta))

    keep = 1.0 - p
    result: dict[str, np.ndarray] = {}
    for name, tensor in d.items():
        mask = name_stream(seed, name).random(tensor.shape) < keep
        result[name] = np.where(mask, tensor / DTYPE(keep), DTYPE(0)).astype(DTYPE)

    return Delta(result, dict(d.meta))
