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

"""Weight averaging, task arithmetic and ties merging, with optional DARE."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

import numpy as np

from ..checkpoint import Checkpoint, Delta, axpy, diff, ensure_compatible, ensure_frozen_identical, restore_frozen
from ..compress import dare_drop, prune_tensor
from ..errors import ArgumentError
from ..linalg import DTYPE


def _ensure_experts(experts: Sequence[Checkpoint]) -> None:
    if len(experts) < 1:
        raise ArgumentError("At least one expert is required.")
    for expert in experts:
        assert isinstance(expert, Checkpoint), type(expert)


def _ensure_ties_arguments(density: float, lambda_: float) -> None:
    if not 0.0 < density <= 1.0:
        raise ArgumentError(f"Density must be in (0, 1], got '{density}'.")
    if not np.isfinite(lambda_):
        raise ArgumentError(f"Lambda must be finite, got '{lambda_}'.")


def _ties(
    base: Checkpoint,
    deltas: Sequence[Mapping[str, np.ndarray]],
    density: float,
    lambda_: float,
) -> Checkpoint:
    # Trim, elect sign, disjoint mean. A zero sum elects sign 0 and merges to 0.
    result: dict[str, np.ndarray] = {}
    for name, tensor in base.items():
        trimmed = np.stack([prune_tensor(d[name].astype(np.float64), density) for d in deltas])
        elected = np.sign(trimmed.sum(axis=0))
        agree = (np.sign(trimmed) == elected) & (trimmed != 0.0)
        count = agree.sum(axis=0)
        total = np.where(agree, trimmed, 0.0).sum(axis=0)
        merged = np.divide(total, count, out=np.zeros_like(total), where=count > 0)
        result[name] = (tensor.astype(np.float64) + float(lambda_) * merged).astype(DTYPE)

    return Checkpoint(result, dict(base.meta))


def task_vectors(base: Checkpoint, experts: Sequence[Checkpoint]) -> list[Delta]:
    """Per-expert float32 differences `diff(expert, base)`, in expert order."""

    return [diff(expert, base) for expert in experts]


def weight_average(experts: Sequence[Checkpoint]) -> Checkpoint:
    """Per-tensor arithmetic mean of the experts."""

    _ensure_experts(experts)
    ensure_compatible(experts[0], *experts)
    frozen = ensure_frozen_identical(experts[0], experts[1:])

    count = len(experts)
    result = axpy(Checkpoint.zeros_like(experts[0]), list(experts), [1.0 / count] * count)

    return restore_frozen(result, experts[0], frozen)


def task_arithmetic(base: Checkpoint, experts: Sequence[Checkpoint], gammas: Sequence[float]) -> Checkpoint:
    """Returns axpy(base, task_vectors(base, experts), gammas).

    A single expert with a coefficient of one is reproduced bit-exactly
    whenever its float32 task vector is exact.
    """

    _ensure_experts(experts)
    if len(gammas) != len(experts):
        raise ArgumentError(f"{len(experts)} experts but {len(gammas)} gammas.")
    if not all(np.isfinite(g) for g in gammas):
        raise ArgumentError(f"Gammas must be finite: {list(gammas)}.")
    ensure_compatible(base, *experts)
    frozen = ensure_frozen_identical(base, experts)

    result = axpy(base, task_vectors(base, experts), gammas)

    return restore_frozen(result, base, frozen)


def ties_merge(base: Checkpoint, experts: Sequence[Checkpoint], density: float, lambda_: float) -> Checkpoint:
    """Ties merging of the experts' task vectors onto `base`.

    Each task vector is trimmed to its top-`density` magnitudes. Per
    coordinate the elected sign is the sign of the sum of the trimmed values
    and the merged value is the mean of the nonzero trimmed values carrying
    that sign. The result is base + lambda_ * merged.

    Raises:
        ArgumentError: If `density` is not in (0, 1] or `lambda_` is not finite.
    """

    _ensure_experts(experts)
    _ensure_ties_arguments(density, lambda_)
    ensure_compatible(base, *experts)
    frozen = ensure_frozen_identical(base, experts)

    result = _ties(base, task_vectors(base, experts), density, lambda_)

    return restore_frozen(result, base, frozen)


def dare_deltas(base: Checkpoint, experts: Sequence[Checkpoint], drop_rate: float, seed: int) -> list[Delta]:
    """Task vectors of the experts after drop-and-rescale; task t draws from stream (seed, t)."""

    _ensure_experts(experts)

    return [dare_drop(d, drop_rate, (seed, idx)) for idx, d in enumerate(task_vectors(base, experts))]


def task_arithmetic_dare(
    base: Checkpoint,
    experts: Sequence[Checkpoint],
    gammas: Sequence[float],
    drop_rate: float,
    seed: int,
) -> Checkpoint:
    """Task arithmetic over drop-and-rescaled task vectors."""

    frozen = ensure_frozen_identical(base, experts)
    deltas = dare_deltas(base, experts, drop_rate, seed)

    return restore_frozen(axpy(base, deltas, gammas), base, frozen)


def ties_merge_dare(  # pylint: disable=R0913,R0917
    base: Checkpoint,
    experts: Sequence[Checkpoint],
    density: float,
    lambda_: float,
    drop_rate: float,
    seed: int,
) -> Checkpoint:
    """Ties merging over drop-and-rescaled task vectors."""

    _ensure_ties_arguments(density, lambda_)
    frozen = ensure_frozen_identical(base, experts)
    deltas = dare_deltas(base, experts, drop_rate, seed)

    return restore_frozen(_ties(base, deltas, density, lambda_), base, frozen)
