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

"""Twin merging: shared expert, exclusive twin vectors and dynamic merging."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import Checkpoint, Delta, diff, ensure_compatible, restore_frozen
from ..compress import TwinVector, decompress, svd_compress
from ..errors import ArgumentError
from ..linalg import DTYPE
from .baselines import task_arithmetic

SHARED_NAME = "shared"


def extract_twins(shared: Checkpoint, experts: Sequence[Checkpoint], rank: int | None) -> list[TwinVector]:
    """Compresses the exclusive knowledge experts[t] - shared of every expert."""

    ensure_compatible(shared, *experts)

    result: list[TwinVector] = []
    for idx, expert in enumerate(experts):
        source_meta = {
            "shared": shared.meta.get("name", SHARED_NAME),
            "expert": expert.meta.get("name", f"expert{idx}"),
        }
        result.append(svd_compress(diff(expert, shared), rank, source_meta))

    return result


def twin_preprocess(
    base: Checkpoint,
    experts: Sequence[Checkpoint],
    gammas: Sequence[float],
    rank: int | None,
) -> tuple[Checkpoint, list[TwinVector]]:
    """Builds the shared expert by task arithmetic and the twin vectors against it.

    Runs once per expert set; the result serves every inference batch.

    Args:
        base (Checkpoint): The pretrained model.
        experts (Sequence[Checkpoint]): The fine-tuned experts.
        gammas (Sequence[float]): Task arithmetic coefficients of the shared expert.
        rank (int | None): Twin rank, `None` for lossless twins.

    Returns:
        tuple[Checkpoint, list[TwinVector]]: The shared expert and one twin per expert.
    """

    shared = task_arithmetic(base, experts, gammas).with_meta(name=SHARED_NAME)
    twins = extract_twins(shared, experts, rank)

    log.info("Twin pre-calculation done: %d experts, rank %s.", len(experts), rank)

    return shared, twins


class TwinBank:  # pylint: disable=R0903
    """A shared expert and its twins, decompressed once.

    The bank is read-only after construction and can be shared between
    threads.
    """

    shared: Checkpoint
    deltas: tuple[Delta, ...]

    def __init__(self, shared: Checkpoint, twins: Sequence[TwinVector]):
        assert isinstance(shared, Checkpoint)
        for twin in twins:
            assert isinstance(twin, TwinVector), type(twin)

        deltas = tuple(decompress(twin) for twin in twins)
        ensure_compatible(shared, *deltas)

        self.shared = shared
        self.deltas = deltas
        self._frozen = shared.frozen
        self._origin = {name: t.astype(np.float64) for name, t in shared.items()}

    @property
    def task_count(self) -> int:
        """Number of twins."""

        return len(self.deltas)

    def merge(self, w: Sequence[float] | np.ndarray) -> Checkpoint:
        """Returns shared + sum_t w[t] * twin[t].

        Raises:
            ArgumentError: If `w` has the wrong length or non-finite entries.
        """

        weights = np.asarray(w, dtype=np.float64)
        if weights.shape != (self.task_count,):
            raise ArgumentError(f"Expected {self.task_count} weights, got shape {weights.shape}.")
        if not np.all(np.isfinite(weights)):
            raise ArgumentError(f"Weights must be finite: {weights.tolist()}.")

        result: dict[str, np.ndarray] = {}
        for name, origin in self._origin.items():
            acc = origin.copy()
            for delta, weight in zip(self.deltas, weights, strict=True):
                if weight != 0.0:
                    acc += weight * delta[name].astype(np.float64)
            result[name] = acc.astype(DTYPE)

        merged = Checkpoint(result, dict(self.shared.meta))

        return restore_frozen(merged, self.shared, self._frozen)


def dynamic_merge(shared: Checkpoint, twins: Sequence[TwinVector], w: Sequence[float]) -> Checkpoint:
    """Merges the twins onto the shared expert with input-specific weights `w`.

    Raises:
        ArgumentError: If |w| != |twins| or `w` is not finite.
        CompatibilityError: If a twin does not match the shared expert.
    """

    if len(w) != len(twins):
        raise ArgumentError(f"{len(twins)} twins but {len(w)} weights.")

    return TwinBank(shared, twins).merge(w)

