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

"""SVD compression of deltas into twin vectors, and decompression."""

from __future__ import annotations

import math
from collections.abc import Mapping

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import Checkpoint, Delta
from ..errors import ArgumentError
from ..linalg import SvdFactors, svd, truncate
from .sparsify import _CEIL_EPSILON, dare_drop, magnitude_prune
from .twin_kind import TwinKind
from .twin_vector import TwinVector


def clamp_rank(r: int, shape: tuple[int, ...]) -> int:
    """Clamps a requested rank to min(d_out, d_in)."""

    return min(r, shape[0], shape[1])


def svd_compress(d: Checkpoint, r: int | None, source_meta: Mapping[str, str] | None = None) -> TwinVector:
    """Compresses every matrix of a delta to its top-`r` singular triplets.

    Vectors are stored dense. The rank is clamped per tensor to
    min(d_out, d_in); `None` keeps the full rank of every matrix.

    Raises:
        ArgumentError: If `r` < 1.
    """

    if r is None:
        full = {name: t if t.ndim == 1 else svd(t) for name, t in d.items()}
        return TwinVector(entries=full, rank=None, source_meta=dict(source_meta or {}))

    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or r < 1:
        raise ArgumentError(f"Rank must be a positive integer, got '{r}'.")

    entries: dict[str, SvdFactors | np.ndarray] = {}
    for name, tensor in d.items():
        if tensor.ndim == 1:
            entries[name] = tensor
            continue

        effective = clamp_rank(int(r), tensor.shape)
        if effective < r:
            log.warning("Rank %d clamped to %d for '%s' %s.", r, effective, name, tensor.shape)
        entries[name] = truncate(svd(tensor), effective)

    return TwinVector(entries=entries, rank=int(r), source_meta=dict(source_meta or {}))


def decompress(t: TwinVector) -> Delta:
    """Reconstructs the dense delta: u @ diag(s) @ v.T per matrix, identity for dense entries."""

    assert isinstance(t, TwinVector)

    params: dict[str, np.ndarray] = {}
    for name, entry in t.entries.items():
        params[name] = entry.reconstruct() if isinstance(entry, SvdFactors) else entry

    return Delta(params)


def rank_for_sparsity(shape: tuple[int, int], rate: float) -> int:
    """Rank that keeps a (1 - rate) share of the singular triplets, at least 1.

    A rank-r twin stores r * (d_out + d_in + 1) of the m * (d_out + d_in + 1)
    parameters of the full factorisation, m = min(d_out, d_in).
    """

    full = min(shape)
    return max(1, min(full, math.ceil((1.0 - rate) * full - _CEIL_EPSILON)))


def sparsify_twin(
    d: Checkpoint,
    kind: TwinKind,
    rate: float,
    seed: int,
    source_meta: Mapping[str, str] | None = None,
) -> TwinVector:
    """Compresses an exclusive delta at sparsity `rate` with the given method.

    `svd` keeps the per-matrix rank from `rank_for_sparsity`, `magnitude`
    keeps the top (1 - rate) entries per tensor, `bernoulli` drops entries
    with probability `rate` and rescales.

    Raises:
        ArgumentError: If `rate` is not in [0, 1).
    """

    assert isinstance(kind, TwinKind)

    if not 0.0 <= rate < 1.0:
        raise ArgumentError(f"Sparsity rate must be in [0, 1), got '{rate}'.")

    meta = dict(source_meta or {})
    meta["sparsity"] = repr(rate)

    match kind:
        case TwinKind.SVD:
            entries: dict[str, SvdFactors | np.ndarray] = {}
            for name, tensor in d.items():
                if tensor.ndim == 1:
                    entries[name] = tensor
                else:
                    entries[name] = truncate(svd(tensor), rank_for_sparsity(tensor.shape, rate))
            return TwinVector(entries=entries, rank=None, source_meta=meta, kind=kind)

        case TwinKind.MAGNITUDE:
            pruned = magnitude_prune(d, 1.0 - rate)
            return TwinVector(entries=dict(pruned.params), rank=None, source_meta=meta, kind=kind)

        case TwinKind.BERNOULLI:
            dropped = dare_drop(d, rate, seed)
            return TwinVector(entries=dict(dropped.params), rank=None, source_meta=meta, kind=kind)

        case _:
            raise ArgumentError(f"Invalid {TwinKind.__name__}: '{kind}'.")
