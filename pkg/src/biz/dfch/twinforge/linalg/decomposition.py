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

"""Singular value decomposition and rank truncation."""

from __future__ import annotations

import numpy as np

from ..errors import ArgumentError, NumericError, ShapeError
from .svd_factors import SvdFactors
from .tensor_ops import DTYPE


def svd(m: np.ndarray) -> SvdFactors:
    """Full (thin) singular value decomposition of a 2-D tensor.

    The decomposition is computed in float64 with LAPACK and stored as float32.
    Each left singular vector is sign-normalised so that its largest-magnitude
    entry is non-negative; the matching right vector is flipped with it.

    Args:
        m (np.ndarray): A finite 2-D tensor.

    Returns:
        SvdFactors: Factors with r = min(d_out, d_in).

    Raises:
        ShapeError: If `m` is not 2-D.
        NumericError: If `m` contains non-finite entries.
    """

    m = np.asarray(m)
    if m.ndim != 2:
        raise ShapeError(f"svd requires a 2-D tensor, got rank {m.ndim}.")
    if not np.all(np.isfinite(m)):
        raise NumericError("svd input contains non-finite entries.")

    u, s, vt = np.linalg.svd(m.astype(np.float64), full_matrices=False)
    v = vt.T

    # First index of the largest magnitude per column decides the sign.
    pivots = np.argmax(np.abs(u), axis=0)
    signs = np.sign(u[pivots, np.arange(u.shape[1])])
    signs[signs == 0] = 1.0
    u = u * signs
    v = v * signs

    return SvdFactors(
        u=np.ascontiguousarray(u, dtype=DTYPE),
        s=np.ascontiguousarray(s, dtype=DTYPE),
        v=np.ascontiguousarray(v, dtype=DTYPE),
        original_shape=(int(m.shape[0]), int(m.shape[1])),
    )


def truncate(f: SvdFactors, r: int) -> SvdFactors:
    """Keeps the top-`r` singular triplets.

    Raises:
        ArgumentError: If `r` is not in [1, f.rank].
    """

    assert isinstance(f, SvdFactors)

    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or not 1 <= r <= f.rank:
        raise ArgumentError(f"Truncation rank must be in [1, {f.rank}], got '{r}'.")

    return SvdFactors(
        u=np.ascontiguousarray(f.u[:, :r]),
        s=np.ascontiguousarray(f.s[:r]),
        v=np.ascontiguousarray(f.v[:, :r]),
        original_shape=f.original_shape,
    )


def tail_norm(f: SvdFactors, r: int) -> float:
    """Returns sqrt(sum_{i>r} s_i^2), the Eckart-Young truncation error."""

    tail = f.s[r:].astype(np.float64)
    return float(np.sqrt(np.sum(tail * tail)))
