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

"""SvdFactors class."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor_ops import DTYPE


@dataclass(frozen=True)
class SvdFactors:
    """Thin singular value factors of a matrix `m ~ u @ diag(s) @ v.T`.

    `u` is (d_out x r), `s` has length r and is non-increasing, `v` is
    (d_in x r).
    """

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray
    original_shape: tuple[int, int]

    def __post_init__(self):
        assert self.u.ndim == 2 and self.v.ndim == 2 and self.s.ndim == 1
        assert self.u.shape[1] == self.s.shape[0] == self.v.shape[1]
        assert self.u.shape[0] == self.original_shape[0]
        assert self.v.shape[0] == self.original_shape[1]

    @property
    def rank(self) -> int:
        """Number of retained singular triplets."""

        return int(self.s.shape[0])

    @property
    def parameter_count(self) -> int:
        """Stored parameters: r * (d_out + d_in + 1)."""

        d_out, d_in = self.original_shape
        return self.rank * (d_out + d_in + 1)

    def reconstruct(self) -> np.ndarray:
        """Returns `u @ diag(s) @ v.T` as float32, computed in float64."""

        u = self.u.astype(np.float64)
        v = self.v.astype(np.float64)
        s = self.s.astype(np.float64)

        return ((u * s) @ v.T).astype(DTYPE)
