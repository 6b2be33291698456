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

"""Elementwise tensor arithmetic.

A tensor is a C-contiguous `numpy.ndarray` of dtype float32 with rank 1 or 2.
"""

from __future__ import annotations

import numpy as np

from ..errors import NumericError, ShapeError

DTYPE = np.float32


def as_tensor(value, name: str = "tensor") -> np.ndarray:
    """Returns `value` as a contiguous float32 tensor of rank 1 or 2.

    Raises:
        ShapeError: If the rank is not 1 or 2, or a dimension is zero.
        NumericError: If an entry is not finite.
    """

    # ascontiguousarray promotes scalars to rank 1.
    rank = np.ndim(value)
    if rank not in (1, 2):
        raise ShapeError(f"'{name}': rank {rank} is not supported (1 or 2).")
    result = np.ascontiguousarray(value, dtype=DTYPE)
    if 0 in result.shape:
        raise ShapeError(f"'{name}': dimension sizes must be positive: {result.shape}.")
    if not np.all(np.isfinite(result)):
        raise NumericError(f"'{name}': contains non-finite entries.")

    return result


def _ensure_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"Shape mismatch: {a.shape} != {b.shape}.")


def add(a: np.ndarray, b: np.ndarray | float) -> np.ndarray:
    """Elementwise a + b."""

    if isinstance(b, np.ndarray):
        _ensure_same_shape(a, b)
        return np.add(a, b, dtype=DTYPE)

    return np.add(a, DTYPE(b), dtype=DTYPE)


def sub(a: np.ndarray, b: np.ndarray | float) -> np.ndarray:
    """Elementwise a - b."""

    if isinstance(b, np.ndarray):
        _ensure_same_shape(a, b)
        return np.subtract(a, b, dtype=DTYPE)

    return np.subtract(a, DTYPE(b), dtype=DTYPE)


def scale(a: np.ndarray, b: np.ndarray | float) -> np.ndarray:
    """Elementwise a * b."""

    if isinstance(b, np.ndarray):
        _ensure_same_shape(a, b)
        return np.multiply(a, b, dtype=DTYPE)

    return np.multiply(a, DTYPE(b), dtype=DTYPE)


def frobenius(a: np.ndarray) -> float:
    """Frobenius (or Euclidean) norm, accumulated in float64."""

    return float(np.linalg.norm(a.astype(np.float64)))


def relative_error(actual: np.ndarray, expected: np.ndarray) -> float:
    """Returns ||actual - expected|| / ||expected||, or the absolute error when
    `expected` is zero."""

    _ensure_same_shape(actual, expected)
    diff = frobenius(actual.astype(np.float64) - expected.astype(np.float64))
    norm = frobenius(expected)
    if norm == 0.0:
        return diff

    return diff / norm
