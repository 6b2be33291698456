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

"""Named-parameter arithmetic on checkpoints."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..errors import ArgumentError, CompatibilityError
from ..linalg import DTYPE
from .checkpoint import Checkpoint, Delta


def ensure_compatible(reference: Checkpoint, *others: Checkpoint) -> None:
    """Makes sure all checkpoints share names and per-name shapes.

    Raises:
        CompatibilityError: On any name or shape mismatch.
    """

    expected = reference.shapes
    for idx, other in enumerate(others):
        actual = other.shapes
        if expected.keys() != actual.keys():
            missing = sorted(expected.keys() ^ actual.keys())
            raise CompatibilityError(f"Checkpoint #{idx}: tensor names differ: {missing}.")
        for name, shape in expected.items():
            if actual[name] != shape:
                raise CompatibilityError(f"Checkpoint #{idx}: '{name}' has shape {actual[name]}, expected {shape}.")


def frozen_names(*checkpoints: Checkpoint) -> frozenset[str]:
    """The union of names tagged frozen by any of the checkpoints."""

    result: frozenset[str] = frozenset()
    for checkpoint in checkpoints:
        result = result | checkpoint.frozen

    return result


def ensure_frozen_identical(base: Checkpoint, experts: Sequence[Checkpoint]) -> frozenset[str]:
    """Makes sure frozen tensors are bit-identical across all checkpoints.

    Returns:
        frozenset[str]: The frozen names.

    Raises:
        CompatibilityError: If a frozen tensor differs or is unknown.
    """

    names = frozen_names(base, *experts)
    for name in sorted(names):
        if name not in base:
            raise CompatibilityError(f"Frozen tensor '{name}' does not exist.")
        for idx, expert in enumerate(experts):
            if not np.array_equal(base[name], expert[name]):
                raise CompatibilityError(f"Frozen tensor '{name}' differs in checkpoint #{idx}.")

    return names


def diff(a: Checkpoint, b: Checkpoint) -> Delta:
    """Per-tensor a - b."""

    ensure_compatible(a, b)

    return Delta({name: np.subtract(a[name], b[name], dtype=DTYPE) for name in a})


def axpy(base: Checkpoint, deltas: Sequence[Checkpoint], coeffs: Sequence[float]) -> Checkpoint:
    """Per-tensor base + sum_t coeffs[t] * deltas[t].

    Deltas are accumulated in list order in float64 and rounded to float32 once
    at the end.

    Raises:
        ArgumentError: If the list lengths differ or a coefficient is not finite.
        CompatibilityError: If a delta does not match `base`.
    """

    if len(deltas) != len(coeffs):
        raise ArgumentError(f"{len(deltas)} deltas but {len(coeffs)} coefficients.")
    if not all(np.isfinite(c) for c in coeffs):
        raise ArgumentError(f"Coefficients must be finite: {list(coeffs)}.")
    ensure_compatible(base, *deltas)

    result: dict[str, np.ndarray] = {}
    for name, tensor in base.items():
        acc = tensor.astype(np.float64)
        for delta, coeff in zip(deltas, coeffs, strict=True):
            acc += float(coeff) * delta[name].astype(np.float64)
        result[name] = acc.astype(DTYPE)

    return Checkpoint(result, dict(base.meta))


def restore_frozen(merged: Checkpoint, base: Checkpoint, names: frozenset[str]) -> Checkpoint:
    """Copies the frozen tensors of `base` into `merged` bit-exactly."""

    if not names:
        return merged

    params = dict(merged.params)
    for name in names:
        params[name] = base[name]

    return type(merged)(params, dict(merged.meta))
