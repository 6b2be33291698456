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

"""Container file codec.

Files follow the safetensors layout: an 8 byte little-endian header length, a
JSON header mapping tensor names to dtype, shape and payload offsets plus an
optional `__metadata__` string map, and the raw little-endian payload.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from safetensors import SafetensorError, safe_open
from safetensors.numpy import save_file

from biz.dfch.logging import log

from ..errors import CheckpointIOError, FormatError, NumericError, ShapeError
from ..linalg import DTYPE
from .checkpoint import Checkpoint

_FRAMEWORK = "numpy"


def read_tensors(path: Path) -> tuple[dict[str, np.ndarray], dict[str, str]]:
    """Reads all tensors and the metadata of a container file.

    Raises:
        CheckpointIOError: If the file cannot be read.
        FormatError: If the header, dtypes or offsets are invalid.
        NumericError: If a payload contains non-finite values.
    """

    assert isinstance(path, Path)

    if not path.is_file():
        raise CheckpointIOError(f"File not found: '{path}'.")

    tensors: dict[str, np.ndarray] = {}
    try:
        with safe_open(str(path), framework=_FRAMEWORK) as f:
            meta = dict(f.metadata() or {})
            for name in f.keys():
                tensors[name] = f.get_tensor(name)
    except SafetensorError as ex:
        raise FormatError(f"'{path}': {ex}") from ex
    except (OSError, ValueError) as ex:
        raise FormatError(f"'{path}': {ex}") from ex

    for name, tensor in tensors.items():
        if tensor.dtype != DTYPE:
            raise FormatError(f"'{path}': tensor '{name}' has dtype {tensor.dtype}, expected F32.")
        if not np.all(np.isfinite(tensor)):
            raise NumericError(f"'{path}': tensor '{name}' contains non-finite values.")

    log.debug("Read %d tensors from '%s'.", len(tensors), path)

    return tensors, meta


def write_tensors(path: Path, tensors: dict[str, np.ndarray], meta: dict[str, str] | None = None) -> None:
    """Writes tensors and metadata to a container file.

    Raises:
        ShapeError: If a tensor is not a float32 tensor of rank 1 or 2.
        CheckpointIOError: If the file cannot be written.
    """

    assert isinstance(path, Path)

    for name, tensor in tensors.items():
        if not isinstance(tensor, np.ndarray) or tensor.dtype != DTYPE or tensor.ndim not in (1, 2):
            raise ShapeError(f"Refusing to save '{name}': expected a float32 tensor of rank 1 or 2.")

    payload = {name: np.ascontiguousarray(tensors[name]) for name in sorted(tensors)}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        save_file(payload, str(path), metadata=dict(meta) if meta else None)
    except (OSError, SafetensorError) as ex:
        raise CheckpointIOError(f"Cannot write '{path}': {ex}") from ex

    log.debug("Wrote %d tensors to '%s'.", len(payload), path)


def load(path: Path | str) -> Checkpoint:
    """Loads a checkpoint from a container file."""

    tensors, meta = read_tensors(Path(path))
    try:
        return Checkpoint(tensors, meta)
    except ShapeError as ex:
        raise FormatError(f"'{path}': {ex}") from ex


def save(c: Checkpoint, path: Path | str) -> None:
    """Saves a checkpoint to a container file. Output bytes are deterministic."""

    assert isinstance(c, Checkpoint)

    write_tensors(Path(path), dict(c.params), dict(c.meta))
