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

"""Checkpoint and Delta classes."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from types import MappingProxyType

import numpy as np

from ..errors import ArgumentError
from ..linalg import as_tensor

FROZEN_META_KEY = "frozen"


class Checkpoint(Mapping[str, np.ndarray]):
    """An immutable, name-ordered map of float32 tensors plus string metadata.

    Tensor names iterate in lexicographic order. The tensors are read-only,
    so a checkpoint is safe to share between threads.
    """

    params: Mapping[str, np.ndarray]
    meta: Mapping[str, str]

    def __init__(self, params: Mapping[str, np.ndarray], meta: Mapping[str, str] | None = None):
        assert isinstance(params, Mapping), type(params)

        tensors: dict[str, np.ndarray] = {}
        for name in sorted(params):
            if not isinstance(name, str) or not name:
                raise ArgumentError(f"Tensor names must be non-empty strings: '{name!r}'.")
            source = params[name]
            tensor = as_tensor(source, name)
            # Read-only arrays owned by another checkpoint can be shared.
            if tensor is source and (tensor.flags.writeable or tensor.base is not None):
                tensor = tensor.copy()
            tensor.setflags(write=False)
            tensors[name] = tensor

        metadata = dict(meta or {})
        for key, value in metadata.items():
            if not isinstance(key, str) or not isinstance(value, str):
                raise ArgumentError(f"Metadata must map strings to strings: '{key!r}'.")

        self.params = MappingProxyType(tensors)
        self.meta = MappingProxyType(metadata)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Checkpoint):
            return NotImplemented

        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def __getitem__(self, key: str) -> np.ndarray:
        return self.params[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self.params)

    def __len__(self) -> int:
        return len(self.params)

    def __repr__(self) -> str:
        shapes = ", ".join(f"{name}{list(t.shape)}" for name, t in self.params.items())
        return f"{type(self).__name__}({shapes})"

    @property
    def shapes(self) -> dict[str, tuple[int, ...]]:
        """Tensor shapes by name."""

        return {name: tuple(t.shape) for name, t in self.params.items()}

    @property
    def frozen(self) -> frozenset[str]:
        """Names tagged as frozen through the `frozen` metadata key."""

        value = self.meta.get(FROZEN_META_KEY, "")
        return frozenset(e.strip() for e in value.split(",") if e.strip())

    @property
    def parameter_count(self) -> int:
        """Total number of scalar parameters."""

        return int(sum(t.size for t in self.params.values()))

    def with_meta(self, **values: str) -> Checkpoint:
        """Returns a copy of this object with updated metadata."""

        meta = dict(self.meta)
        meta.update(values)
        return type(self)(self.params, meta)

    def equals(self, other: Checkpoint) -> bool:
        """Bit-exact comparison of names, shapes and data."""

        if list(self) != list(other):
            return False

        return all(np.array_equal(self[name], other[name]) for name in self)

    @classmethod
    def zeros_like(cls, other: Checkpoint) -> Checkpoint:
        """An all-zero checkpoint with the names and shapes of `other`."""

        return cls({name: np.zeros_like(t) for name, t in other.items()}, dict(other.meta))


class Delta(Checkpoint):
    """A difference between two compatible checkpoints, e.g. a task vector."""
