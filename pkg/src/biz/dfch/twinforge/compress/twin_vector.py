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

"""TwinVector class and its container serialization."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..checkpoint import read_tensors, write_tensors
from ..errors import FormatError
from ..linalg import SvdFactors
from .twin_kind import TwinKind

_FACTOR_SUFFIXES = (".u", ".s", ".v")


@dataclass(frozen=True)
class TwinVector:
    """Compressed exclusive knowledge of one expert.

    Matrices are held as truncated `SvdFactors` (kind `svd`); vectors, and all
    tensors of the sparsified kinds, are held dense.
    """

    entries: Mapping[str, SvdFactors | np.ndarray]
    rank: int | None
    source_meta: Mapping[str, str] = field(default_factory=dict)
    kind: TwinKind = TwinKind.SVD

    def __post_init__(self):
        assert isinstance(self.kind, TwinKind)
        for name, entry in self.entries.items():
            assert isinstance(entry, (SvdFactors, np.ndarray)), name
            if isinstance(entry, SvdFactors) and self.rank is not None:
                assert entry.rank == min(self.rank, *entry.original_shape), name

    @property
    def parameter_count(self) -> int:
        """Stored parameters: r * (d_out + d_in + 1) per matrix plus n per dense
        tensor; the sparsified kinds count their nonzero entries."""

        result = 0
        for entry in self.entries.values():
            if isinstance(entry, SvdFactors):
                result += entry.parameter_count
            elif self.kind == TwinKind.SVD:
                result += int(entry.size)
            else:
                result += int(np.count_nonzero(entry))

        return result

    @property
    def effective_ranks(self) -> dict[str, int]:
        """Rank actually kept per matrix after clamping to min(d_out, d_in)."""

        return {name: e.rank for name, e in self.entries.items() if isinstance(e, SvdFactors)}

    @property
    def dense_parameter_count(self) -> int:
        """Parameters of the uncompressed delta."""

        result = 0
        for entry in self.entries.values():
            if isinstance(entry, SvdFactors):
                result += entry.original_shape[0] * entry.original_shape[1]
            else:
                result += int(entry.size)

        return result

    def save(self, path: Path | str) -> None:
        """Writes the twin vector: factors as `<name>.u/.s/.v`, dense tensors as `<name>`."""

        tensors: dict[str, np.ndarray] = {}
        factored: list[str] = []
        for name, entry in self.entries.items():
            if isinstance(entry, SvdFactors):
                factored.append(name)
                tensors[f"{name}.u"] = entry.u
                tensors[f"{name}.s"] = entry.s
                tensors[f"{name}.v"] = entry.v
            else:
                tensors[name] = entry

        meta = dict(self.source_meta)
        meta["kind"] = "twin"
        meta["compression"] = self.kind.value
        meta["factored"] = ",".join(sorted(factored))
        if self.rank is not None:
            meta["rank"] = str(self.rank)

        write_tensors(Path(path), tensors, meta)

    @staticmethod
    def load(path: Path | str) -> TwinVector:
        """Reads a twin vector written by `save`."""

        tensors, meta = read_tensors(Path(path))
        if meta.get("kind") != "twin":
            raise FormatError(f"'{path}': not a twin vector (kind='{meta.get('kind')}').")

        factored = [e for e in meta.get("factored", "").split(",") if e]
        entries: dict[str, SvdFactors | np.ndarray] = {}
        try:
            for name in factored:
                u, s, v = (tensors.pop(f"{name}{suffix}") for suffix in _FACTOR_SUFFIXES)
                entries[name] = SvdFactors(u=u, s=s, v=v, original_shape=(u.shape[0], v.shape[0]))
        except (KeyError, AssertionError) as ex:
            raise FormatError(f"'{path}': incomplete factors: {ex}") from ex
        entries.update(tensors)

        try:
            rank = int(meta["rank"]) if "rank" in meta else None
            kind = TwinKind(meta.get("compression", TwinKind.SVD.value))
        except ValueError as ex:
            raise FormatError(f"'{path}': {ex}") from ex
        if rank is not None and rank < 1:
            raise FormatError(f"'{path}': rank must be positive, got {rank}.")
        source_meta = {k: v for k, v in meta.items() if k not in ("kind", "compression", "factored", "rank")}

        for name, entry in entries.items():
            if isinstance(entry, SvdFactors) and rank is not None and entry.rank != min(rank, *entry.original_shape):
                raise FormatError(f"'{path}': '{name}' has rank {entry.rank}, metadata says {rank}.")

        return TwinVector(entries=dict(sorted(entries.items())), rank=rank, source_meta=source_meta, kind=kind)
