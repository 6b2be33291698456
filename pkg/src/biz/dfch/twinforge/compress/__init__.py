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

"""compress package."""

from .low_rank import clamp_rank, decompress, rank_for_sparsity, sparsify_twin, svd_compress
from .sparsify import dare_drop, keep_count, magnitude_prune, name_stream, prune_tensor
from .twin_kind import TwinKind
from .twin_vector import TwinVector

__all__ = [
    "TwinKind",
    "TwinVector",
    "clamp_rank",
    "dare_drop",
    "decompress",
    "keep_count",
    "magnitude_prune",
    "name_stream",
    "prune_tensor",
    "rank_for_sparsity",
    "sparsify_twin",
    "svd_compress",
]
