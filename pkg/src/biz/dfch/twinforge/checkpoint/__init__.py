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

"""checkpoint package."""

from .arithmetic import (
    axpy,
    diff,
    ensure_compatible,
    ensure_frozen_identical,
    frozen_names,
    restore_frozen,
)
from .checkpoint import FROZEN_META_KEY, Checkpoint, Delta
from .container import load, read_tensors, save, write_tensors

__all__ = [
    "FROZEN_META_KEY",
    "Checkpoint",
    "Delta",
    "axpy",
    "diff",
    "ensure_compatible",
    "ensure_frozen_identical",
    "frozen_names",
    "load",
    "read_tensors",
    "restore_frozen",
    "save",
    "write_tensors",
]
