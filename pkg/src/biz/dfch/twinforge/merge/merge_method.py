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

"""MergeMethod enum."""

from __future__ import annotations

from enum import StrEnum


class MergeMethod(StrEnum):
    """Supported merge algorithms."""

    AVERAGE = "average"
    TASK_ARITHMETIC = "task_arithmetic"
    TIES = "ties"
    TWIN = "twin"

    @classmethod
    def parse(cls, value: str) -> MergeMethod:
        """Parses a method name, accepting `-` in place of `_`."""

        assert isinstance(value, str)

        return cls(value.strip().lower().replace("-", "_"))
