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

"""InferenceMode enum."""

from __future__ import annotations

from enum import StrEnum


class InferenceMode(StrEnum):
    """How router decisions become merged models."""

    PER_SAMPLE = "per_sample"
    GROUPED = "grouped"

    @classmethod
    def parse(cls, value: str) -> InferenceMode:
        """Parses a mode name, accepting `-` in place of `_`."""

        return cls(value.strip().lower().replace("-", "_"))
