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

"""SuiteConfig class."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters of `gen_suite`."""

    tasks: int = 4
    input_dim: int = 32
    classes: int = 4
    n_per_task: int = 2000
    shared_strength: float = 0.5

    def __post_init__(self):
        if self.tasks < 2:
            raise ConfigError(f"suite.tasks must be at least 2, got {self.tasks}.")
        if not 0.0 <= self.shared_strength <= 1.0:
            raise ConfigError(f"suite.shared_strength must be in [0, 1], got {self.shared_strength}.")
