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

"""CommandContext class."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from rich.console import Console

from ..run_config import RunConfig


@dataclass(frozen=True)
class CommandContext:
    """What a command runs with: parsed arguments, configuration, output directory and console."""

    args: argparse.Namespace
    config: RunConfig
    run_dir: Path
    console: Console

    def output(self, name: str) -> Path:
        """Path of an artifact in the run directory."""

        return self.run_dir / name
