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

"""GenSuiteCommand class."""

from ...harness import make_suite
from .command_base import CommandBase

SUITE_FILE = "suite.safetensors"


class GenSuiteCommand(CommandBase):  # pylint: disable=R0903
    """Generates the configured suite for the first seed."""

    def invoke(self, context) -> None:
        super().invoke(context)

        suite = make_suite(context.config.suite, context.config.seed)
        path = context.output(SUITE_FILE)
        suite.save(path)

        context.console.print(f"Suite with {suite.task_count} tasks written: '{path}'.")
