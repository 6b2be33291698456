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

"""SelftestCommand class."""

from rich.table import Table

from ...errors import NumericError
from ...harness import run_selftest, write_json
from .command_base import CommandBase

SELFTEST_FILE = "selftest.json"


class SelftestCommand(CommandBase):  # pylint: disable=R0903
    """Runs the numeric self checks; fails unless every check passes."""

    def invoke(self, context) -> None:
        super().invoke(context)

        results = run_selftest(context.config.seed)

        table = Table(title="Self checks")
        table.add_column("check")
        table.add_column("result")
        table.add_column("detail")
        for e in results:
            table.add_row(e.name, "[green]pass[/green]" if e.passed else "[red]FAIL[/red]", e.detail)
        context.console.print(table)

        records = [{"name": e.name, "passed": e.passed, "detail": e.detail} for e in results]
        write_json(records, context.output(SELFTEST_FILE))

        failed = [e.name for e in results if not e.passed]
        if failed:
            raise NumericError(f"Self checks failed: {', '.join(failed)}.")
