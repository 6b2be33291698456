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

"""ResultRenderer class."""

from rich import box
from rich.console import Console
from rich.table import Table

from .experiment_report import ExperimentReport
from .result_table import SweepResult
from .storage import StorageAccount


class ResultRenderer:
    """Shows results on the console."""

    def show_sweep(self, console: Console, result: SweepResult) -> None:
        """Shows the seed summary of a sweep."""

        assert isinstance(console, Console)
        assert isinstance(result, SweepResult)

        table = Table(title=f"{result.experiment} (seeds {result.metadata.get('seeds', [])})", box=box.SIMPLE_HEAD)
        for column in ("knob", "value", "method", "task"):
            table.add_column(column)
        table.add_column("mean", justify="right")
        table.add_column("std", justify="right")

        for row in result.summary():
            table.add_row(row.knob, row.value, row.method, row.task, f"{row.score:.2f}", f"{row.std or 0.0:.2f}")

        console.print(table)

    def show_report(self, console: Console, report: ExperimentReport) -> None:
        """Shows per-task and normalized scores of one inference run."""

        assert isinstance(console, Console)
        assert isinstance(report, ExperimentReport)

        table = Table(title="Inference", box=box.SIMPLE_HEAD)
        table.add_column("task")
        table.add_column("score", justify="right")
        table.add_column("finetuned", justify="right")
        for t, (value, reference) in enumerate(zip(report.per_task_scores, report.ft_scores, strict=True)):
            table.add_row(str(t), f"{value:.4f}", f"{reference:.4f}")
        table.add_row("[bold]normalized[/bold]", f"[bold]{report.normalized_score:.2f}[/bold]", "")

        console.print(table)
        console.print(f"Merged models: {report.merge_count}. Wall time: {report.wall_time:.2f}s.")
        if report.storage is not None:
            self.show_storage(console, report.storage)

    def show_storage(self, console: Console, account: StorageAccount) -> None:
        """Shows the storage accounting."""

        assert isinstance(console, Console)
        assert isinstance(account, StorageAccount)

        table = Table(title="Storage", box=box.SIMPLE_HEAD)
        table.add_column("quantity")
        table.add_column("value", justify="right")
        for key, value in account.to_dict().items():
            table.add_row(key, f"{value:,}" if isinstance(value, int) else repr(value))

        console.print(table)
