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

"""SweepCommand class."""

from ...harness import ResultRenderer, run_experiment, summary_dict, write_csv, write_json
from .command_base import CommandBase
from .eval_command import RESULTS_FILE, SUMMARY_FILE


class SweepCommand(CommandBase):  # pylint: disable=R0903
    """Runs the configured experiment over all seeds."""

    def invoke(self, context) -> None:
        super().invoke(context)

        config = context.config
        result = run_experiment(config.sweep, config.settings, config.seeds)

        write_csv(result, context.output(RESULTS_FILE))
        write_json(summary_dict(result), context.output(SUMMARY_FILE))
        ResultRenderer().show_sweep(context.console, result)
