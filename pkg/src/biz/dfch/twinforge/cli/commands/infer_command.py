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

"""InferCommand class."""

from ...compress import TwinVector
from ...harness import ResultRenderer, run_inference, write_json
from ...router import Router
from ...toyzoo import Architecture, TaskSuite
from .command_base import CommandBase

REPORT_FILE = "report.json"


class InferCommand(CommandBase):  # pylint: disable=R0903
    """Runs dynamic merging over the test mixture with saved artifacts."""

    def invoke(self, context) -> None:
        super().invoke(context)

        args, config = context.args, context.config
        shared = self.load_checkpoints([args.shared])[0]
        twins = [TwinVector.load(e) for e in args.twins]
        router = None if args.router is None else Router.load(args.router)
        suite = TaskSuite.load(args.suite)
        architecture = Architecture.of(shared.shapes)
        experts = self.load_checkpoints(args.experts)
        ft_scores = [self.reference_score(e, architecture, suite, t) for t, e in enumerate(experts)]

        report = run_inference(
            shared,
            twins,
            router,
            suite,
            architecture,
            ft_scores,
            mode=config.eval.mode,
            group_count=config.eval.group_count,
            seed=config.seed,
            oracle=args.oracle or config.eval.oracle,
            alphas=config.eval.alphas,
            batch_size=config.eval.batch_size,
            config=config.to_dict(),
        )

        write_json(report.to_dict(), context.output(REPORT_FILE))
        ResultRenderer().show_report(context.console, report)
