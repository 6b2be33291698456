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

"""EvalCommand class."""

from ...harness import (
    InferenceMode,
    MethodName,
    ResultRenderer,
    ResultRow,
    SweepResult,
    build_zoo,
    evaluate_twin,
    make_suite,
    prepare_twin,
    score_rows,
    summary_dict,
    write_csv,
    write_json,
)
from .command_base import CommandBase

RESULTS_FILE = "results.csv"
SUMMARY_FILE = "summary.json"


class EvalCommand(CommandBase):  # pylint: disable=R0903
    """Runs the whole twin merging pipeline for every seed and summarizes the scores."""

    def invoke(self, context) -> None:
        super().invoke(context)

        config = context.config
        method = MethodName.TWIN_GROUPED if config.eval.mode == InferenceMode.GROUPED else MethodName.TWIN
        rows: list[ResultRow] = []
        reports: dict[str, dict] = {}
        for seed in config.seeds:
            zoo = build_zoo(make_suite(config.suite, seed), config.experts, seed)
            artifacts = prepare_twin(zoo, config.merge, config.router, seed)
            report = evaluate_twin(zoo, artifacts, config.eval, seed, experts=config.experts)
            rows += score_rows("mode", config.eval.mode, method, seed, report.per_task_scores, report.normalized_score)
            reports[str(seed)] = report.to_dict()

        result = SweepResult("eval", tuple(rows), {"seeds": list(config.seeds)})
        write_csv(result, context.output(RESULTS_FILE))
        write_json(summary_dict(result) | {"reports": reports}, context.output(SUMMARY_FILE))
        ResultRenderer().show_sweep(context.console, result)
