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

"""harness package."""

from .eval_config import DEFAULT_BATCH_SIZE, EvalConfig
from .experiment import Experiment
from .experiment_report import ExperimentReport
from .experiments import (
    ablation,
    coeff_grid,
    coefficient_pairs,
    compare_methods,
    grouping,
    nonoverlap_experiment,
    parse_pair,
    run_cells,
    run_experiment,
    sweep_epochs,
    sweep_single_task_sparsity,
    sweep_sparsity,
    sweep_tasks,
    sweep_unseen,
)
from .harness_settings import HarnessSettings
from .inference import dynamic_predictions, mixture_items, route_items, run_inference
from .inference_mode import InferenceMode
from .invariants import CheckResult, run_selftest
from .method_name import MethodName
from .metrics import mean_std, normalized_score
from .pipeline import (
    DEFAULT_DARE_DROP_RATE,
    TwinArtifacts,
    apply_static,
    build_shared,
    evaluate_static,
    evaluate_twin,
    fit_router,
    merge_static,
    method_for,
    prepare_twin,
    select_gammas,
    select_ties_lambda,
    split_scores,
    storage_for,
    validation_score,
)
from .report_writer import CSV_HEADER, summary_dict, write_csv, write_json
from .result_renderer import ResultRenderer
from .result_table import NORMALIZED_TASK, UNSEEN_TASK, ResultRow, SweepResult, score_rows
from .storage import StorageAccount, storage_report
from .sweep_config import SweepConfig
from .zoo import Zoo, build_zoo, fine_tune, make_base, make_suite

__all__ = [
    "CSV_HEADER",
    "DEFAULT_BATCH_SIZE",
    "DEFAULT_DARE_DROP_RATE",
    "NORMALIZED_TASK",
    "UNSEEN_TASK",
    "CheckResult",
    "EvalConfig",
    "Experiment",
    "ExperimentReport",
    "HarnessSettings",
    "InferenceMode",
    "MethodName",
    "ResultRenderer",
    "ResultRow",
    "StorageAccount",
    "SweepConfig",
    "SweepResult",
    "TwinArtifacts",
    "Zoo",
    "ablation",
    "apply_static",
    "build_shared",
    "build_zoo",
    "coeff_grid",
    "coefficient_pairs",
    "compare_methods",
    "dynamic_predictions",
    "evaluate_static",
    "evaluate_twin",
    "fine_tune",
    "fit_router",
    "grouping",
    "make_base",
    "make_suite",
    "mean_std",
    "merge_static",
    "method_for",
    "mixture_items",
    "nonoverlap_experiment",
    "normalized_score",
    "parse_pair",
    "prepare_twin",
    "route_items",
    "run_cells",
    "run_experiment",
    "run_inference",
    "run_selftest",
    "score_rows",
    "select_gammas",
    "select_ties_lambda",
    "split_scores",
    "storage_for",
    "storage_report",
    "summary_dict",
    "sweep_epochs",
    "sweep_single_task_sparsity",
    "sweep_sparsity",
    "sweep_tasks",
    "sweep_unseen",
    "validation_score",
    "write_csv",
    "write_json",
]
