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

"""TestExperiments class."""

import unittest
from dataclasses import replace

from parameterized import parameterized

from biz.dfch.twinforge.compress import TwinKind
from biz.dfch.twinforge.errors import ConfigError
from biz.dfch.twinforge.harness import (
    NORMALIZED_TASK,
    UNSEEN_TASK,
    Experiment,
    HarnessSettings,
    MethodName,
    SweepConfig,
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
    sweep_sparsity,
    sweep_tasks,
    sweep_unseen,
)
from biz.dfch.twinforge.harness.eval_config import DEFAULT_BATCH_SIZE
from biz.dfch.twinforge.harness.experiments import NONOVERLAP_LAYERS, UNSEEN_METHODS
from biz.dfch.twinforge.harness.result_table import ResultRow
from biz.dfch.twinforge.merge import MergeRecipe
from biz.dfch.twinforge.router import RouterConfig
from tests.twinforge.fixtures import SMALL_EXPERTS, SMALL_SUITE

SETTINGS = HarnessSettings(
    suite=SMALL_SUITE,
    experts=SMALL_EXPERTS,
    merge=MergeRecipe(gamma_grid=(0.5, 1.0)),
    router=RouterConfig(epochs=3, lr=5e-3, hidden_dim=8),
)


def _normalized(result, method, value="-"):
    return [r.score for r in result.rows if r.method == method and r.value == value and r.task == NORMALIZED_TASK]


def _tasks(result, method, value="-"):
    return [r.task for r in result.rows if r.method == method and r.value == value]


def _methods(result):
    return list(dict.fromkeys(r.method for r in result.rows))


PER_TASK = ["0", "1", "2"]


class TestExperiments(unittest.TestCase):
    """Controlled experiments on a small suite."""

    def test_coefficient_pairs(self):
        pairs = coefficient_pairs()

        self.assertEqual(len(pairs), 81)
        self.assertEqual(pairs[0], (-2.0, -2.0))
        self.assertEqual(pairs[-1], (2.0, 2.0))
        self.assertIn((0.0, 0.0), pairs)

    @parameterized.expand([("0.5;-1", (0.5, -1.0)), ("-2;2", (-2.0, 2.0))])
    def test_parse_pair(self, value, expected):
        self.assertEqual(parse_pair(value), expected)

    @parameterized.expand([("0.5",), ("a;b",), ("1;2;3",)])
    def test_parse_pair_rejects(self, value):
        with self.assertRaises(ConfigError):
            parse_pair(value)

    def test_run_cells_keeps_order(self):
        cells = [lambda i=i: [ResultRow("k", str(i), "m", "0", "0", float(i))] for i in range(6)]

        rows = run_cells(cells, jobs=3)

        self.assertEqual([r.value for r in rows], [str(i) for i in range(6)])

    def test_zero_coefficients_reproduce_pretrained_model(self):
        result = coeff_grid(SETTINGS, [0], pairs=[(0.0, 0.0), (1.0, 0.0)])

        pretrain = _normalized(result, MethodName.PRETRAIN)
        zero = _normalized(result, MethodName.TASK_ARITHMETIC, "0.0;0.0")
        self.assertEqual(zero, pretrain)
        self.assertEqual(result.experiment, Experiment.COEFF_GRID)

    def test_merging_one_task_recovers_the_expert(self):
        result = sweep_tasks(SETTINGS, [0], task_counts=[1])

        for method in (MethodName.WEIGHT_AVERAGE, MethodName.TASK_ARITHMETIC, MethodName.TWIN):
            (score,) = _normalized(result, method, "1")
            self.assertAlmostEqual(score, 100.0, delta=0.5)

    def test_compare_lists_every_method(self):
        result = compare_methods(SETTINGS, [0])

        methods = list(dict.fromkeys(r.method for r in result.rows))
        self.assertEqual(methods[0], MethodName.FINETUNED)
        self.assertEqual(methods[-1], MethodName.TWIN)
        self.assertIn(MethodName.TIES_DARE, methods)
        self.assertEqual(_normalized(result, MethodName.FINETUNED), [100.0])

    def test_sparsity_rows_per_rate_and_kind(self):
        result = sweep_sparsity(SETTINGS, [0], rates=[0.0, 0.9])

        self.assertEqual(result.experiment, Experiment.SPARSITY)
        self.assertEqual(_methods(result), [MethodName.TWIN, *TwinKind])
        self.assertEqual(_tasks(result, MethodName.TWIN), [*PER_TASK, NORMALIZED_TASK])
        for rate, kind in [(r, k) for r in ("0.0", "0.9") for k in TwinKind]:
            self.assertEqual(_tasks(result, kind, rate), [*PER_TASK, NORMALIZED_TASK], (rate, kind))

    def test_sparsity_zero_rate_keeps_every_entry(self):
        result = sweep_sparsity(SETTINGS, [0], rates=[0.0])

        (magnitude,) = _normalized(result, TwinKind.MAGNITUDE, "0.0")
        (bernoulli,) = _normalized(result, TwinKind.BERNOULLI, "0.0")
        (svd,) = _normalized(result, TwinKind.SVD, "0.0")
        self.assertEqual(magnitude, bernoulli)
        self.assertAlmostEqual(svd, magnitude, delta=1.0)

    def test_epoch_rows_hold_raw_expert_scores(self):
        result = sweep_epochs(SETTINGS, [0], epochs=[2, 4])

        self.assertEqual(result.experiment, Experiment.EPOCHS)
        self.assertEqual(_methods(result), [MethodName.FINETUNED, MethodName.TASK_ARITHMETIC])
        for value in ("2", "4"):
            self.assertEqual(_tasks(result, MethodName.FINETUNED, value), PER_TASK)
            self.assertEqual(_tasks(result, MethodName.TASK_ARITHMETIC, value), [*PER_TASK, NORMALIZED_TASK])
        finetuned = [r.score for r in result.rows if r.method == MethodName.FINETUNED]
        self.assertTrue(all(0.0 <= e <= 1.0 for e in finetuned))

    def test_nonoverlap_rows_and_layers(self):
        result = nonoverlap_experiment(SETTINGS, [0])

        self.assertEqual(result.experiment, Experiment.NONOVERLAP)
        self.assertEqual(_methods(result), [MethodName.FINETUNED, MethodName.NONOVERLAP, MethodName.OVERLAP])
        self.assertEqual(_tasks(result, MethodName.FINETUNED), ["0", "1"])
        self.assertEqual(_tasks(result, MethodName.NONOVERLAP), ["0", "1", NORMALIZED_TASK])
        self.assertEqual(_tasks(result, MethodName.OVERLAP), ["0", "1", NORMALIZED_TASK])
        self.assertEqual(result.metadata["layers"], {"expert0": ("layer0",), "expert1": ("layer1", "head")})
        self.assertEqual(result.metadata["layers"]["expert0"], NONOVERLAP_LAYERS[0])

    def test_ablation_rows_and_twin_beats_pretrained_model(self):
        result = ablation(SETTINGS, [0])

        self.assertEqual(result.experiment, Experiment.ABLATION)
        self.assertEqual(
            _methods(result),
            [MethodName.PRETRAIN, MethodName.SHARED, MethodName.PRETRAIN_DYNAMIC, MethodName.TWIN],
        )
        for method in _methods(result):
            self.assertEqual(_tasks(result, method), [*PER_TASK, NORMALIZED_TASK], method)
        self.assertGreater(_normalized(result, MethodName.TWIN)[0], _normalized(result, MethodName.PRETRAIN)[0])

    def test_unseen_task_is_scored_by_every_method(self):
        result = sweep_unseen(SETTINGS, [0])

        self.assertEqual(result.experiment, Experiment.UNSEEN)
        self.assertEqual(_methods(result), [*UNSEEN_METHODS, MethodName.TWIN])
        for row in result.rows:
            self.assertEqual((row.knob, row.value, row.task), ("task", "2", UNSEEN_TASK))
            self.assertTrue(0.0 <= row.score <= 1.0)
        self.assertEqual(len(result.summary()), len(UNSEEN_METHODS) + 1)

    def test_grouping_with_one_group_per_item_equals_per_sample(self):
        result = grouping(SETTINGS, [0], group_counts=[1, DEFAULT_BATCH_SIZE])

        self.assertEqual(result.experiment, Experiment.GROUPING)
        self.assertEqual(_methods(result), [MethodName.TWIN, MethodName.TWIN_GROUPED])
        self.assertEqual(_tasks(result, MethodName.TWIN_GROUPED, "1"), [*PER_TASK, NORMALIZED_TASK])
        per_sample = [r.score for r in result.rows if r.method == MethodName.TWIN]
        degenerate = [r.score for r in result.rows if r.value == str(DEFAULT_BATCH_SIZE)]
        self.assertEqual(degenerate, per_sample)

    def test_sweep_is_reproducible(self):
        config = SweepConfig(experiment=Experiment.COEFF_GRID, values=("0.5;0.5",))

        first = run_experiment(config, SETTINGS, [1])
        second = run_experiment(config, SETTINGS, [1])

        self.assertEqual(first.rows, second.rows)

    def test_rejects_empty_seeds(self):
        with self.assertRaises(ConfigError):
            run_experiment(SweepConfig(), SETTINGS, [])

    def test_rejects_malformed_values(self):
        config = replace(SweepConfig(), experiment=Experiment.TASKS, values=("two",))

        with self.assertRaises(ConfigError):
            run_experiment(config, SETTINGS, [0])


if __name__ == "__main__":
    unittest.main()
