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

"""TestPipeline class."""

import unittest
from dataclasses import replace

import numpy as np

from biz.dfch.twinforge.errors import ArgumentError, ConfigError
from biz.dfch.twinforge.harness import (
    EvalConfig,
    InferenceMode,
    MethodName,
    apply_static,
    build_zoo,
    evaluate_static,
    evaluate_twin,
    fit_router,
    make_suite,
    merge_static,
    method_for,
    mixture_items,
    prepare_twin,
    run_inference,
    select_gammas,
    storage_for,
)
from biz.dfch.twinforge.merge import MergeMethod, MergeRecipe
from biz.dfch.twinforge.router import RouterConfig
from biz.dfch.twinforge.toyzoo import ToyModel
from tests.twinforge.fixtures import SMALL_EXPERTS, SMALL_SUITE

RECIPE = MergeRecipe(gamma_grid=(0.3, 0.6, 1.0))
ROUTER = RouterConfig(epochs=5, lr=5e-3, hidden_dim=16)


class TestPipeline(unittest.TestCase):
    """Static merges, twin preparation and the inference loop on a small zoo."""

    @classmethod
    def setUpClass(cls):
        cls.zoo = build_zoo(make_suite(SMALL_SUITE, 0), SMALL_EXPERTS, 0)
        cls.artifacts = prepare_twin(cls.zoo, RECIPE, ROUTER, 0)

    def test_zoo(self):
        self.assertEqual(self.zoo.task_count, 3)
        self.assertEqual(self.zoo.experts[1].meta["name"], "expert1")
        self.assertTrue(all(0.0 < s <= 1.0 for s in self.zoo.ft_scores))

    def test_method_for(self):
        self.assertEqual(method_for(MergeMethod.TIES, dare=True), MethodName.TIES_DARE)
        self.assertEqual(method_for(MergeMethod.AVERAGE), MethodName.WEIGHT_AVERAGE)
        with self.assertRaises(ArgumentError):
            method_for(MergeMethod.TWIN)

    def test_apply_static_needs_coefficients(self):
        with self.assertRaises(ArgumentError):
            apply_static(self.zoo.base.params, self.zoo.experts, MethodName.TASK_ARITHMETIC, MergeRecipe(), 0)
        with self.assertRaises(ArgumentError):
            apply_static(self.zoo.base.params, self.zoo.experts, MethodName.TIES, MergeRecipe(), 0)

    def test_apply_static_pretrain_is_base(self):
        result = apply_static(self.zoo.base.params, self.zoo.experts, MethodName.PRETRAIN, RECIPE, 0)

        self.assertIs(result, self.zoo.base.params)

    def test_selected_gamma_comes_from_grid(self):
        gammas = select_gammas(self.zoo, RECIPE)

        self.assertEqual(len(set(gammas)), 1)
        self.assertIn(gammas[0], RECIPE.gamma_grid)

    def test_configured_gammas_skip_search(self):
        recipe = replace(RECIPE, gammas=(0.4,))

        self.assertEqual(select_gammas(self.zoo, recipe), (0.4, 0.4, 0.4))

    def test_merge_static_shared(self):
        result = merge_static(self.zoo, MethodName.SHARED, RECIPE, 0)

        self.assertEqual(result.meta["name"], "shared")
        self.assertTrue(result.equals(self.artifacts.shared))

    def test_evaluate_static_of_expert(self):
        scores, _ = evaluate_static(self.zoo, self.zoo.experts[2])

        self.assertEqual(scores[2], self.zoo.ft_scores[2])

    def test_single_task_needs_no_router(self):
        suite = self.zoo.suite.subset([0])
        shared = ToyModel(architecture=self.zoo.architecture, params=self.artifacts.shared)

        self.assertIsNone(fit_router(suite, shared, ROUTER, 0))

    def test_oracle_routing_recovers_experts(self):
        report = evaluate_twin(self.zoo, self.artifacts, EvalConfig(oracle=True), 0)

        self.assertAlmostEqual(report.normalized_score, 100.0, delta=0.5)
        self.assertEqual(report.merge_count, 3)

    def test_large_group_count_equals_per_sample(self):
        per_sample = evaluate_twin(self.zoo, self.artifacts, EvalConfig(), 1)
        grouped = evaluate_twin(self.zoo, self.artifacts, EvalConfig(mode=InferenceMode.GROUPED, group_count=10_000), 1)

        self.assertEqual(grouped.per_task_scores, per_sample.per_task_scores)
        self.assertEqual(grouped.to_dict()["normalized_score"], per_sample.to_dict()["normalized_score"])

    def test_grouping_bounds_merge_count(self):
        report = evaluate_twin(self.zoo, self.artifacts, EvalConfig(mode=InferenceMode.GROUPED, group_count=2), 0)

        batches = int(np.ceil(sum(len(t.test) for t in self.zoo.suite.tasks) / EvalConfig().batch_size))
        self.assertLessEqual(report.merge_count, 2 * 3 * batches)

    def test_inference_rejects_task_mismatch(self):
        with self.assertRaises(ConfigError):
            run_inference(
                self.artifacts.shared,
                self.artifacts.twins[:2],
                self.artifacts.router,
                self.zoo.suite,
                self.zoo.architecture,
                self.zoo.ft_scores,
            )

    def test_mixture_follows_weights(self):
        _, _, task_ids = mixture_items(self.zoo.suite, (0.5, 0.25, 0.25), 0)

        counts = np.bincount(task_ids)
        self.assertEqual(counts[0], len(self.zoo.suite.tasks[0].test))
        self.assertEqual(counts[1], round(counts[0] / 2))

    def test_mixture_rejects_weight_count(self):
        with self.assertRaises(ConfigError):
            mixture_items(self.zoo.suite, (0.5, 0.5), 0)

    def test_storage_of_lossless_twins(self):
        sut = storage_for(self.zoo, SMALL_EXPERTS, self.artifacts.twins, self.artifacts.router)

        self.assertEqual(sut.T, 3)
        self.assertEqual(sut.P, self.zoo.architecture.parameter_count)
        self.assertEqual(sut.k, 1.0)
        self.assertGreater(sut.P_r, 0)

    def test_report_to_dict_has_no_wall_time(self):
        report = evaluate_twin(self.zoo, self.artifacts, EvalConfig(), 0, experts=SMALL_EXPERTS)

        result = report.to_dict()

        self.assertNotIn("wall_time", result)
        self.assertEqual(set(result["per_task_scores"]), {"0", "1", "2"})
        self.assertIsNotNone(result["storage_bytes"])


if __name__ == "__main__":
    unittest.main()
