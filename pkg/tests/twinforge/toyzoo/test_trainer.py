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

"""TestTrainer class."""

import unittest

import numpy as np

from biz.dfch.twinforge.checkpoint import Checkpoint
from biz.dfch.twinforge.errors import ArgumentError, DataError, ShapeError, StateError
from biz.dfch.twinforge.toyzoo import (
    Architecture,
    TaskSplit,
    ToyLayer,
    ToyModel,
    adapter_delta,
    gen_suite,
    init_model,
    merge_adapter,
    score,
    train_expert,
    with_adapter,
)
from tests.twinforge.fixtures import SMALL_ARCHITECTURE, SMALL_SUITE


def _small_suite():
    return gen_suite(
        task_count=SMALL_SUITE.tasks,
        input_dim=SMALL_SUITE.input_dim,
        classes=SMALL_SUITE.classes,
        n_per_task=SMALL_SUITE.n_per_task,
        shared_strength=SMALL_SUITE.shared_strength,
        seed=0,
    )


class TestTrainer(unittest.TestCase):
    """Expert training, adapters and scoring."""

    def test_zero_epochs_return_base(self):
        base = init_model(SMALL_ARCHITECTURE, 0)

        result = train_expert(base, _small_suite().tasks[0].train, 0, 0.05, 0)

        self.assertIs(result, base)

    def test_training_is_deterministic(self):
        base, data = init_model(SMALL_ARCHITECTURE, 1), _small_suite().tasks[1].train

        first = train_expert(base, data, 3, 0.05, 5)
        second = train_expert(base, data, 3, 0.05, 5)

        self.assertTrue(first.params.equals(second.params))
        self.assertFalse(first.params.equals(base.params))

    def test_default_suite_expert_learns_its_task(self):
        suite = gen_suite(seed=0)
        base = init_model(Architecture(input_dim=32, hidden_dim=64, classes=4), 0)

        expert = train_expert(base, suite.tasks[0].train, 30, 0.01, 0)

        self.assertGreaterEqual(score(expert, suite.tasks[0].test), 0.9)

    def test_adapter_training_freezes_base(self):
        base, data = init_model(SMALL_ARCHITECTURE, 2), _small_suite().tasks[0].train

        result = train_expert(
            base, data, 2, 0.05, 0, use_adapter=True, adapter_modules=[ToyLayer.LAYER1], adapter_rank=2
        )

        self.assertTrue(result.params.equals(base.params))
        self.assertEqual(result.adapted_layers, (ToyLayer.LAYER1,))
        self.assertGreater(float(np.abs(result.adapter[ToyLayer.LAYER1.lora_b]).max()), 0.0)

    def test_zero_adapter_folds_to_base(self):
        base = init_model(SMALL_ARCHITECTURE, 3)
        adapted = with_adapter(base, list(ToyLayer), rank=2, seed=1)

        result = merge_adapter(adapted)

        self.assertTrue(result.equals(base.params))

    def test_full_rank_adapter_fold_recovers_product(self):
        base = init_model(SMALL_ARCHITECTURE, 4)
        rank = min(SMALL_ARCHITECTURE.weight_shape(ToyLayer.LAYER0))
        adapted = with_adapter(base, [ToyLayer.LAYER0], rank=rank, seed=2, init_scale=0.5)
        layer = ToyLayer.LAYER0
        expected = adapted.adapter[layer.lora_b].astype(np.float64) @ adapted.adapter[layer.lora_a].astype(np.float64)

        folded = merge_adapter(adapted)

        np.testing.assert_allclose(folded[layer.weight] - base.params[layer.weight], expected, atol=1e-5)
        np.testing.assert_allclose(adapter_delta(adapted)[layer.weight], expected, atol=1e-5)
        np.testing.assert_array_equal(folded[ToyLayer.HEAD.weight], base.params[ToyLayer.HEAD.weight])

    def test_merge_adapter_requires_adapter(self):
        with self.assertRaises(StateError):
            merge_adapter(init_model(SMALL_ARCHITECTURE, 0))

    def test_score_of_constant_model_is_chance(self):
        base = init_model(SMALL_ARCHITECTURE, 0)
        params = {name: np.zeros_like(t) for name, t in base.params.items()}
        data = _small_suite().tasks[0].test
        constant = ToyModel(architecture=base.architecture, params=Checkpoint(params))

        self.assertAlmostEqual(score(constant, data), 1.0 / SMALL_ARCHITECTURE.classes, delta=0.1)

    def test_score_is_permutation_invariant(self):
        model, data = init_model(SMALL_ARCHITECTURE, 5), _small_suite().tasks[2].test
        order = np.random.default_rng(0).permutation(len(data))

        shuffled = TaskSplit(x=data.x[order], y=data.y[order])

        self.assertEqual(score(model, shuffled), score(model, data))

    def test_score_rejects_empty(self):
        x = np.zeros((0, SMALL_ARCHITECTURE.input_dim), dtype=np.float32)
        empty = TaskSplit(x=x, y=np.zeros(0, dtype=np.int64))

        with self.assertRaises(DataError):
            score(init_model(SMALL_ARCHITECTURE, 0), empty)

    def test_rejects_mismatched_data(self):
        data = TaskSplit(x=np.zeros((4, 3), dtype=np.float32), y=np.zeros(4, dtype=np.int64))

        with self.assertRaises(ShapeError):
            train_expert(init_model(SMALL_ARCHITECTURE, 0), data, 1, 0.05, 0)

    def test_rejects_learning_rate(self):
        with self.assertRaises(ArgumentError):
            train_expert(init_model(SMALL_ARCHITECTURE, 0), _small_suite().tasks[0].train, 1, 0.0, 0)


if __name__ == "__main__":
    unittest.main()
