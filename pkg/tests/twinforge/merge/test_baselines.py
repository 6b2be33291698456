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

"""TestBaselines class."""

import unittest

import numpy as np
from parameterized import parameterized

from biz.dfch.twinforge.checkpoint import Checkpoint, axpy, diff
from biz.dfch.twinforge.errors import ArgumentError, CompatibilityError
from biz.dfch.twinforge.merge import (
    dare_deltas,
    task_arithmetic,
    task_arithmetic_dare,
    task_vectors,
    ties_merge,
    ties_merge_dare,
    weight_average,
)
from tests.twinforge.fixtures import dyadic_checkpoint, random_checkpoint


def _vector(*values: float) -> Checkpoint:
    return Checkpoint({"w": np.array(values, dtype=np.float32)})


class TestBaselines(unittest.TestCase):
    """Weight averaging, task arithmetic, ties and their drop-and-rescale variants."""

    def test_average_of_identical_checkpoints(self):
        x = random_checkpoint(0)

        result = weight_average([x, x, x])

        for name in x:
            np.testing.assert_allclose(result[name], x[name], rtol=1e-6)

    def test_average_of_opposites_is_zero(self):
        x = random_checkpoint(1)
        negated = Checkpoint({name: -t for name, t in x.items()})

        result = weight_average([x, negated])

        for name in x:
            np.testing.assert_array_equal(result[name], np.zeros_like(x[name]))

    def test_average_matches_axpy(self):
        experts = [random_checkpoint(seed) for seed in (2, 3, 4)]
        zeros = Checkpoint.zeros_like(experts[0])

        expected = axpy(zeros, [diff(e, zeros) for e in experts], [1 / 3] * 3)
        result = weight_average(experts)

        for name in expected:
            np.testing.assert_allclose(result[name], expected[name], atol=1e-6)

    def test_average_rejects_empty(self):
        with self.assertRaises(ArgumentError):
            weight_average([])

    def test_task_arithmetic_zero_gammas_is_base(self):
        base = random_checkpoint(0)

        result = task_arithmetic(base, [random_checkpoint(1), random_checkpoint(2)], [0.0, 0.0])

        self.assertTrue(result.equals(base))

    def test_task_arithmetic_single_expert_is_exact(self):
        base, expert = dyadic_checkpoint(0), dyadic_checkpoint(1)

        result = task_arithmetic(base, [expert], [1.0])

        self.assertTrue(result.equals(expert))

    def test_task_arithmetic_equals_axpy_of_task_vectors(self):
        base, experts = random_checkpoint(0), [random_checkpoint(1), random_checkpoint(2)]

        result = task_arithmetic(base, experts, [0.3, 0.3])

        self.assertTrue(result.equals(axpy(base, [diff(e, base) for e in experts], [0.3, 0.3])))
        self.assertTrue(result.equals(axpy(base, task_vectors(base, experts), [0.3, 0.3])))

    def test_task_arithmetic_uniform_on_zeros_equals_average(self):
        experts = [random_checkpoint(seed) for seed in (5, 6, 7, 8)]
        zeros = Checkpoint.zeros_like(experts[0])

        result = task_arithmetic(zeros, experts, [0.25] * 4)
        expected = weight_average(experts)

        for name in expected:
            np.testing.assert_allclose(result[name], expected[name], atol=1e-6)

    def test_task_arithmetic_rejects_gamma_count(self):
        with self.assertRaises(ArgumentError):
            task_arithmetic(random_checkpoint(0), [random_checkpoint(1)], [0.5, 0.5])

    def test_task_arithmetic_rejects_incompatible(self):
        other = random_checkpoint(1, {"a.weight": (6, 4)})

        with self.assertRaises(CompatibilityError):
            task_arithmetic(random_checkpoint(0), [other], [1.0])

    def test_ties_single_expert_is_identity(self):
        base, expert = random_checkpoint(0), random_checkpoint(1)

        result = ties_merge(base, [expert], 1.0, 1.0)

        for name in expert:
            np.testing.assert_allclose(result[name], expert[name], atol=1e-6)

    def test_ties_elects_sign_and_averages_agreeing_entries(self):
        base = _vector(0.0, 0.0, 1.0)
        experts = [_vector(3.0, 2.0, 3.0), _vector(-1.0, -2.0, 3.0)]

        result = ties_merge(base, experts, 1.0, 1.0)

        np.testing.assert_allclose(result["w"], [3.0, 0.0, 3.0])

    def test_ties_applies_lambda_and_trims(self):
        base = _vector(0.0, 0.0, 0.0, 0.0)
        experts = [_vector(3.0, -1.0, 0.5, -4.0)]

        result = ties_merge(base, experts, 0.5, 2.0)

        np.testing.assert_allclose(result["w"], [6.0, 0.0, 0.0, -8.0])

    @parameterized.expand([(0.0, 1.0), (1.2, 1.0), (0.5, float("inf")), (0.5, float("nan"))])
    def test_ties_rejects_arguments(self, density, lambda_):
        with self.assertRaises(ArgumentError):
            ties_merge(random_checkpoint(0), [random_checkpoint(1)], density, lambda_)

    def test_frozen_tensors_are_preserved(self):
        base = random_checkpoint(0).with_meta(frozen="a.bias")
        experts = [
            Checkpoint({**random_checkpoint(seed).params, "a.bias": base["a.bias"]}) for seed in (1, 2)
        ]

        for result in (
            weight_average([base, *experts]),
            task_arithmetic(base, experts, [0.7, 0.7]),
            ties_merge(base, experts, 0.2, 1.0),
            task_arithmetic_dare(base, experts, [0.5, 0.5], 0.7, 0),
        ):
            np.testing.assert_array_equal(result["a.bias"], base["a.bias"])

    def test_frozen_tensor_that_differs_is_rejected(self):
        base = random_checkpoint(0).with_meta(frozen="a.bias")

        with self.assertRaises(CompatibilityError):
            task_arithmetic(base, [random_checkpoint(1)], [1.0])

    def test_dare_zero_rate_equals_plain_methods(self):
        base, experts = random_checkpoint(0), [random_checkpoint(1), random_checkpoint(2)]

        self.assertTrue(
            task_arithmetic_dare(base, experts, [0.5, 0.5], 0.0, 3).equals(task_arithmetic(base, experts, [0.5, 0.5]))
        )
        self.assertTrue(ties_merge_dare(base, experts, 0.5, 1.0, 0.0, 3).equals(ties_merge(base, experts, 0.5, 1.0)))

    def test_dare_deltas_use_one_stream_per_task(self):
        base, expert = random_checkpoint(0), random_checkpoint(1)

        first, second = dare_deltas(base, [expert, expert], 0.5, 9)

        self.assertFalse(first.equals(second))
        self.assertTrue(dare_deltas(base, [expert, expert], 0.5, 9)[0].equals(first))


if __name__ == "__main__":
    unittest.main()
