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

"""TestTwinMerging class."""

import unittest

import numpy as np
from parameterized import parameterized

from biz.dfch.twinforge.checkpoint import Checkpoint
from biz.dfch.twinforge.compress import decompress
from biz.dfch.twinforge.errors import ArgumentError, CompatibilityError
from biz.dfch.twinforge.linalg import relative_error, svd
from biz.dfch.twinforge.merge import SHARED_NAME, TwinBank, dynamic_merge, twin_preprocess, weight_average
from tests.twinforge.fixtures import dyadic_checkpoint, random_checkpoint, random_experts


class TestTwinMerging(unittest.TestCase):
    """Shared expert, twin vectors and dynamic merging."""

    def test_single_expert_twin_is_zero(self):
        base, experts = dyadic_checkpoint(0), [dyadic_checkpoint(1)]

        shared, twins = twin_preprocess(base, experts, [1.0], None)

        self.assertTrue(shared.equals(experts[0]))
        self.assertEqual(shared.meta["name"], SHARED_NAME)
        for tensor in decompress(twins[0]).values():
            self.assertLessEqual(float(np.abs(tensor).max()), 1e-5)

    @parameterized.expand([(0,), (1,), (2,), (3,)])
    def test_one_hot_weights_recover_expert(self, task):
        base, experts = random_experts(1, 4)
        shared, twins = twin_preprocess(base, experts, [0.3] * 4, None)
        w = [0.0] * 4
        w[task] = 1.0

        result = dynamic_merge(shared, twins, w)

        for name in base:
            self.assertLessEqual(relative_error(result[name], experts[task][name]), 1e-5)

    def test_zero_weights_return_shared(self):
        base, experts = random_experts(2, 3)
        shared, twins = twin_preprocess(base, experts, [0.5] * 3, 2)

        result = dynamic_merge(shared, twins, [0.0, 0.0, 0.0])

        self.assertTrue(result.equals(shared))

    def test_uniform_weights_equal_average(self):
        base, experts = random_experts(3, 4)
        shared, twins = twin_preprocess(base, experts, [0.25] * 4, None)

        result = dynamic_merge(shared, twins, [0.25] * 4)
        expected = weight_average(experts)

        for name in expected:
            np.testing.assert_allclose(result[name], expected[name], atol=1e-5)

    def test_merge_is_affine_in_weights(self):
        base, experts = random_experts(4, 3)
        bank = TwinBank(*twin_preprocess(base, experts, [0.4] * 3, 3))
        w, v = np.array([0.2, 0.5, 0.3]), np.array([0.9, 0.05, 0.05])

        first, second, middle = bank.merge(w), bank.merge(v), bank.merge((w + v) / 2)

        for name in base:
            np.testing.assert_allclose((first[name] + second[name]) / 2, middle[name], atol=1e-5)

    def test_twin_spectra_are_sorted(self):
        base, experts = random_experts(5, 4)
        shared, twins = twin_preprocess(base, experts, [0.3] * 4, None)

        for twin in twins:
            for tensor in decompress(twin).values():
                if tensor.ndim == 2:
                    s = svd(tensor).s
                    self.assertTrue(np.all(s[:-1] >= s[1:]))
        self.assertEqual(twins[0].source_meta["shared"], SHARED_NAME)

    def test_rejects_weight_count(self):
        base, experts = random_experts(6, 2)
        shared, twins = twin_preprocess(base, experts, [0.5, 0.5], 1)

        with self.assertRaises(ArgumentError):
            dynamic_merge(shared, twins, [1.0])

    def test_rejects_non_finite_weights(self):
        base, experts = random_experts(6, 2)
        bank = TwinBank(*twin_preprocess(base, experts, [0.5, 0.5], 1))

        with self.assertRaises(ArgumentError):
            bank.merge([float("nan"), 1.0])

    def test_rejects_twin_of_other_model(self):
        _, twins = twin_preprocess(*random_experts(7, 1), [1.0], None)
        shared = random_checkpoint(0)

        with self.assertRaises(CompatibilityError):
            TwinBank(shared, twins)

    def test_bank_preserves_frozen(self):
        base, experts = random_experts(8, 2)
        name = next(iter(base))
        frozen_experts = [Checkpoint({**e.params, name: base[name]}) for e in experts]
        base = base.with_meta(frozen=name)
        bank = TwinBank(*twin_preprocess(base, frozen_experts, [0.5, 0.5], 1))

        result = bank.merge([0.7, 0.3])

        np.testing.assert_array_equal(result[name], base[name])
        self.assertEqual(bank.task_count, 2)


if __name__ == "__main__":
    unittest.main()
