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

"""TestMergeRecipe class."""

import unittest

from parameterized import parameterized

from biz.dfch.twinforge.errors import ArgumentError
from biz.dfch.twinforge.merge import DEFAULT_GAMMA_GRID, MergeMethod, MergeRecipe, search_coefficient


class TestMergeRecipe(unittest.TestCase):
    """Merge parameters, method names and the coefficient search."""

    def test_defaults(self):
        sut = MergeRecipe()

        self.assertEqual(sut.method, MergeMethod.TWIN)
        self.assertEqual(sut.shared_method, MergeMethod.TASK_ARITHMETIC)
        self.assertEqual(sut.gamma_grid, DEFAULT_GAMMA_GRID)
        self.assertIsNone(sut.gammas_for(4))

    @parameterized.expand(
        [
            ({"shared_method": MergeMethod.TWIN},),
            ({"ties_density": 0.0},),
            ({"ties_lambda": float("inf")},),
            ({"dare_drop_rate": 1.0},),
            ({"twin_rank": 0},),
            ({"gammas": (0.5, float("nan"))},),
            ({"gamma_grid": ()},),
        ]
    )
    def test_rejects_invalid(self, kwargs):
        with self.assertRaises(ArgumentError):
            MergeRecipe(**kwargs)

    def test_single_gamma_is_broadcast(self):
        sut = MergeRecipe(gammas=(0.3,))

        self.assertEqual(sut.gammas_for(3), (0.3, 0.3, 0.3))

    def test_gamma_count_mismatch(self):
        sut = MergeRecipe(gammas=(0.3, 0.4))

        with self.assertRaises(ArgumentError):
            sut.gammas_for(3)

    @parameterized.expand(
        [
            ("twin", MergeMethod.TWIN),
            ("task-arithmetic", MergeMethod.TASK_ARITHMETIC),
            (" TIES ", MergeMethod.TIES),
            ("Average", MergeMethod.AVERAGE),
        ]
    )
    def test_parse_method(self, value, expected):
        self.assertEqual(MergeMethod.parse(value), expected)

    def test_parse_unknown_method(self):
        with self.assertRaises(ValueError):
            MergeMethod.parse("fisher")

    def test_search_keeps_first_best(self):
        result = search_coefficient([0.1, 0.2, 0.3, 0.4], lambda g: -abs(g - 0.25))

        self.assertEqual(result.best, 0.2)
        self.assertEqual(len(result.scores), 4)

    def test_search_rejects_empty(self):
        with self.assertRaises(ArgumentError):
            search_coefficient([], lambda g: g)


if __name__ == "__main__":
    unittest.main()
