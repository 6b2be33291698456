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

"""TestInvariants class."""

import unittest

from biz.dfch.twinforge.harness import run_selftest
from biz.dfch.twinforge.harness.invariants import (
    ADAPTER_CASES,
    DARE_MASKS,
    TRUNCATION_CASES,
    check_adapter_identity,
    check_dare_unbiased,
    check_truncation_residual,
)


class TestInvariants(unittest.TestCase):
    """The self checks behind the selftest command."""

    @classmethod
    def setUpClass(cls):
        cls.results = run_selftest(0)

    def test_every_check_passes(self):
        self.assertEqual(len(self.results), 8)
        for result in self.results:
            self.assertTrue(result.passed, f"{result.name}: {result.detail}")

    def test_default_case_counts(self):
        self.assertEqual((ADAPTER_CASES, DARE_MASKS, TRUNCATION_CASES), (20, 10_000, 50))

        results = {e.name: e.detail for e in self.results}

        self.assertIn("over 20 cases", results["adapter identity"])
        self.assertIn("over 10000 masks", results["drop-and-rescale unbiased"])
        self.assertIn("over 50 matrices", results["truncation residual"])

    def test_adapter_identity_over_seeds(self):
        for seed in range(4):
            result = check_adapter_identity(seed, cases=5)

            self.assertTrue(result.passed, result.detail)

    def test_truncation_residual_over_seeds(self):
        for seed in range(3):
            result = check_truncation_residual(seed)

            self.assertTrue(result.passed, result.detail)

    def test_dare_check_reports_standard_errors(self):
        result = check_dare_unbiased(3, masks=500)

        self.assertIn("standard errors", result.detail)


if __name__ == "__main__":
    unittest.main()
