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

"""TestRunConfig class."""

import argparse
import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from parameterized import parameterized

from biz.dfch.twinforge.cli import OUTPUT_ENVIRONMENT_VARIABLE, RunConfig
from biz.dfch.twinforge.errors import ArgumentError, ConfigError
from biz.dfch.twinforge.harness import Experiment, InferenceMode
from biz.dfch.twinforge.merge import MergeMethod


class TestRunConfig(unittest.TestCase):
    """Binding, overriding and echoing of the JSON run configuration."""

    def test_empty_document_gives_defaults(self):
        """An empty JSON object is a complete configuration."""

        sut = RunConfig.from_mapping({})

        self.assertEqual(sut, RunConfig())
        self.assertEqual(sut.seeds, (0,))
        self.assertEqual(sut.merge.method, MergeMethod.TWIN)

    def test_echo_contains_every_default(self):
        """The echo lists every section with all of its fields."""

        echo = RunConfig().to_dict()

        self.assertEqual(set(echo), {"suite", "experts", "merge", "router", "eval", "sweep", "output_dir", "seeds"})
        self.assertEqual(echo["router"]["lr"], 5e-4)
        self.assertEqual(RunConfig.from_mapping(echo), RunConfig())

    def test_binds_sections(self):
        """Names parse leniently and lists become tuples."""

        data = {
            "suite": {"tasks": 3, "shared_strength": 1},
            "merge": {"method": "task-arithmetic", "gammas": [0.3, 0.4, 0.5]},
            "eval": {"mode": "grouped", "group_count": 5},
            "sweep": {"experiment": "coeff_grid", "values": ["0;0"]},
            "seeds": [1, 2],
        }

        sut = RunConfig.from_mapping(data)

        self.assertEqual(sut.suite.shared_strength, 1.0)
        self.assertEqual(sut.merge.method, MergeMethod.TASK_ARITHMETIC)
        self.assertEqual(sut.merge.gammas, (0.3, 0.4, 0.5))
        self.assertEqual(sut.eval.mode, InferenceMode.GROUPED)
        self.assertEqual(sut.sweep.experiment, Experiment.COEFF_GRID)
        self.assertEqual(sut.seeds, (1, 2))

    @parameterized.expand(
        [
            ({"unknown": 1},),
            ({"suite": {"tasks": 4, "colour": "red"}},),
            ({"suite": {"tasks": "four"}},),
            ({"suite": {"tasks": 1}},),
            ({"merge": {"method": "fisher"}},),
            ({"merge": {"ties_density": 2.0}},),
            ({"seeds": []},),
            ({"seeds": [-1]},),
        ]
    )
    def test_rejects(self, data):
        """Unknown keys, wrong types and invalid values are configuration errors."""

        with self.assertRaises(ConfigError):
            RunConfig.from_mapping(data)

    def test_load(self):
        """A configuration file is read from disk."""

        with tempfile.TemporaryDirectory() as root:
            path = Path(root) / "config.json"
            path.write_text(json.dumps({"seeds": [7]}), encoding="utf-8")

            sut = RunConfig.load(path)

        self.assertEqual(sut.seed, 7)
        self.assertEqual(RunConfig.load(None), RunConfig())

    def test_load_rejects_malformed_file(self):
        """Unreadable and non-object documents are configuration errors."""

        with tempfile.TemporaryDirectory() as root:
            path = Path(root) / "config.json"
            path.write_text("[1, 2]", encoding="utf-8")

            with self.assertRaises(ConfigError):
                RunConfig.load(path)
            with self.assertRaises(ConfigError):
                RunConfig.load(Path(root) / "missing.json")

    def test_arguments_override(self):
        """Command line values replace configured ones."""

        args = argparse.Namespace(
            method="ties",
            rank=4,
            density=0.5,
            drop_rate=0.7,
            gamma=[0.3],
            mode="per-sample",
            group_count=3,
            seed=[5, 6],
        )

        sut = RunConfig().with_arguments(args)

        self.assertEqual(sut.merge.method, MergeMethod.TIES)
        self.assertEqual(sut.merge.twin_rank, 4)
        self.assertEqual(sut.merge.ties_density, 0.5)
        self.assertEqual(sut.merge.dare_drop_rate, 0.7)
        self.assertEqual(sut.merge.gammas, (0.3,))
        self.assertEqual(sut.eval.group_count, 3)
        self.assertEqual(sut.seeds, (5, 6))

    def test_absent_arguments_keep_configuration(self):
        """A namespace without overrides leaves the configuration unchanged."""

        sut = RunConfig(seeds=(3,))

        self.assertEqual(sut.with_arguments(argparse.Namespace(command="storage")), sut)

    def test_invalid_overrides(self):
        """Out-of-range and unknown overrides fail."""

        with self.assertRaises(ArgumentError):
            RunConfig().with_arguments(argparse.Namespace(rank=0))
        with self.assertRaises(ConfigError):
            RunConfig().with_arguments(argparse.Namespace(mode="batched"))

    def test_digest_ignores_output_directory(self):
        """The run directory name depends on the settings only."""

        first = RunConfig(output_dir="a")
        second = RunConfig(output_dir="b")
        third = RunConfig(seeds=(1,))

        self.assertEqual(first.digest(), second.digest())
        self.assertNotEqual(first.digest(), third.digest())
        self.assertEqual(len(first.digest()), 12)

    def test_environment_overrides_output_directory(self):
        """TWINFORGE_OUT replaces the configured output directory."""

        with patch.dict(os.environ, {OUTPUT_ENVIRONMENT_VARIABLE: "/tmp/elsewhere"}):
            sut = RunConfig(output_dir="out").with_environment()

        self.assertEqual(sut.output_dir, "/tmp/elsewhere")

    def test_run_directory(self):
        """Run directories are created below the output directory."""

        with tempfile.TemporaryDirectory() as root:
            sut = RunConfig(output_dir=root)

            result = sut.run_directory("merge")

            self.assertTrue(result.is_dir())
            self.assertEqual(result, Path(root) / sut.digest() / "merge")


if __name__ == "__main__":
    unittest.main()
