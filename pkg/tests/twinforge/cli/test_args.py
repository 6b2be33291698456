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

"""TestArgs class."""

import argparse
import logging
import unittest

from parameterized import parameterized

from biz.dfch.logging import set_level
from biz.dfch.twinforge.cli import Args


class TestArgs(unittest.TestCase):
    """Tests the command line definition and the log level resolution."""

    @parameterized.expand(
        [
            (None, 0, "ERROR"),
            (None, 1, "WARNING"),
            (None, 2, "INFO"),
            (None, 3, "DEBUG"),
            (None, 5, "DEBUG"),
            ("info", 3, "INFO"),
            ("CRITICAL", 0, "CRITICAL"),
        ]
    )
    def test_effective_log_level(self, log_level, verbosity, expected):
        """An explicit `--log-level` takes precedence over `-v`."""

        args = argparse.Namespace(log_level=log_level, v=verbosity)

        result = Args.get_effective_log_level_name(args)

        self.assertEqual(expected, result)

    def test_effective_log_level_without_verbosity(self):
        """A namespace without `-v` uses the default level."""

        result = Args.get_effective_log_level_name(argparse.Namespace())

        self.assertEqual("ERROR", result)

    @parameterized.expand(
        [
            ("storage", ["storage", "-T", "2", "--params", "10"]),
            ("merge", ["merge", "--base", "b.safetensors", "--experts", "e0.safetensors", "e1.safetensors"]),
            ("sweep", ["sweep", "--experiment", "sparsity", "--values", "0.5", "0.9", "--jobs", "2"]),
            ("selftest", ["selftest", "-vv", "--seed", "1", "2"]),
        ]
    )
    def test_parse_commands(self, command, argv):
        """Every command parses with the common options."""

        sut = Args().invoke()

        result = sut.parse_args(argv)

        self.assertEqual(command, result.command)

    def test_merge_requires_base(self):
        """`merge` without `--base` is a usage error."""

        sut = Args().invoke()

        with self.assertRaises(SystemExit):
            sut.parse_args(["merge", "--experiments", "e0.safetensors"])

    def test_description_has_version(self):
        """The description names the program and a version."""

        sut = Args().invoke()

        self.assertTrue(sut.description.startswith("twinforge, v"))

    def test_set_level_updates_handlers(self):
        """`set_level` changes the threshold of the root handlers."""

        handlers = logging.getLogger().handlers
        previous = [e.level for e in handlers]
        try:
            set_level("debug")
            for handler in handlers:
                self.assertEqual(logging.DEBUG, handler.level)
        finally:
            for handler, level in zip(handlers, previous, strict=True):
                handler.setLevel(level)


if __name__ == "__main__":
    unittest.main()
