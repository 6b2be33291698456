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

"""TestLog class."""

import logging
import unittest

from biz.dfch.logging import get_project_root, get_project_src, log, set_level


class TestLog(unittest.TestCase):
    """The project logger and its configuration file."""

    def test_logger_name(self):
        self.assertEqual(log.name, "biz.dfch.twinforge")

    def test_configuration_file_lives_in_src(self):
        sut = get_project_src()

        self.assertEqual(sut, (get_project_root() / "src").resolve())
        self.assertTrue((sut / "logging.conf").is_file())

    def test_set_level_applies_to_root_handlers(self):
        handlers = logging.getLogger().handlers
        previous = [e.level for e in handlers]
        try:
            set_level("debug")

            self.assertTrue(all(e.level == logging.DEBUG for e in handlers))
        finally:
            for handler, level in zip(handlers, previous, strict=True):
                handler.setLevel(level)


if __name__ == "__main__":
    unittest.main()
