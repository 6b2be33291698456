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

"""TestContainer class."""

import tempfile
import unittest
from pathlib import Path

import numpy as np
from safetensors.numpy import save_file

from biz.dfch.twinforge.checkpoint import Checkpoint, load, read_tensors, save, write_tensors
from biz.dfch.twinforge.errors import CheckpointIOError, FormatError, NumericError, ShapeError
from tests.twinforge.fixtures import random_checkpoint


class TestContainer(unittest.TestCase):
    """Container file reading and writing."""

    def setUp(self):
        self._dir = tempfile.TemporaryDirectory()  # pylint: disable=R1732
        self.root = Path(self._dir.name)

    def tearDown(self):
        self._dir.cleanup()

    def test_save_load_keeps_tensors_and_meta(self):
        sut = random_checkpoint(0).with_meta(name="expert0", frozen="a.bias")
        path = self.root / "c.safetensors"

        save(sut, path)
        result = load(path)

        self.assertTrue(result.equals(sut))
        self.assertEqual(dict(result.meta), dict(sut.meta))

    def test_output_bytes_are_deterministic(self):
        sut = random_checkpoint(1)
        first, second = self.root / "1.safetensors", self.root / "2.safetensors"

        save(sut, first)
        save(Checkpoint(dict(sut.params), dict(sut.meta)), second)

        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_missing_file_raises(self):
        with self.assertRaises(CheckpointIOError):
            load(self.root / "missing.safetensors")

    def test_garbage_file_raises(self):
        path = self.root / "garbage.safetensors"
        path.write_bytes(b"\x08\x00\x00\x00\x00\x00\x00\x00not json")

        with self.assertRaises(FormatError):
            load(path)

    def test_wrong_dtype_raises(self):
        path = self.root / "f64.safetensors"
        save_file({"w": np.zeros(3, dtype=np.float64)}, str(path))

        with self.assertRaises(FormatError):
            read_tensors(path)

    def test_non_finite_payload_raises(self):
        path = self.root / "nan.safetensors"
        save_file({"w": np.array([1.0, np.nan], dtype=np.float32)}, str(path))

        with self.assertRaises(NumericError):
            read_tensors(path)

    def test_write_rejects_non_float32(self):
        with self.assertRaises(ShapeError):
            write_tensors(self.root / "x.safetensors", {"w": np.zeros(2, dtype=np.int64)})


if __name__ == "__main__":
    unittest.main()
