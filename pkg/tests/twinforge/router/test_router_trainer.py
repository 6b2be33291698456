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

"""TestRouterTrainer class."""

import unittest

import numpy as np

from biz.dfch.twinforge.errors import ArgumentError, DataError
from biz.dfch.twinforge.router import RouterTrainer, init_router, train_router


def _separable(n: int = 200, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    x = np.concatenate([rng.normal(-2.0, 0.3, size=(n, 1)), rng.normal(2.0, 0.3, size=(n, 1))])
    y = np.concatenate([np.zeros(n, dtype=np.int64), np.ones(n, dtype=np.int64)])

    return x, y


class TestRouterTrainer(unittest.TestCase):
    """Router training on (embedding, task id) pairs."""

    def test_separable_tasks_are_learned(self):
        x, y = _separable()

        sut = train_router(x, y, epochs=20, lr=5e-3, seed=0, hidden_dim=16)
        predicted = np.array([d.task for d in sut.route_batch(x)])

        self.assertGreaterEqual(float(np.mean(predicted == y)), 0.99)

    def test_loss_decreases(self):
        x, y = _separable(seed=1)
        sut = RouterTrainer(task_count=2, epochs=10, lr=5e-3, hidden_dim=16)

        sut.fit(x, y)

        self.assertEqual(len(sut.history), 10)
        self.assertLess(sut.history[-1], sut.history[0])

    def test_zero_epochs_return_initialized_router(self):
        x, y = _separable()

        result = train_router(x, y, epochs=0, seed=4, hidden_dim=16)
        expected = init_router(1, 2, 16, 4)

        for actual, initial in zip(result.weights, expected.weights, strict=True):
            np.testing.assert_array_equal(actual, initial)

    def test_is_deterministic(self):
        x, y = _separable()

        first = train_router(x, y, epochs=3, seed=5, hidden_dim=8)
        second = train_router(x, y, epochs=3, seed=5, hidden_dim=8)

        for a, b in zip(first.weights, second.weights, strict=True):
            np.testing.assert_array_equal(a, b)

    def test_rejects_empty_task(self):
        x, y = _separable()

        with self.assertRaises(DataError):
            train_router(x, y, task_count=3)

    def test_rejects_too_many_items(self):
        x, y = _separable(n=1001)

        with self.assertRaises(DataError):
            train_router(x, y)

    def test_rejects_single_task(self):
        with self.assertRaises(ArgumentError):
            train_router(np.zeros((4, 2)), np.zeros(4, dtype=np.int64))


if __name__ == "__main__":
    unittest.main()
