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

"""Seed derivation.

All randomness flows from explicit integer seeds. Child seeds for
sub-steps (task t, expert t, ...) are derived with `numpy.random.SeedSequence`
so that no two sub-steps share a stream.
"""

from __future__ import annotations

import numpy as np


def derive_seed(seed: int, *keys: int) -> int:
    """Returns a 32 bit child seed of `seed` keyed by `keys`."""

    entropy = [int(seed), *(int(e) for e in keys)]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """Returns a generator for the child stream (seed, *keys)."""

    return np.random.default_rng(np.random.SeedSequence([int(seed), *(int(e) for e in keys)]))
