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

"""Small deterministic inputs shared by the twinforge tests."""

from __future__ import annotations

import numpy as np

from biz.dfch.twinforge.checkpoint import Checkpoint
from biz.dfch.twinforge.toyzoo import Architecture, ExpertConfig, SuiteConfig, init_model

SMALL_ARCHITECTURE = Architecture(input_dim=8, hidden_dim=12, classes=3)
SMALL_SUITE = SuiteConfig(tasks=3, input_dim=8, classes=3, n_per_task=300, shared_strength=0.5)
SMALL_EXPERTS = ExpertConfig(hidden_dim=12, epochs=10, lr=0.05, batch_size=32)


def random_checkpoint(seed: int, shapes: dict[str, tuple[int, ...]] | None = None, scale: float = 1.0) -> Checkpoint:
    """A checkpoint of normal entries."""

    rng = np.random.default_rng(seed)
    layout = shapes if shapes is not None else {"a.weight": (6, 4), "a.bias": (6,), "b.weight": (3, 6)}

    return Checkpoint({name: (scale * rng.normal(size=shape)).astype(np.float32) for name, shape in layout.items()})


def dyadic_checkpoint(seed: int) -> Checkpoint:
    """A checkpoint of multiples of 1/256 in [-4, 4]; differences of two of them are exact in float32."""

    rng = np.random.default_rng(seed)
    layout = {"a.weight": (6, 4), "a.bias": (6,), "b.weight": (3, 6)}

    return Checkpoint(
        {name: (rng.integers(-1024, 1025, size=shape) / 256.0).astype(np.float32) for name, shape in layout.items()}
    )


def random_experts(seed: int, count: int, scale: float = 0.1) -> tuple[Checkpoint, list[Checkpoint]]:
    """A toy model base plus `count` experts perturbed around it."""

    base = init_model(SMALL_ARCHITECTURE, seed).params
    rng = np.random.default_rng(seed + 1000)
    experts = [
        Checkpoint({name: (t + scale * rng.normal(size=t.shape)).astype(np.float32) for name, t in base.items()})
        for _ in range(count)
    ]

    return base, experts
