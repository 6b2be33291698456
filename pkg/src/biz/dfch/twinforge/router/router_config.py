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

"""RouterConfig class."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError


@dataclass(frozen=True)
class RouterConfig:
    """Parameters of router training."""

    epochs: int = 10
    lr: float = 5e-4
    hidden_dim: int = 64
    batch_size: int = 64
    momentum: float = 0.9
    max_items_per_task: int = 1000

    def __post_init__(self):
        if self.epochs < 0:
            raise ConfigError(f"router.epochs must be non-negative, got {self.epochs}.")
        if self.lr <= 0.0:
            raise ConfigError(f"router.lr must be positive, got {self.lr}.")
        if self.hidden_dim < 1 or self.batch_size < 2:
            raise ConfigError("router.hidden_dim must be positive and router.batch_size at least 2.")
        if not 1 <= self.max_items_per_task <= 1000:
            raise ConfigError(f"router.max_items_per_task must be in [1, 1000], got {self.max_items_per_task}.")
