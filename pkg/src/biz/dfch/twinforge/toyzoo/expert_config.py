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

"""ExpertConfig class."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError
from .model_factory import DEFAULT_ADAPTER_RANK
from .trainer import DEFAULT_BATCH_SIZE, DEFAULT_MOMENTUM


@dataclass(frozen=True)
class ExpertConfig:  # pylint: disable=R0902
    """Parameters of base model construction and expert fine-tuning."""

    hidden_dim: int = 64
    epochs: int = 30
    lr: float = 0.01
    batch_size: int = DEFAULT_BATCH_SIZE
    momentum: float = DEFAULT_MOMENTUM
    use_adapter: bool = False
    adapter_modules: tuple[str, ...] | None = None
    adapter_rank: int = DEFAULT_ADAPTER_RANK
    pretrain_epochs: int = 0
    pretrain_lr: float = 0.01

    def __post_init__(self):
        if self.hidden_dim < 1 or self.batch_size < 1 or self.adapter_rank < 1:
            raise ConfigError("experts.hidden_dim, experts.batch_size and experts.adapter_rank must be positive.")
        if self.epochs < 0 or self.pretrain_epochs < 0:
            raise ConfigError("experts.epochs and experts.pretrain_epochs must be non-negative.")
        if self.lr <= 0.0 or self.pretrain_lr <= 0.0:
            raise ConfigError("experts.lr and experts.pretrain_lr must be positive.")
