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

"""EvalConfig class."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError
from .inference_mode import InferenceMode

DEFAULT_BATCH_SIZE = 400


@dataclass(frozen=True)
class EvalConfig:
    """Parameters of the inference loop.

    `alphas` of `None` uses the mixture weights of the suite.
    """

    mode: InferenceMode = InferenceMode.PER_SAMPLE
    group_count: int = 20
    alphas: tuple[float, ...] | None = None
    batch_size: int = DEFAULT_BATCH_SIZE
    oracle: bool = False

    def __post_init__(self):
        assert isinstance(self.mode, InferenceMode), type(self.mode)

        if self.group_count < 1:
            raise ConfigError(f"eval.group_count must be positive, got {self.group_count}.")
        if self.batch_size < 1:
            raise ConfigError(f"eval.batch_size must be positive, got {self.batch_size}.")
        if self.alphas is not None and (not self.alphas or any(a <= 0.0 for a in self.alphas)):
            raise ConfigError(f"eval.alphas must be positive: {self.alphas}.")
