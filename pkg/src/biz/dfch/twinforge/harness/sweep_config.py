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

"""SweepConfig class."""

from __future__ import annotations

from dataclasses import dataclass

from ..compress import TwinKind
from ..errors import ConfigError
from .experiment import Experiment


@dataclass(frozen=True)
class SweepConfig:
    """Selection of the experiment of a sweep and its knob values.

    `values` of `None` uses the default values of the experiment. Values are
    kept as strings; coefficient pairs are written `g1;g2`.
    """

    experiment: Experiment = Experiment.COMPARE
    values: tuple[str, ...] | None = None
    kinds: tuple[TwinKind, ...] = (TwinKind.SVD, TwinKind.MAGNITUDE, TwinKind.BERNOULLI)
    jobs: int = 1

    def __post_init__(self):
        assert isinstance(self.experiment, Experiment), type(self.experiment)

        if self.jobs < 1:
            raise ConfigError(f"sweep.jobs must be positive, got {self.jobs}.")
        if not self.kinds:
            raise ConfigError("sweep.kinds must not be empty.")
        if self.values is not None and not self.values:
            raise ConfigError("sweep.values must not be empty.")
