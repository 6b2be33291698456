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

"""HarnessSettings class."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..merge import MergeRecipe
from ..router import RouterConfig
from ..toyzoo import ExpertConfig, SuiteConfig
from .eval_config import EvalConfig


@dataclass(frozen=True)
class HarnessSettings:
    """All parameters of one experiment cell except the seed."""

    suite: SuiteConfig = field(default_factory=SuiteConfig)
    experts: ExpertConfig = field(default_factory=ExpertConfig)
    merge: MergeRecipe = field(default_factory=MergeRecipe)
    router: RouterConfig = field(default_factory=RouterConfig)
    eval: EvalConfig = field(default_factory=EvalConfig)
