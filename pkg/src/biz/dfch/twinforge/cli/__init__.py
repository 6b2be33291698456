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

"""cli package."""

from .app import App
from .args import Args
from .run_config import CONFIG_ECHO_NAME, OUTPUT_ENVIRONMENT_VARIABLE, RunConfig

__all__ = [
    "CONFIG_ECHO_NAME",
    "OUTPUT_ENVIRONMENT_VARIABLE",
    "App",
    "Args",
    "RunConfig",
]
