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

"""Exception hierarchy of the twinforge package.

Every exception carries the process exit code the command line surface
returns when the exception reaches it.
"""


class TwinforgeError(Exception):
    """Base class of all twinforge errors."""

    exit_code: int = 2


class ConfigError(TwinforgeError):
    """A run configuration is invalid or inconsistent."""

    exit_code = 1


class ArgumentError(TwinforgeError, ValueError):
    """A parameter is outside its domain."""

    exit_code = 1


class ShapeError(TwinforgeError):
    """A tensor has the wrong rank or shape."""


class CompatibilityError(TwinforgeError):
    """Checkpoints do not share names, shapes or frozen tensors."""


class FormatError(TwinforgeError):
    """A container file does not conform to the layout."""


class CheckpointIOError(TwinforgeError):
    """A container file cannot be read or written."""


class DataError(TwinforgeError):
    """A dataset is empty, malformed or violates a size limit."""


class StateError(TwinforgeError):
    """An object is not in the state an operation requires."""


class NumericError(TwinforgeError):
    """Non-finite values were found or produced."""

    exit_code = 3


class TrainingError(NumericError):
    """Training diverged."""


class MetricError(NumericError):
    """A metric is undefined for its inputs."""
