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

"""ToyLayer enum."""

from enum import StrEnum


class ToyLayer(StrEnum):
    """The affine layers of a toy model, in forward order."""

    LAYER0 = "layer0"
    LAYER1 = "layer1"
    HEAD = "head"

    @property
    def weight(self) -> str:
        """Name of the weight tensor."""

        return f"{self.value}.weight"

    @property
    def bias(self) -> str:
        """Name of the bias tensor."""

        return f"{self.value}.bias"

    @property
    def lora_a(self) -> str:
        """Name of the adapter down projection."""

        return f"{self.value}.lora_a"

    @property
    def lora_b(self) -> str:
        """Name of the adapter up projection."""

        return f"{self.value}.lora_b"
