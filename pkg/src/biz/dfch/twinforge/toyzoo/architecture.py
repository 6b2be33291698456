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

"""Architecture class."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from ..errors import ArgumentError, ShapeError
from .toy_layer import ToyLayer


@dataclass(frozen=True)
class Architecture:
    """Layer sizes of a toy MLP: input d -> hidden h -> hidden h -> classes c."""

    input_dim: int = 32
    hidden_dim: int = 64
    classes: int = 4

    def __post_init__(self):
        for name in ("input_dim", "hidden_dim", "classes"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ArgumentError(f"{name} must be a positive integer, got '{value}'.")

    def weight_shape(self, layer: ToyLayer) -> tuple[int, int]:
        """(d_out, d_in) of a layer."""

        assert isinstance(layer, ToyLayer)

        match layer:
            case ToyLayer.LAYER0:
                return (self.hidden_dim, self.input_dim)
            case ToyLayer.LAYER1:
                return (self.hidden_dim, self.hidden_dim)
            case ToyLayer.HEAD:
                return (self.classes, self.hidden_dim)

        raise ArgumentError(f"Invalid {ToyLayer.__name__}: '{layer}'.")

    def shapes(self) -> dict[str, tuple[int, ...]]:
        """Tensor shapes by name."""

        result: dict[str, tuple[int, ...]] = {}
        for layer in ToyLayer:
            d_out, d_in = self.weight_shape(layer)
            result[layer.weight] = (d_out, d_in)
            result[layer.bias] = (d_out,)

        return dict(sorted(result.items()))

    @property
    def parameter_count(self) -> int:
        """Number of dense parameters."""

        total = 0
        for shape in self.shapes().values():
            count = 1
            for e in shape:
                count *= e
            total += count

        return total

    @classmethod
    def of(cls, shapes: Mapping[str, tuple[int, ...]]) -> Architecture:
        """The architecture whose tensors have exactly `shapes`.

        Raises:
            ShapeError: If the shapes are not those of a toy model.
        """

        try:
            hidden_dim, input_dim = shapes[ToyLayer.LAYER0.weight]
            classes = shapes[ToyLayer.HEAD.weight][0]
        except (KeyError, ValueError, IndexError) as ex:
            raise ShapeError(f"Not a toy model checkpoint: {dict(shapes)}.") from ex

        result = cls(input_dim=int(input_dim), hidden_dim=int(hidden_dim), classes=int(classes))
        if {name: tuple(shape) for name, shape in shapes.items()} != result.shapes():
            raise ShapeError(f"Shapes {dict(shapes)} do not match {result}.")

        return result
