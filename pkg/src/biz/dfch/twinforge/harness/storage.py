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

"""Storage accounting of merged deployments at 16 bits per parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from numbers import Integral, Real

from ..errors import ArgumentError

BYTES_PER_PARAMETER = 2


@dataclass(frozen=True)
class StorageAccount:  # pylint: disable=R0902
    """Parameter counts and the resulting byte counts.

    T: tasks; P: parameters of one model; P_a: adapted parameters per expert;
    P_f: frozen parameters; P_r: router parameters; k: compression ratio.
    """

    T: int  # pylint: disable=C0103
    P: int  # pylint: disable=C0103
    P_a: int  # pylint: disable=C0103
    P_f: int  # pylint: disable=C0103
    P_r: int  # pylint: disable=C0103
    k: float
    bytes_finetuned: int
    bytes_single: int
    bytes_twin: int

    def to_dict(self) -> dict[str, int | float]:
        """Plain mapping for reports."""

        return dict(self.__dict__)


def _count(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, Real):
        raise ArgumentError(f"{name} must be a number, got '{value!r}'.")
    if not isinstance(value, Integral) and not float(value).is_integer():
        raise ArgumentError(f"{name} must be integral, got '{value}'.")

    result = int(value)
    if result < 0:
        raise ArgumentError(f"{name} must be non-negative, got {result}.")

    return result


def storage_report(  # pylint: disable=C0103,R0913,R0917
    T: int, P: int, P_a: int, P_f: int, P_r: int, k: float
) -> StorageAccount:
    """Evaluates the byte formulas in exact integer arithmetic.

    bytes_finetuned = 2 (T P_a + P_f)
    bytes_single    = 2 P
    bytes_twin      = 2 T ceil(k P_a) + 2 P + P_r

    Raises:
        ArgumentError: If a count is negative or `k` is not in (0, 1].
    """

    named = (("T", T), ("P", P), ("P_a", P_a), ("P_f", P_f), ("P_r", P_r))
    counts = {name: _count(name, value) for name, value in named}
    if isinstance(k, bool) or not isinstance(k, Real) or not 0.0 < float(k) <= 1.0:
        raise ArgumentError(f"k must be in (0, 1], got '{k}'.")

    compressed = math.ceil(Decimal(repr(float(k))) * counts["P_a"])

    return StorageAccount(
        T=counts["T"],
        P=counts["P"],
        P_a=counts["P_a"],
        P_f=counts["P_f"],
        P_r=counts["P_r"],
        k=float(k),
        bytes_finetuned=BYTES_PER_PARAMETER * (counts["T"] * counts["P_a"] + counts["P_f"]),
        bytes_single=BYTES_PER_PARAMETER * counts["P"],
        bytes_twin=BYTES_PER_PARAMETER * counts["T"] * compressed + BYTES_PER_PARAMETER * counts["P"] + counts["P_r"],
    )
