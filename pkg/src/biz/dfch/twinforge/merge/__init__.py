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

"""merge package."""

from .baselines import (
    dare_deltas,
    task_arithmetic,
    task_arithmetic_dare,
    task_vectors,
    ties_merge,
    ties_merge_dare,
    weight_average,
)
from .coefficient_search import CoefficientSearch, search_coefficient
from .merge_method import MergeMethod
from .merge_recipe import DEFAULT_GAMMA_GRID, MergeRecipe
from .twin_merging import SHARED_NAME, TwinBank, dynamic_merge, extract_twins, twin_preprocess

__all__ = [
    "DEFAULT_GAMMA_GRID",
    "SHARED_NAME",
    "CoefficientSearch",
    "MergeMethod",
    "MergeRecipe",
    "TwinBank",
    "dare_deltas",
    "dynamic_merge",
    "extract_twins",
    "search_coefficient",
    "task_arithmetic",
    "task_arithmetic_dare",
    "task_vectors",
    "ties_merge",
    "ties_merge_dare",
    "twin_preprocess",
    "weight_average",
]
