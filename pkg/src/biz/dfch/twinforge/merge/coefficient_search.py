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

"""Validation grid search of merge coefficients."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from biz.dfch.logging import log

from ..errors import ArgumentError


@dataclass(frozen=True)
class CoefficientSearch:
    """Outcome of a grid search: the winning value and the score of every candidate."""

    best: float
    best_score: float
    scores: tuple[tuple[float, float], ...]


def search_coefficient(candidates: Sequence[float], evaluate: Callable[[float], float]) -> CoefficientSearch:
    """Evaluates every candidate and keeps the first one with the highest score.

    Raises:
        ArgumentError: If `candidates` is empty.
    """

    if not candidates:
        raise ArgumentError("At least one coefficient candidate is required.")

    scores: list[tuple[float, float]] = []
    best, best_score = float(candidates[0]), float("-inf")
    for candidate in candidates:
        score = float(evaluate(float(candidate)))
        scores.append((float(candidate), score))
        log.debug("Coefficient %s: validation score %.4f.", candidate, score)
        if score > best_score:
            best, best_score = float(candidate), score

    log.debug("Selected coefficient %s (%.4f).", best, best_score)

    return CoefficientSearch(best=best, best_score=best_score, scores=tuple(scores))
