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

"""Group-wise merging: argmax bins, then k-means on the logits within each bin."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError
from ..seeding import make_rng
from .routing_decision import RoutingDecision

KMEANS_ITERATIONS = 10
DEFAULT_GROUP_COUNT = 20


@dataclass(frozen=True)
class GroupAssignment:
    """Group index per item and the merged weights of every group."""

    groups: np.ndarray
    weights: tuple[np.ndarray, ...]

    @property
    def group_count(self) -> int:
        """Number of groups, i.e. merged models."""

        return len(self.weights)


def _squared_distances(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    diff = points[:, np.newaxis, :] - centers[np.newaxis, :, :]
    return np.sum(diff * diff, axis=2)


def _farthest_point_init(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    chosen = [int(rng.integers(points.shape[0]))]
    nearest = _squared_distances(points, points[chosen])[:, 0]
    while len(chosen) < k:
        candidate = int(np.argmax(nearest))
        if nearest[candidate] == 0.0:
            break
        chosen.append(candidate)
        nearest = np.minimum(nearest, _squared_distances(points, points[[candidate]])[:, 0])

    return points[chosen].copy()


def kmeans(
    points: np.ndarray,
    k: int,
    seed: int,
    iterations: int = KMEANS_ITERATIONS,
) -> tuple[np.ndarray, np.ndarray]:
    """Lloyd's algorithm with seeded farthest-point initialisation.

    Initialisation stops early once every point coincides with a center.
    Empty clusters are dropped, so fewer than `k` clusters may be returned.

    Returns:
        tuple[np.ndarray, np.ndarray]: Label per point and the centers.
    """

    x = np.asarray(points, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] == 0:
        raise ArgumentError(f"k-means needs a non-empty 2-D point set, got shape {x.shape}.")
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}.")

    centers = _farthest_point_init(x, min(k, x.shape[0]), make_rng(seed, 6))
    labels = np.argmin(_squared_distances(x, centers), axis=1)
    for _ in range(iterations):
        used = np.unique(labels)
        centers = np.stack([x[labels == c].mean(axis=0) for c in used])
        labels = np.argmin(_squared_distances(x, centers), axis=1)

    used, labels = np.unique(labels, return_inverse=True)

    return labels.reshape(-1), centers[used]


def _group_weight(members: Sequence[RoutingDecision]) -> np.ndarray:
    first = members[0].weights
    if all(np.array_equal(first, m.weights) for m in members[1:]):
        return first

    mean = np.mean(np.stack([m.weights for m in members]), axis=0)
    return mean / np.sum(mean)


def group_weights(
    decisions: Sequence[RoutingDecision],
    group_count: int = DEFAULT_GROUP_COUNT,
    seed: int = 0,
) -> GroupAssignment:
    """Groups a batch of decisions and averages the weights per group.

    Items are binned by the argmax of their logits; each bin is clustered
    into at most `group_count` groups by k-means on the logits. A group's
    weights are the renormalised mean of its members' weights. With
    `group_count` at least the batch size every item forms its own group.

    Raises:
        ArgumentError: If the batch is empty or `group_count` < 1.
    """

    if not decisions:
        raise ArgumentError("Cannot group an empty batch.")
    if group_count < 1:
        raise ArgumentError(f"group_count must be positive, got {group_count}.")

    n = len(decisions)
    if group_count >= n:
        return GroupAssignment(groups=np.arange(n), weights=tuple(d.weights for d in decisions))

    logits = np.stack([d.logits for d in decisions])
    bins = np.array([d.task for d in decisions])
    groups = np.empty(n, dtype=np.int64)
    weights: list[np.ndarray] = []
    for bin_ in np.unique(bins):
        members = np.flatnonzero(bins == bin_)
        labels, _ = kmeans(logits[members], group_count, seed)
        for label in range(int(labels.max()) + 1):
            selected = members[labels == label]
            groups[selected] = len(weights)
            weights.append(_group_weight([decisions[i] for i in selected]))

    return GroupAssignment(groups=groups, weights=tuple(weights))
