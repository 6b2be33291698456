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

"""router package."""

from .embedding import embed, embed_suite
from .grouping import DEFAULT_GROUP_COUNT, KMEANS_ITERATIONS, GroupAssignment, group_weights, kmeans
from .router import BN_EPSILON, LEAKY_SLOPE, Router, init_router, leaky_relu, route
from .router_config import RouterConfig
from .router_trainer import BN_MOMENTUM, MAX_ITEMS_PER_TASK, RouterTrainer, train_router
from .routing_decision import RoutingDecision, softmax

__all__ = [
    "BN_EPSILON",
    "BN_MOMENTUM",
    "DEFAULT_GROUP_COUNT",
    "KMEANS_ITERATIONS",
    "LEAKY_SLOPE",
    "MAX_ITEMS_PER_TASK",
    "GroupAssignment",
    "Router",
    "RouterConfig",
    "RouterTrainer",
    "RoutingDecision",
    "embed",
    "embed_suite",
    "group_weights",
    "init_router",
    "kmeans",
    "leaky_relu",
    "route",
    "softmax",
    "train_router",
]
