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

"""Quick numeric self checks of the core identities."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from biz.dfch.logging import log

from ..checkpoint import Checkpoint, Delta
from ..compress import dare_drop, decompress, svd_compress
from ..linalg import frobenius, relative_error, svd, tail_norm, truncate
from ..merge import dynamic_merge, extract_twins, task_arithmetic
from ..router import RoutingDecision, group_weights, init_router
from ..seeding import derive_seed, make_rng
from ..toyzoo import Architecture, ToyLayer, adapter_delta, init_model, merge_adapter, with_adapter
from .metrics import normalized_score
from .storage import storage_report

TOLERANCE = 1e-5
ADAPTER_CASES = 20
DARE_MASKS = 10_000
TRUNCATION_CASES = 50
_ARCHITECTURE = Architecture(input_dim=8, hidden_dim=12, classes=3)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one self check."""

    name: str
    passed: bool
    detail: str


def _worst(actual: Checkpoint, expected: dict[str, np.ndarray]) -> float:
    return max(relative_error(actual[name], expected[name]) for name in actual)


def check_adapter_identity(seed: int, cases: int = ADAPTER_CASES) -> CheckResult:
    """Twin merging of folded adapter checkpoints equals base + twin merging of the adapter updates."""

    worst = 0.0
    for case in range(cases):
        rng = make_rng(seed, 100, case)
        base = init_model(_ARCHITECTURE, derive_seed(seed, 100, case))
        task_count = int(rng.integers(2, 4))
        rank = int(rng.integers(1, 4))
        layers = tuple(ToyLayer)
        models = [
            with_adapter(base, layers, 2, derive_seed(seed, 101, case, t), init_scale=0.1)
            for t in range(task_count + 1)
        ]
        shared_model, experts = models[0], models[1:]
        w = rng.dirichlet(np.ones(task_count))

        shared = merge_adapter(shared_model)
        folded = dynamic_merge(shared, extract_twins(shared, [merge_adapter(m) for m in experts], rank), w)

        shared_update = adapter_delta(shared_model)
        expected = {
            name: base.params[name].astype(np.float64) + shared_update[name].astype(np.float64) for name in base.params
        }
        for weight, expert in zip(w, experts, strict=True):
            update = adapter_delta(expert)
            exclusive = Delta({name: update[name] - shared_update[name] for name in update})
            restored = decompress(svd_compress(exclusive, rank))
            for name in expected:
                expected[name] += weight * restored[name].astype(np.float64)

        worst = max(worst, _worst(folded, expected))

    detail = f"max relative error {worst:.2e} over {cases} cases"

    return CheckResult("adapter identity", worst <= TOLERANCE, detail)


def check_exact_recovery(seed: int) -> CheckResult:
    """One-hot weights over full-rank twins reproduce every expert."""

    base = init_model(_ARCHITECTURE, derive_seed(seed, 110))
    experts = [init_model(_ARCHITECTURE, derive_seed(seed, 111, t)).params for t in range(3)]
    shared = task_arithmetic(base.params, experts, (0.3, 0.3, 0.3))
    twins = extract_twins(shared, experts, None)

    worst = 0.0
    for t, expert in enumerate(experts):
        merged = dynamic_merge(shared, twins, RoutingDecision.one_hot(t, len(experts)).weights)
        worst = max(worst, _worst(merged, dict(expert.params)))

    return CheckResult("exact recovery", worst <= TOLERANCE, f"max relative error {worst:.2e}")


def check_dare_unbiased(seed: int, masks: int = DARE_MASKS) -> CheckResult:
    """The mean of drop-and-rescale over many masks of a 100-entry delta stays within 5 standard errors of it."""

    delta = Delta({"w": make_rng(seed, 120).normal(size=(10, 10)).astype(np.float32)})
    worst = 0.0
    for p in (0.3, 0.7, 0.9):
        samples = np.stack([dare_drop(delta, p, (seed, 121, i))["w"].astype(np.float64) for i in range(masks)])
        error = np.abs(samples.mean(axis=0) - delta["w"])
        standard_error = samples.std(axis=0) / np.sqrt(masks)
        worst = max(worst, float(np.max(error / np.maximum(standard_error, 1e-12))))

    detail = f"max error {worst:.2f} standard errors over {masks} masks"

    return CheckResult("drop-and-rescale unbiased", worst <= 5.0, detail)


def check_truncation_residual(seed: int, cases: int = TRUNCATION_CASES) -> CheckResult:
    """The rank-r residual equals the discarded singular value tail."""

    worst = 0.0
    for case in range(cases):
        rng = make_rng(seed, 130, case)
        m = rng.normal(size=(int(rng.integers(2, 10)), int(rng.integers(2, 10)))).astype(np.float32)
        factors = svd(m)
        r = int(rng.integers(1, factors.rank + 1))
        residual = frobenius(m.astype(np.float64) - truncate(factors, r).reconstruct().astype(np.float64))
        expected = tail_norm(factors, r)
        worst = max(worst, abs(residual - expected) / max(expected, frobenius(m)))

    detail = f"max relative error {worst:.2e} over {cases} matrices"

    return CheckResult("truncation residual", worst <= TOLERANCE, detail)


def check_storage(_: int) -> CheckResult:
    """The worked storage example."""

    account = storage_report(T=8, P=1_000_000, P_a=1_000_000, P_f=0, P_r=10_000, k=0.001)

    return CheckResult("storage formula", account.bytes_twin == 2_026_000, f"bytes_twin {account.bytes_twin}")


def check_router_uniform(seed: int) -> CheckResult:
    """A fresh router weighs every task equally."""

    router = init_router(embed_dim=6, task_count=4, hidden_dim=8, seed=seed)
    weights = router.route(make_rng(seed, 140).normal(size=6)).weights
    error = float(np.max(np.abs(weights - 0.25)))

    return CheckResult("router uniform at init", error <= 1e-12, f"max deviation {error:.2e}")


def check_grouping_degenerate(seed: int) -> CheckResult:
    """Group-wise merging with one group per item keeps every weight vector."""

    rng = make_rng(seed, 150)
    decisions = [RoutingDecision.from_logits(rng.normal(size=3)) for _ in range(16)]
    assignment = group_weights(decisions, 16, seed)
    pairs = zip(assignment.groups, decisions, strict=True)
    same = all(np.array_equal(assignment.weights[g], d.weights) for g, d in pairs)

    return CheckResult("grouping degenerate", same, f"{assignment.group_count} groups for {len(decisions)} items")


def check_normalized_score(_: int) -> CheckResult:
    """Worked example and scale invariance of the normalized score."""

    example = normalized_score((0.5, 1.0), (1.0, 1.0))
    scaled = normalized_score((0.25, 0.5), (0.5, 0.5))
    passed = abs(example - 75.0) <= 1e-12 and abs(scaled - example) <= 1e-9

    return CheckResult("normalized score", passed, f"{example:.2f}")


CHECKS: tuple[Callable[[int], CheckResult], ...] = (
    check_adapter_identity,
    check_exact_recovery,
    check_dare_unbiased,
    check_truncation_residual,
    check_storage,
    check_router_uniform,
    check_grouping_degenerate,
    check_normalized_score,
)


def run_selftest(seed: int = 0) -> list[CheckResult]:
    """Runs every check; a check that raises counts as failed."""

    results: list[CheckResult] = []
    for check in CHECKS:
        try:
            result = check(seed)
        except Exception as ex:  # pylint: disable=W0718  # noqa: BLE001
            name = check.__name__.removeprefix("check_").replace("_", " ")
            result = CheckResult(name, False, f"{type(ex).__name__}: {ex}")
        log.debug("Self check '%s': %s (%s).", result.name, result.passed, result.detail)
        results.append(result)

    return results
