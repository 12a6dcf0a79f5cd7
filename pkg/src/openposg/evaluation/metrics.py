"""Batch aggregation: means, standard errors, and action proportions."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field

from .batch import ACTION_KINDS, BatchResult


@dataclass(frozen=True)
class MeanSE:
    mean: float
    se: float


@dataclass
class MetricSummary:
    domain: str
    policy: str
    n: int
    crash_count: int
    mean_reward: float | None
    se_reward: float
    # One entry per action class, summing to 1 over all agent-steps.
    action_proportions: dict[str, float] = field(default_factory=dict)
    metric_means: dict[str, MeanSE] = field(default_factory=dict)
    # True when fewer than two usable episodes exist, so se is reported as 0.
    degenerate: bool = False


def mean_and_se(values: list[float]) -> tuple[float, float, bool]:
    """Sample mean and standard error (sample stdev / sqrt(n)).

    A single observation has no spread estimate; report se 0 and flag it.
    """
    n = len(values)
    mean = statistics.fmean(values)
    if n < 2:
        return mean, 0.0, True
    return mean, statistics.stdev(values) / math.sqrt(n), False


def aggregate(batch: BatchResult) -> MetricSummary:
    """Summarise a batch: reward mean +- se, per-class action proportions over
    all agent-steps, and domain metric means.  Crashed episodes are counted
    but excluded from every aggregate."""
    if not batch.records:
        raise ValueError("cannot aggregate an empty batch")
    usable = [rec for rec in batch.records if not rec.crashed]
    crash_count = batch.n - len(usable)
    if not usable:
        return MetricSummary(
            domain=batch.domain, policy=batch.policy, n=batch.n, crash_count=crash_count,
            mean_reward=None, se_reward=0.0, degenerate=True,
        )

    mean_r, se_r, degenerate = mean_and_se([rec.reward for rec in usable])

    totals = {kind: 0 for kind in ACTION_KINDS[batch.domain]}
    for rec in usable:
        for kind, count in rec.action_counts.items():
            totals[kind] = totals.get(kind, 0) + count
    grand = sum(totals.values())
    proportions = {kind: (count / grand if grand else 0.0) for kind, count in totals.items()}

    metric_means: dict[str, MeanSE] = {}
    for key in usable[0].metrics:
        mean_m, se_m, _ = mean_and_se([rec.metrics[key] for rec in usable])
        metric_means[key] = MeanSE(mean_m, se_m)

    return MetricSummary(
        domain=batch.domain,
        policy=batch.policy,
        n=batch.n,
        crash_count=crash_count,
        mean_reward=mean_r,
        se_reward=se_r,
        action_proportions=proportions,
        metric_means=metric_means,
        degenerate=degenerate,
    )


def reward_over_time(batch: BatchResult) -> list[tuple[int, float]]:
    """Pointwise mean of the per-step team reward across episodes.

    Episodes have ragged lengths; step t averages over the episodes that
    survived to t.
    """
    usable = [rec.reward_series for rec in batch.records if not rec.crashed]
    if not usable:
        raise ValueError("no usable episodes carry reward series")
    horizon = max(len(series) for series in usable)
    out = []
    for t in range(horizon):
        alive = [series[t] for series in usable if len(series) > t]
        out.append((t, statistics.fmean(alive)))
    return out
