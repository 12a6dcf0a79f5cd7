"""Seeded batch rollouts.

A batch is n independent episodes of one policy on one config, episode i
drawing environment randomness from ``derive_stream(base_seed, i)``.  Because
the derived stream depends only on ``(base_seed, i)``, batches of different
policies are paired on common random numbers, which is what makes the
signed-rank comparisons tight.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..baselines import make_policies
from ..config_io import EnvConfig
from ..core.episode import EpisodeTrace, run_episode
from ..core.rng import derive_stream
from ..core.team import team_step_reward
from ..registry import make_env

# Action classes reported per domain; forced noops of absent agents count.
ACTION_KINDS = {
    "wildfire": ("noop", "fight"),
    "cybersecurity": ("noop", "patch", "monitor", "move"),
    "rideshare": ("noop", "accept", "pick", "drop"),
}


@dataclass(frozen=True)
class EpisodeRecord:
    index: int
    stream_id: int
    reward: float | None  # cumulative team reward; None when crashed
    length: int
    crashed: bool
    action_counts: dict[str, int]
    metrics: dict[str, float]
    reward_series: list[float]


@dataclass
class BatchResult:
    domain: str
    config_digest: str
    config_label: str
    policy: str
    n: int
    base_seed: int
    records: list[EpisodeRecord] = field(default_factory=list)

    def paired_rewards(self) -> list[float | None]:
        return [rec.reward for rec in self.records]


def run_batch(config: EnvConfig, policy_name: str, n: int, base_seed: int) -> BatchResult:
    """Run ``n`` seeded episodes of one policy.

    A crashed episode (illegal action or policy exception) is recorded and
    counted but contributes nothing to reward or action statistics.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    env = make_env(config.domain)
    probe_state, _ = env.reset(config.body, base_seed)
    roster = env.roster(probe_state)

    batch = BatchResult(
        domain=config.domain,
        config_digest=config.digest,
        config_label=config.label,
        policy=policy_name,
        n=n,
        base_seed=base_seed,
    )
    for i in range(n):
        stream = derive_stream(base_seed, i)
        policies = make_policies(config.domain, policy_name, roster)
        trace = run_episode(
            env,
            config.body,
            policies,
            seed=base_seed,
            stream=stream,
            config_digest=config.digest,
            config_label=config.label,
        )
        batch.records.append(episode_record(trace, i, config))
    return batch


def episode_record(trace: EpisodeTrace, index: int, config: EnvConfig) -> EpisodeRecord:
    counts = {kind: 0 for kind in ACTION_KINDS[trace.domain]}
    series: list[float] = []
    for rec in trace.steps:
        for agent in trace.agents:
            kind = rec.actions[agent].kind if agent in rec.actions else "noop"
            counts[kind] = counts.get(kind, 0) + 1
        series.append(team_step_reward(trace.domain, rec.rewards, rec.events))
    return EpisodeRecord(
        index=index,
        stream_id=trace.stream_id,
        reward=None if trace.crashed else sum(series),
        length=trace.length,
        crashed=trace.crashed,
        action_counts=counts,
        metrics=_domain_metrics(trace, config),
        reward_series=series,
    )


def _domain_metrics(trace: EpisodeTrace, config: EnvConfig) -> dict[str, float]:
    if trace.domain == "wildfire":
        putouts = burnouts = 0
        for rec in trace.steps:
            for ev in rec.events:
                if ev["kind"] == "putout":
                    putouts += 1
                elif ev["kind"] == "burnout":
                    burnouts += 1
        return {"putouts": float(putouts), "burnouts": float(burnouts), "length": float(trace.length)}
    if trace.domain == "rideshare":
        completions = 0
        waiting_total = 0
        open_count = len(config.body.initial_tasks)
        for rec in trace.steps:
            for ev in rec.events:
                if ev["kind"] == "dropoff":
                    completions += 1
                elif ev["kind"] == "arrival":
                    open_count += 1
                elif ev["kind"] == "accept":
                    open_count -= 1
            waiting_total += open_count
        return {"completions": float(completions), "waiting_total": float(waiting_total)}
    return {}


def roster_for(config: EnvConfig) -> tuple[str, ...]:
    env = make_env(config.domain)
    state, _ = env.reset(config.body, 0)
    return env.roster(state)
