"""Single-episode rollout and its trace record.

A trace is the persistence unit for replay and re-scoring: seed, config
digest, and one record per step holding the joint action, the per-agent
rewards, and the event log.  Identical ``(config, policies, seed)`` inputs
always produce identical traces.
"""
from __future__ import annotations

import traceback
from dataclasses import dataclass, field
from typing import Any, Protocol

from .actions import Action
from .environment import Environment, Event
from .errors import IllegalActionError
from .rng import RngStream, derive_stream


class Policy(Protocol):
    name: str

    def query(self, observation: Any, rng: RngStream) -> Action: ...


@dataclass(frozen=True)
class StepRecord:
    t: int
    actions: dict[str, Action]
    rewards: dict[str, float]
    events: list[Event]
    terminated: bool


@dataclass
class EpisodeTrace:
    domain: str
    config_digest: str
    seed: int
    stream_id: int
    agents: tuple[str, ...]
    steps: list[StepRecord] = field(default_factory=list)
    cumulative: dict[str, float] = field(default_factory=dict)
    length: int = 0
    crashed: bool = False
    crash_info: str | None = None
    config_body: dict[str, Any] | None = None
    config_label: str = ""

    @property
    def team_cumulative(self) -> float:
        from .team import team_step_reward

        return sum(team_step_reward(self.domain, rec.rewards, rec.events) for rec in self.steps)


def run_episode(
    env: Environment,
    config: Any,
    policies: dict[str, Policy],
    seed: int,
    max_steps: int | None = None,
    *,
    stream: RngStream | None = None,
    config_digest: str = "",
    config_body: dict[str, Any] | None = None,
    config_label: str = "",
) -> EpisodeTrace:
    """Roll out one episode: reset, then query policies and step until the
    environment terminates or ``max_steps`` is reached.

    Environment randomness and each policy's randomness come from independent
    substreams of ``stream`` (derived from ``seed`` when not given), so the
    environment's random sequence does not depend on which policies run.  A
    policy that raises or emits an illegal action aborts the episode; the
    steps taken so far are kept and the trace is flagged crashed.
    """
    if stream is None:
        stream = derive_stream(seed, 0)
    if max_steps is None:
        max_steps = getattr(config, "max_steps")
    if max_steps < 0:
        raise ValueError(f"max_steps must be >= 0, got {max_steps}")

    state, observations = env.reset(config, seed)
    roster = env.roster(state)
    missing = [a for a in roster if a not in policies]
    if missing:
        raise ValueError(f"no policy supplied for agents {missing}")

    env_rng = stream.substream("env")
    policy_rngs = {agent: stream.substream("policy", agent) for agent in roster}

    trace = EpisodeTrace(
        domain=env.domain,
        config_digest=config_digest,
        seed=seed,
        stream_id=stream.stream_id,
        agents=roster,
        config_body=config_body,
        config_label=config_label,
    )
    cumulative = {agent: 0.0 for agent in roster}

    for t in range(max_steps):
        if env.is_terminal(state):
            break
        actions: dict[str, Action] = {}
        try:
            for agent in env.present_agents(state):
                actions[agent] = policies[agent].query(observations[agent], policy_rngs[agent])
            result = env.step(state, actions, env_rng)
        except IllegalActionError as exc:
            trace.crashed = True
            trace.crash_info = f"step {t}: {exc}"
            break
        except Exception as exc:  # policy raised: record the crash, keep the prefix
            trace.crashed = True
            trace.crash_info = f"step {t}: policy failure: {exc}\n{traceback.format_exc(limit=3)}"
            break
        trace.steps.append(StepRecord(t, actions, result.rewards, result.events, result.terminated))
        for agent, r in result.rewards.items():
            cumulative[agent] += r
        state, observations = result.next_state, result.observations
        if result.terminated:
            break

    trace.cumulative = cumulative
    trace.length = len(trace.steps)
    return trace
