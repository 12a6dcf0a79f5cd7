"""Cybersecurity domain: config, state, observation, and belief structures.

Defenders patrol a directed graph of subnetwork nodes whose five-level state
runs from 0 (fully patched, best) to 4 (fully exploited, worst).  Scripted
attackers push node states up, defenders patch them down, and both sides
stochastically lose and regain their connection (agent openness).  Node
states are hidden unless a defender spends its turn monitoring.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core.actions import Action
from ..core.errors import ConfigError

DEFENDER = "defender"
ATTACKER = "attacker"

# Per-state node values, indexed by state_index 0..4.
NODE_VALUES = (4.0, 0.0, -2.0, -4.0, -8.0)


@dataclass(frozen=True)
class CyberAgentSpec:
    location: int
    power: float = 1.0


@dataclass(frozen=True)
class CyberConfig:
    nodes: int
    edges: tuple[tuple[int, int], ...]
    defenders: tuple[CyberAgentSpec, ...]
    attackers: tuple[CyberAgentSpec, ...]
    initial_states: tuple[int, ...] = ()
    p_leave: float = 0.1
    p_return: float = 0.5
    power_unit: float = 1.0
    max_steps: int = 100

    def validate(self) -> None:
        if self.nodes < 1:
            raise ConfigError("nodes", "must be >= 1")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.nodes and 0 <= v < self.nodes):
                raise ConfigError(f"edges[{i}]", f"({u}, {v}) references a missing node")
            if u == v:
                raise ConfigError(f"edges[{i}]", "self-loops are not allowed")
        if len(set(self.edges)) != len(self.edges):
            raise ConfigError("edges", "duplicate edge")
        states = self.initial_states or (2,) * self.nodes
        if len(states) != self.nodes:
            raise ConfigError("initial_states", f"expected {self.nodes} entries, got {len(states)}")
        for i, s in enumerate(states):
            if s not in (0, 1, 2, 3, 4):
                raise ConfigError(f"initial_states[{i}]", f"must be in 0..4, got {s}")
        if not self.defenders:
            raise ConfigError("defenders", "at least one defender is required")
        for side, specs in (("defenders", self.defenders), ("attackers", self.attackers)):
            for i, spec in enumerate(specs):
                if not 0 <= spec.location < self.nodes:
                    raise ConfigError(f"{side}[{i}].location", f"node {spec.location} does not exist")
                if spec.power <= 0:
                    raise ConfigError(f"{side}[{i}].power", "must be > 0")
        if not 0.0 <= self.p_leave <= 1.0:
            raise ConfigError("p_leave", f"must be in [0, 1], got {self.p_leave}")
        if not 0.0 <= self.p_return <= 1.0:
            raise ConfigError("p_return", f"must be in [0, 1], got {self.p_return}")
        if self.power_unit <= 0:
            raise ConfigError("power_unit", "must be > 0")
        if self.max_steps < 0:
            raise ConfigError("max_steps", "must be >= 0")

    def resolved_initial_states(self) -> tuple[int, ...]:
        return self.initial_states or (2,) * self.nodes

    def out_neighbors(self, node: int) -> tuple[int, ...]:
        return tuple(v for u, v in self.edges if u == node)

    def out_degree(self, node: int) -> int:
        return sum(1 for u, _ in self.edges if u == node)


@dataclass(frozen=True)
class SubnetNode:
    id: int
    state_index: int
    outgoing: int


@dataclass(frozen=True)
class CyberAgent:
    agent: str
    side: str
    location: int
    power: float
    present: bool = True


@dataclass(frozen=True)
class CyberState:
    t: int
    seed: int
    config: CyberConfig
    nodes: tuple[SubnetNode, ...]
    agents: tuple[CyberAgent, ...]  # defenders first, then attackers, roster order


@dataclass(frozen=True)
class PowerGlimpse:
    agent: str
    side: str
    power: float


@dataclass(frozen=True)
class CyberObservation:
    agent: str
    absent: bool
    me: CyberAgent | None
    others: tuple[PowerGlimpse, ...] = ()
    # Revealed only when this agent's action this step was monitor.
    node_states: tuple[int, ...] | None = None
    num_nodes: int = 0
    legal_actions: tuple[Action, ...] = ()


@dataclass
class MonitorBelief:
    """A defender's last monitor snapshot: unknown until the first monitor."""

    states: tuple[int, ...] | None = None
    observed_at: int | None = None

    def update(self, states: tuple[int, ...], step: int) -> None:
        self.states = states
        self.observed_at = step

    def staleness(self, step: int) -> int | None:
        if self.observed_at is None:
            return None
        return step - self.observed_at
