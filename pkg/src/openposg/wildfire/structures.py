"""Wildfire domain: config, state, and observation structures.

Firefighters stand at fixed grid cells and spend suppressant charges fighting
adjacent fires.  Fires intensify toward burnout, spread to orthogonal
neighbours (task openness), and agents that run out of suppressant leave the
grid until refilled (agent openness).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..core.actions import Action
from ..core.errors import ConfigError

ACTIVE = "active"
PUT_OUT = "put_out"
BURNED_OUT = "burned_out"

Position = tuple[int, int]  # (y, x)


@dataclass(frozen=True)
class FirefighterSpec:
    position: Position
    power: float = 1.0
    capacity: int = 2


@dataclass(frozen=True)
class FireSpec:
    position: Position
    agents_required: int = 1
    intensity: int = 1


@dataclass(frozen=True)
class WildfireConfig:
    grid_height: int
    grid_width: int
    agents: tuple[FirefighterSpec, ...]
    fires: tuple[FireSpec, ...]
    p_spread: float = 0.05
    p_intensify: float = 0.3
    burnout_level: int = 5
    refill_steps: int = 2
    # (agents_required value, weight) pairs for fires created by spread.
    spawn_agents_required: tuple[tuple[int, float], ...] = ((1, 0.5), (2, 0.35), (3, 0.15))
    max_steps: int = 100

    def validate(self) -> None:
        if self.grid_height < 1:
            raise ConfigError("grid_height", "must be >= 1")
        if self.grid_width < 1:
            raise ConfigError("grid_width", "must be >= 1")
        if not 0.0 <= self.p_spread <= 1.0:
            raise ConfigError("p_spread", f"must be in [0, 1], got {self.p_spread}")
        if not 0.0 <= self.p_intensify <= 1.0:
            raise ConfigError("p_intensify", f"must be in [0, 1], got {self.p_intensify}")
        if self.burnout_level < 2:
            raise ConfigError("burnout_level", "must be >= 2")
        if self.refill_steps < 1:
            raise ConfigError("refill_steps", "must be >= 1")
        if self.max_steps < 0:
            raise ConfigError("max_steps", "must be >= 0")
        if not self.agents:
            raise ConfigError("agents", "at least one firefighter is required")
        for i, spec in enumerate(self.agents):
            if not self._in_bounds(spec.position):
                raise ConfigError(f"agents[{i}].position", f"{spec.position} out of bounds")
            if spec.power <= 0:
                raise ConfigError(f"agents[{i}].power", "must be > 0")
            if spec.capacity < 1:
                raise ConfigError(f"agents[{i}].capacity", "must be >= 1")
        seen: set[Position] = set()
        for i, spec in enumerate(self.fires):
            if not self._in_bounds(spec.position):
                raise ConfigError(f"fires[{i}].position", f"{spec.position} out of bounds")
            if spec.position in seen:
                raise ConfigError(f"fires[{i}].position", f"duplicate fire at {spec.position}")
            seen.add(spec.position)
            if spec.agents_required < 1:
                raise ConfigError(f"fires[{i}].agents_required", "must be >= 1")
            if not 0 < spec.intensity < self.burnout_level:
                raise ConfigError(
                    f"fires[{i}].intensity",
                    f"must be in (0, burnout_level={self.burnout_level}), got {spec.intensity}",
                )
        if not self.spawn_agents_required:
            raise ConfigError("spawn_agents_required", "distribution must not be empty")
        for j, (value, weight) in enumerate(self.spawn_agents_required):
            if value < 1:
                raise ConfigError(f"spawn_agents_required[{j}]", "value must be >= 1")
            if weight <= 0:
                raise ConfigError(f"spawn_agents_required[{j}]", "weight must be > 0")

    def _in_bounds(self, pos: Position) -> bool:
        y, x = pos
        return 0 <= y < self.grid_height and 0 <= x < self.grid_width


@dataclass(frozen=True)
class Firefighter:
    agent: str
    position: Position
    power: float
    suppressant: int
    capacity: int
    present: bool = True
    refill_timer: int = 0


@dataclass(frozen=True)
class FireTask:
    id: int
    position: Position
    agents_required: int
    intensity: int
    status: str = ACTIVE


@dataclass(frozen=True)
class WildfireState:
    t: int
    seed: int
    config: WildfireConfig
    agents: tuple[Firefighter, ...]
    fires: tuple[FireTask, ...]
    next_fire_id: int


def active_fires(state: WildfireState) -> list[FireTask]:
    """Active fires in row-major order; index i here is the fight_i target."""
    return sorted((f for f in state.fires if f.status == ACTIVE), key=lambda f: f.position)


@dataclass(frozen=True)
class AgentGlimpse:
    agent: str
    position: Position
    present: bool


@dataclass(frozen=True)
class FireView:
    index: int
    position: Position
    agents_required: int
    intensity: int


@dataclass(frozen=True)
class WildfireObservation:
    agent: str
    absent: bool
    me: Firefighter | None
    others: tuple[AgentGlimpse, ...] = ()
    fires: tuple[FireView, ...] = ()
    legal_actions: tuple[Action, ...] = ()
