"""Rideshare domain: config, state, and observation structures.

Drivers accept passenger tasks anywhere on the grid, drive toward their
commitments one Manhattan step per tick, and earn the trip fare (frozen at
spawn as the Manhattan distance from entry position to destination) when the
passenger is dropped off.  Unaccepted passengers cost the whole fleet a
waiting penalty every step.  Task openness comes from stochastic arrivals.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core.actions import Action
from ..core.errors import ConfigError

UNACCEPTED = "unaccepted"
ACCEPTED = "accepted"
PICKED_UP = "picked_up"
DROPPED_OFF = "dropped_off"

LIFECYCLE_ORDER = (UNACCEPTED, ACCEPTED, PICKED_UP, DROPPED_OFF)

Position = tuple[int, int]  # (y, x)


def manhattan(a: Position, b: Position) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


@dataclass(frozen=True)
class DriverSpec:
    position: Position
    accept_cap: int = 3
    ride_cap: int = 2


@dataclass(frozen=True)
class TaskSpec:
    position: Position
    destination: Position


@dataclass(frozen=True)
class RideshareConfig:
    grid_height: int
    grid_width: int
    drivers: tuple[DriverSpec, ...]
    initial_tasks: tuple[TaskSpec, ...] = ()
    p_arrival: float = 0.2
    max_open_tasks: int = 8
    waiting_penalty: float = -0.1
    # Off by default: also penalize accepted-but-not-picked-up passengers.
    penalize_accepted: bool = False
    max_steps: int = 200

    def validate(self) -> None:
        if self.grid_height < 1:
            raise ConfigError("grid_height", "must be >= 1")
        if self.grid_width < 1:
            raise ConfigError("grid_width", "must be >= 1")
        if self.grid_height * self.grid_width < 2:
            raise ConfigError("grid_width", "grid needs at least two cells for distinct destinations")
        if not self.drivers:
            raise ConfigError("drivers", "at least one driver is required")
        for i, spec in enumerate(self.drivers):
            if not self._in_bounds(spec.position):
                raise ConfigError(f"drivers[{i}].position", f"{spec.position} out of bounds")
            if spec.accept_cap < 1:
                raise ConfigError(f"drivers[{i}].accept_cap", "must be >= 1")
            if spec.ride_cap < 1:
                raise ConfigError(f"drivers[{i}].ride_cap", "must be >= 1")
        for i, spec in enumerate(self.initial_tasks):
            if not self._in_bounds(spec.position):
                raise ConfigError(f"initial_tasks[{i}].position", f"{spec.position} out of bounds")
            if not self._in_bounds(spec.destination):
                raise ConfigError(f"initial_tasks[{i}].destination", f"{spec.destination} out of bounds")
            if spec.position == spec.destination:
                raise ConfigError(f"initial_tasks[{i}].destination", "must differ from position")
        if not 0.0 <= self.p_arrival <= 1.0:
            raise ConfigError("p_arrival", f"must be in [0, 1], got {self.p_arrival}")
        if self.max_open_tasks < 0:
            raise ConfigError("max_open_tasks", "must be >= 0")
        if self.waiting_penalty > 0:
            raise ConfigError("waiting_penalty", "must be <= 0")
        if self.max_steps < 0:
            raise ConfigError("max_steps", "must be >= 0")

    def _in_bounds(self, pos: Position) -> bool:
        y, x = pos
        return 0 <= y < self.grid_height and 0 <= x < self.grid_width


@dataclass(frozen=True)
class Driver:
    agent: str
    position: Position
    accepted_count: int
    riding_count: int
    accept_cap: int
    ride_cap: int


@dataclass(frozen=True)
class PassengerTask:
    id: int
    position: Position
    destination: Position
    fare: float
    lifecycle: str = UNACCEPTED
    assigned_driver: str | None = None
    t_entered: int = 0
    t_accepted: int | None = None
    t_picked: int | None = None


@dataclass(frozen=True)
class RideshareState:
    t: int
    seed: int
    config: RideshareConfig
    drivers: tuple[Driver, ...]
    tasks: tuple[PassengerTask, ...]
    next_task_id: int


@dataclass(frozen=True)
class DriverGlimpse:
    agent: str
    position: Position
    accepted_count: int
    riding_count: int


@dataclass(frozen=True)
class RideshareObservation:
    agent: str
    me: Driver
    others: tuple[DriverGlimpse, ...] = ()
    # Full records of unaccepted (global) tasks plus this driver's own tasks.
    tasks: tuple[PassengerTask, ...] = ()
    legal_actions: tuple[Action, ...] = ()
