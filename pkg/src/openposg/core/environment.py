"""Environment contract shared by all domains.

An environment object is stateless: every method is a pure function of the
state, actions, and RNG stream it is given, which makes episodes trivially
parallelisable as long as each one owns its state and stream.  ``step``
delegates to the domain transition, reward, observation, and termination
operations, in that order.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, ClassVar

from .actions import Action, JointAction
from .errors import IllegalActionError, TerminalStateError
from .rng import RngStream

# Events are tagged records: a "kind" key plus kind-specific fields.  Every
# reward-bearing state change emits one, so rewards can be re-derived from the
# event log alone.
Event = dict[str, Any]


@dataclass(frozen=True)
class StepResult:
    next_state: Any
    rewards: dict[str, float]
    observations: dict[str, Any]
    terminated: bool
    events: list[Event]


class Environment(ABC):
    """Reset/step contract for one domain."""

    domain: ClassVar[str]

    @abstractmethod
    def reset(self, config: Any, seed: int) -> tuple[Any, dict[str, Any]]:
        """Build the initial state and initial observations, deterministically."""

    @abstractmethod
    def roster(self, state: Any) -> tuple[str, ...]:
        """All controllable agent names, in fixed order (identity never changes)."""

    @abstractmethod
    def present_agents(self, state: Any) -> tuple[str, ...]:
        """Agents currently present; only these appear in a joint action."""

    @abstractmethod
    def legal_actions(self, state: Any, agent: str) -> tuple[Action, ...]:
        """The agent's legal actions in canonical order (noop first)."""

    @abstractmethod
    def transition(self, state: Any, actions: JointAction, rng: RngStream) -> tuple[Any, list[Event]]:
        """Apply the domain dynamics; returns the next state and its event log."""

    @abstractmethod
    def reward(self, next_state: Any, events: list[Event]) -> dict[str, float]:
        """Per-agent rewards for the transition, one entry per roster agent."""

    @abstractmethod
    def observe(self, state: Any, actions: JointAction) -> dict[str, Any]:
        """Per-agent observations of ``state``; absent agents get an empty
        observation flagged absent."""

    @abstractmethod
    def is_terminal(self, state: Any) -> bool:
        """True when no further step is legal."""

    def step(self, state: Any, actions: JointAction, rng: RngStream) -> StepResult:
        if self.is_terminal(state):
            raise TerminalStateError("step() called on a terminated state")
        self.validate_actions(state, actions)
        next_state, events = self.transition(state, actions, rng)
        rewards = self.reward(next_state, events)
        observations = self.observe(next_state, actions)
        terminated = self.is_terminal(next_state)
        return StepResult(next_state, rewards, observations, terminated, events)

    def validate_actions(self, state: Any, actions: JointAction) -> None:
        """Require exactly one legal action per present agent, none extra."""
        present = self.present_agents(state)
        for agent in present:
            if agent not in actions:
                raise IllegalActionError(agent, None, "present agent has no action")
            if actions[agent] not in self.legal_actions(state, agent):
                raise IllegalActionError(agent, actions[agent])
        extras = set(actions) - set(present)
        if extras:
            agent = sorted(extras)[0]
            raise IllegalActionError(agent, actions[agent], "agent is not present")
