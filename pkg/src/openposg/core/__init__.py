from .actions import NOOP, Action, JointAction, decode_action
from .environment import Environment, Event, StepResult
from .episode import EpisodeTrace, Policy, StepRecord, run_episode
from .errors import (
    ConfigError,
    IllegalActionError,
    NoInformationError,
    PairingError,
    TerminalStateError,
    TraceFormatError,
)
from .rng import RngStream, derive_stream, mix64
from .team import team_step_reward

__all__ = [
    "Action",
    "NOOP",
    "JointAction",
    "decode_action",
    "Environment",
    "Event",
    "StepResult",
    "EpisodeTrace",
    "StepRecord",
    "Policy",
    "run_episode",
    "ConfigError",
    "IllegalActionError",
    "NoInformationError",
    "PairingError",
    "TerminalStateError",
    "TraceFormatError",
    "RngStream",
    "derive_stream",
    "mix64",
    "team_step_reward",
]
