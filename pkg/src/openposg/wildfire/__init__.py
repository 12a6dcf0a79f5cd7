from .env import WildfireEnv
from .structures import (
    ACTIVE,
    BURNED_OUT,
    PUT_OUT,
    Firefighter,
    FirefighterSpec,
    FireSpec,
    FireTask,
    FireView,
    WildfireConfig,
    WildfireObservation,
    WildfireState,
    active_fires,
)

__all__ = [
    "WildfireEnv",
    "WildfireConfig",
    "WildfireState",
    "WildfireObservation",
    "Firefighter",
    "FirefighterSpec",
    "FireSpec",
    "FireTask",
    "FireView",
    "active_fires",
    "ACTIVE",
    "PUT_OUT",
    "BURNED_OUT",
]
