from .env import RideshareEnv
from .structures import (
    ACCEPTED,
    DROPPED_OFF,
    PICKED_UP,
    UNACCEPTED,
    Driver,
    DriverGlimpse,
    DriverSpec,
    PassengerTask,
    RideshareConfig,
    RideshareObservation,
    RideshareState,
    TaskSpec,
    manhattan,
)

__all__ = [
    "RideshareEnv",
    "RideshareConfig",
    "RideshareState",
    "RideshareObservation",
    "Driver",
    "DriverGlimpse",
    "DriverSpec",
    "PassengerTask",
    "TaskSpec",
    "manhattan",
    "UNACCEPTED",
    "ACCEPTED",
    "PICKED_UP",
    "DROPPED_OFF",
]
