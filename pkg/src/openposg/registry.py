"""Domain registry: environment instances by domain tag."""
from __future__ import annotations

from .core.environment import Environment
from .cybersecurity.env import CybersecurityEnv
from .rideshare.env import RideshareEnv
from .wildfire.env import WildfireEnv

_ENVIRONMENTS = {
    "wildfire": WildfireEnv,
    "cybersecurity": CybersecurityEnv,
    "rideshare": RideshareEnv,
}


def make_env(domain: str) -> Environment:
    try:
        return _ENVIRONMENTS[domain]()
    except KeyError:
        raise KeyError(f"unknown domain {domain!r} (have: {', '.join(_ENVIRONMENTS)})") from None
