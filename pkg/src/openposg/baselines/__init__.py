"""Policy registry: baselines addressable by name, per domain."""
from __future__ import annotations

from ..core.episode import Policy
from .policies import (
    BELIEF_STALENESS_LIMIT,
    ExtremalFirePolicy,
    GreedyDispatchPolicy,
    NoopPolicy,
    RandomPolicy,
    TargetedPatchPolicy,
)

_FACTORIES = {
    "wildfire": {
        "noop": NoopPolicy,
        "random": RandomPolicy,
        "smallest": lambda: ExtremalFirePolicy("smallest"),
        "largest": lambda: ExtremalFirePolicy("largest"),
    },
    "cybersecurity": {
        "noop": NoopPolicy,
        "random": RandomPolicy,
        "patched": lambda: TargetedPatchPolicy("least_exploited"),
        "exploited": lambda: TargetedPatchPolicy("most_exploited"),
    },
    "rideshare": {
        "noop": NoopPolicy,
        "random": RandomPolicy,
        "greedy": GreedyDispatchPolicy,
    },
}


def policy_names(domain: str) -> tuple[str, ...]:
    try:
        return tuple(_FACTORIES[domain])
    except KeyError:
        raise KeyError(f"unknown domain {domain!r}") from None


def make_policy(domain: str, name: str) -> Policy:
    """Build a fresh policy instance (private state is per-episode)."""
    try:
        factories = _FACTORIES[domain]
    except KeyError:
        raise KeyError(f"unknown domain {domain!r}") from None
    try:
        return factories[name]()
    except KeyError:
        raise KeyError(f"unknown policy {name!r} for domain {domain!r} (have: {', '.join(factories)})") from None


def make_policies(domain: str, name: str, agents: tuple[str, ...]) -> dict[str, Policy]:
    """One fresh instance of the named policy per agent."""
    return {agent: make_policy(domain, name) for agent in agents}


__all__ = [
    "NoopPolicy",
    "RandomPolicy",
    "ExtremalFirePolicy",
    "TargetedPatchPolicy",
    "GreedyDispatchPolicy",
    "BELIEF_STALENESS_LIMIT",
    "policy_names",
    "make_policy",
    "make_policies",
]
