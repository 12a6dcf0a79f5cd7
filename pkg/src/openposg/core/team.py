"""Team-level reward, the primary benchmark metric.

Wildfire and cybersecurity pay every agent the same team scalar, so the team
step reward is simply that shared value.  Rideshare rewards are per-driver
(own fares plus a global waiting penalty broadcast to everyone); the team
step reward counts each fare once and the waiting penalty once.
"""
from __future__ import annotations

from .environment import Event


def team_step_reward(domain: str, rewards: dict[str, float], events: list[Event]) -> float:
    if not rewards:
        return 0.0
    if domain == "rideshare":
        fares_by_driver: dict[str, float] = {}
        for ev in events:
            if ev["kind"] == "dropoff":
                fares_by_driver[ev["driver"]] = fares_by_driver.get(ev["driver"], 0.0) + ev["fare"]
        total_fares = sum(fares_by_driver.values())
        # Any driver's reward minus its own fares is the shared penalty term.
        probe = next(iter(rewards))
        penalty = rewards[probe] - fares_by_driver.get(probe, 0.0)
        return total_fares + penalty
    return next(iter(rewards.values()))
