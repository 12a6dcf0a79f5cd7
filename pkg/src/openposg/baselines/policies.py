"""Reference policies.

Each policy maps an observation (plus its own per-episode memory) to a legal
action.  Instances are created fresh for every agent in every episode, so any
private state is episode-local.  All policies are deterministic given the
observation and the RNG stream position.
"""
from __future__ import annotations

from ..core.actions import NOOP, Action
from ..core.rng import RngStream
from ..cybersecurity.structures import CyberObservation, MonitorBelief
from ..rideshare.structures import UNACCEPTED, RideshareObservation, manhattan
from ..wildfire.structures import WildfireObservation


class NoopPolicy:
    """Remains idle: always chooses noop, in every domain."""

    name = "noop"

    def query(self, observation, rng: RngStream) -> Action:
        return NOOP


class RandomPolicy:
    """Uniformly samples a valid action from the observation's legal set."""

    name = "random"

    def query(self, observation, rng: RngStream) -> Action:
        legal = observation.legal_actions
        return legal[rng.randrange(len(legal))]


class ExtremalFirePolicy:
    """Fights the smallest or largest adjacent fire, by intensity.

    Ties break toward the lowest fire index; with no legal fight action the
    policy idles.
    """

    def __init__(self, mode: str):
        if mode not in ("smallest", "largest"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.name = mode

    def query(self, observation: WildfireObservation, rng: RngStream) -> Action:
        fights = [a for a in observation.legal_actions if a.kind == "fight"]
        if not fights:
            return NOOP
        by_index = {view.index: view.intensity for view in observation.fires}
        sign = 1 if self.mode == "smallest" else -1
        best = min(fights, key=lambda a: (sign * by_index[a.target], a.target))
        return best


# A belief older than this many steps triggers a fresh monitor sweep.
BELIEF_STALENESS_LIMIT = 8


class TargetedPatchPolicy:
    """Patches the least- or most-exploited node, as believed.

    Node states are hidden behind the monitor action, so the policy keeps a
    belief from its last monitor sweep and refreshes it whenever the belief is
    empty or stale.  Otherwise it heads for the believed extremal node (ties
    to the lowest node id) and patches once it is standing on it.
    """

    def __init__(self, mode: str):
        if mode not in ("least_exploited", "most_exploited"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.name = "patched" if mode == "least_exploited" else "exploited"
        self.belief = MonitorBelief()
        self._step = 0

    def query(self, observation: CyberObservation, rng: RngStream) -> Action:
        step = self._step
        self._step += 1
        if observation.absent:
            return NOOP
        if observation.node_states is not None:
            # Monitor results arrive in the observation of the step they were
            # requested, so the snapshot is timestamped one step back.
            self.belief.update(observation.node_states, step - 1)
        stale = self.belief.staleness(step)
        if self.belief.states is None or stale >= BELIEF_STALENESS_LIMIT:
            return Action("monitor")
        sign = 1 if self.mode == "least_exploited" else -1
        target = min(range(len(self.belief.states)), key=lambda i: (sign * self.belief.states[i], i))
        if observation.me.location == target:
            return Action("patch")
        return Action("move", target)


class GreedyDispatchPolicy:
    """Completes work before taking more: drop if legal, else pick, else
    accept the nearest unaccepted passenger (Manhattan, ties to the lowest
    task id), else idle."""

    name = "greedy"

    def query(self, observation: RideshareObservation, rng: RngStream) -> Action:
        drops = [a for a in observation.legal_actions if a.kind == "drop"]
        if drops:
            return min(drops, key=lambda a: a.target)
        picks = [a for a in observation.legal_actions if a.kind == "pick"]
        if picks:
            return min(picks, key=lambda a: a.target)
        accepts = [a for a in observation.legal_actions if a.kind == "accept"]
        if accepts:
            position = {task.id: task.position for task in observation.tasks if task.lifecycle == UNACCEPTED}
            me = observation.me.position
            return min(accepts, key=lambda a: (manhattan(me, position[a.target]), a.target))
        return NOOP
