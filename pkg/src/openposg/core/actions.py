"""Actions and joint actions.

A single :class:`Action` type covers all domains: a kind string plus an
optional integer target (fire index, node id, or task id).  Joint actions are
plain mappings from agent name to action, containing exactly one entry per
agent currently present in the environment.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

# Canonical ordering of kinds inside a legal-action tuple (noop always first).
_KIND_ORDER = {
    "noop": 0,
    "fight": 1,
    "patch": 1,
    "monitor": 2,
    "move": 3,
    "accept": 1,
    "pick": 2,
    "drop": 3,
}


@dataclass(frozen=True)
class Action:
    kind: str
    target: int | None = None

    def encode(self) -> str:
        """Compact text form used in replay files, e.g. ``fight:2``."""
        if self.target is None:
            return self.kind
        return f"{self.kind}:{self.target}"

    def __str__(self) -> str:
        return self.encode()


NOOP = Action("noop")

JointAction = Mapping[str, Action]


def decode_action(text: str) -> Action:
    kind, sep, target = text.partition(":")
    if not sep:
        return Action(kind)
    return Action(kind, int(target))


def action_sort_key(action: Action) -> tuple[int, int]:
    return (_KIND_ORDER.get(action.kind, 9), action.target if action.target is not None else -1)
