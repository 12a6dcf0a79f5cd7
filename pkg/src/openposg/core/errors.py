"""Exception types shared across the suite."""
from __future__ import annotations


class ConfigError(ValueError):
    """A configuration document failed validation.

    ``field`` names the offending entry so callers can point at it.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class IllegalActionError(ValueError):
    """An agent submitted an action outside its legal set."""

    def __init__(self, agent: str, action: object, reason: str = "not in legal action set"):
        self.agent = agent
        self.action = action
        super().__init__(f"agent {agent!r}: illegal action {action}: {reason}")


class TerminalStateError(RuntimeError):
    """step() was called on a terminated state."""


class PairingError(ValueError):
    """Batches being compared do not share config digest or seed pairing."""


class NoInformationError(ValueError):
    """All paired differences were zero; the signed-rank test is undefined."""


class TraceFormatError(ValueError):
    """A replay or results file is malformed.

    ``line_number`` is 1-based and names the first bad line.
    """

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")
