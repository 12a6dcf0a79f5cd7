from .env import ATTACKER_EXPLOIT_PROB, CybersecurityEnv, attacker_actions, network_value
from .structures import (
    ATTACKER,
    DEFENDER,
    NODE_VALUES,
    CyberAgent,
    CyberAgentSpec,
    CyberConfig,
    CyberObservation,
    CyberState,
    MonitorBelief,
    PowerGlimpse,
    SubnetNode,
)

__all__ = [
    "CybersecurityEnv",
    "CyberConfig",
    "CyberState",
    "CyberObservation",
    "CyberAgent",
    "CyberAgentSpec",
    "SubnetNode",
    "MonitorBelief",
    "PowerGlimpse",
    "NODE_VALUES",
    "DEFENDER",
    "ATTACKER",
    "ATTACKER_EXPLOIT_PROB",
    "attacker_actions",
    "network_value",
]
