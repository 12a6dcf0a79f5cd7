"""Config ingestion, validation, and canonical digests.

Benchmark configs are YAML (or JSON) documents with a ``domain`` tag and a
domain-specific body.  After validation the config is normalised to a fully
populated dict with sorted keys; its SHA-256 over canonical JSON is the
config digest, so reformatting a file without semantic change keeps the
digest stable.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from .core.errors import ConfigError
from .cybersecurity.structures import CyberAgentSpec, CyberConfig
from .rideshare.structures import DriverSpec, RideshareConfig, TaskSpec
from .wildfire.structures import FirefighterSpec, FireSpec, WildfireConfig

SCHEMA_VERSION = 1

DOMAINS = ("wildfire", "cybersecurity", "rideshare")

DomainConfig = WildfireConfig | CyberConfig | RideshareConfig


@dataclass(frozen=True)
class EnvConfig:
    domain: str
    body: DomainConfig
    digest: str
    label: str = ""
    schema: int = SCHEMA_VERSION

    @property
    def max_steps(self) -> int:
        return self.body.max_steps

    def to_dict(self) -> dict[str, Any]:
        return config_to_dict(self.domain, self.body)


def canonical_digest(domain: str, body: DomainConfig) -> str:
    payload = json.dumps(config_to_dict(domain, body), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def parse_config(path: str | Path) -> EnvConfig:
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(str(path), f"not parseable as YAML/JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(str(path), "config document must be a mapping")
    return config_from_dict(raw, label=path.stem)


def config_from_dict(raw: dict[str, Any], label: str = "") -> EnvConfig:
    data = dict(raw)
    domain = data.pop("domain", None)
    if domain not in DOMAINS:
        raise ConfigError("domain", f"unknown domain tag {domain!r}; expected one of {DOMAINS}")
    schema = data.pop("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise ConfigError("schema", f"unsupported schema version {schema}")
    body = _BODY_PARSERS[domain](data)
    body.validate()
    return EnvConfig(domain=domain, body=body, digest=canonical_digest(domain, body), label=label, schema=schema)


def config_to_dict(domain: str, body: DomainConfig) -> dict[str, Any]:
    """Fully populated plain-dict form (defaults included)."""
    if domain == "wildfire":
        d: dict[str, Any] = {
            "domain": domain,
            "schema": SCHEMA_VERSION,
            "grid_height": body.grid_height,
            "grid_width": body.grid_width,
            "agents": [
                {"position": list(a.position), "power": a.power, "capacity": a.capacity} for a in body.agents
            ],
            "fires": [
                {"position": list(f.position), "agents_required": f.agents_required, "intensity": f.intensity}
                for f in body.fires
            ],
            "p_spread": body.p_spread,
            "p_intensify": body.p_intensify,
            "burnout_level": body.burnout_level,
            "refill_steps": body.refill_steps,
            "spawn_agents_required": [[v, w] for v, w in body.spawn_agents_required],
            "max_steps": body.max_steps,
        }
    elif domain == "cybersecurity":
        d = {
            "domain": domain,
            "schema": SCHEMA_VERSION,
            "nodes": body.nodes,
            "edges": [list(e) for e in body.edges],
            "initial_states": list(body.resolved_initial_states()),
            "defenders": [{"location": a.location, "power": a.power} for a in body.defenders],
            "attackers": [{"location": a.location, "power": a.power} for a in body.attackers],
            "p_leave": body.p_leave,
            "p_return": body.p_return,
            "power_unit": body.power_unit,
            "max_steps": body.max_steps,
        }
    elif domain == "rideshare":
        d = {
            "domain": domain,
            "schema": SCHEMA_VERSION,
            "grid_height": body.grid_height,
            "grid_width": body.grid_width,
            "drivers": [
                {"position": list(s.position), "accept_cap": s.accept_cap, "ride_cap": s.ride_cap}
                for s in body.drivers
            ],
            "initial_tasks": [
                {"position": list(s.position), "destination": list(s.destination)} for s in body.initial_tasks
            ],
            "p_arrival": body.p_arrival,
            "max_open_tasks": body.max_open_tasks,
            "waiting_penalty": body.waiting_penalty,
            "penalize_accepted": body.penalize_accepted,
            "max_steps": body.max_steps,
        }
    else:
        raise ConfigError("domain", f"unknown domain tag {domain!r}")
    return d


def _pair(value: Any, field: str) -> tuple[int, int]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(field, f"expected a [y, x] pair, got {value!r}")
    y, x = value
    if not isinstance(y, int) or not isinstance(x, int):
        raise ConfigError(field, f"coordinates must be integers, got {value!r}")
    return (y, x)


def _reject_unknown(data: dict[str, Any], known: set[str]) -> None:
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(unknown[0], "unknown config field")


def _parse_wildfire(data: dict[str, Any]) -> WildfireConfig:
    known = {
        "grid_height", "grid_width", "agents", "fires", "p_spread", "p_intensify",
        "burnout_level", "refill_steps", "spawn_agents_required", "max_steps",
    }
    _reject_unknown(data, known)
    try:
        agents = tuple(
            FirefighterSpec(
                position=_pair(a["position"], f"agents[{i}].position"),
                power=float(a.get("power", 1.0)),
                capacity=int(a.get("capacity", 2)),
            )
            for i, a in enumerate(data.get("agents", []))
        )
        fires = tuple(
            FireSpec(
                position=_pair(f["position"], f"fires[{i}].position"),
                agents_required=int(f.get("agents_required", 1)),
                intensity=int(f.get("intensity", 1)),
            )
            for i, f in enumerate(data.get("fires", []))
        )
        spawn = data.get("spawn_agents_required")
        spawn_pairs = (
            tuple((int(v), float(w)) for v, w in spawn)
            if spawn is not None
            else WildfireConfig.__dataclass_fields__["spawn_agents_required"].default
        )
        return WildfireConfig(
            grid_height=int(data["grid_height"]),
            grid_width=int(data["grid_width"]),
            agents=agents,
            fires=fires,
            p_spread=float(data.get("p_spread", 0.05)),
            p_intensify=float(data.get("p_intensify", 0.3)),
            burnout_level=int(data.get("burnout_level", 5)),
            refill_steps=int(data.get("refill_steps", 2)),
            spawn_agents_required=spawn_pairs,
            max_steps=int(data.get("max_steps", 100)),
        )
    except KeyError as exc:
        raise ConfigError(str(exc.args[0]), "required field missing") from None
    except (TypeError, ValueError) as exc:
        raise ConfigError("wildfire", f"malformed field: {exc}") from exc


def _parse_cybersecurity(data: dict[str, Any]) -> CyberConfig:
    known = {
        "nodes", "edges", "initial_states", "defenders", "attackers",
        "p_leave", "p_return", "power_unit", "max_steps",
    }
    _reject_unknown(data, known)
    try:
        edges = tuple((int(u), int(v)) for u, v in data.get("edges", []))
        defenders = tuple(
            CyberAgentSpec(location=int(a["location"]), power=float(a.get("power", 1.0)))
            for a in data.get("defenders", [])
        )
        attackers = tuple(
            CyberAgentSpec(location=int(a["location"]), power=float(a.get("power", 1.0)))
            for a in data.get("attackers", [])
        )
        return CyberConfig(
            nodes=int(data["nodes"]),
            edges=edges,
            defenders=defenders,
            attackers=attackers,
            initial_states=tuple(int(s) for s in data.get("initial_states", [])),
            p_leave=float(data.get("p_leave", 0.1)),
            p_return=float(data.get("p_return", 0.5)),
            power_unit=float(data.get("power_unit", 1.0)),
            max_steps=int(data.get("max_steps", 100)),
        )
    except KeyError as exc:
        raise ConfigError(str(exc.args[0]), "required field missing") from None
    except (TypeError, ValueError) as exc:
        raise ConfigError("cybersecurity", f"malformed field: {exc}") from exc


def _parse_rideshare(data: dict[str, Any]) -> RideshareConfig:
    known = {
        "grid_height", "grid_width", "drivers", "initial_tasks", "p_arrival",
        "max_open_tasks", "waiting_penalty", "penalize_accepted", "max_steps",
    }
    _reject_unknown(data, known)
    try:
        drivers = tuple(
            DriverSpec(
                position=_pair(s["position"], f"drivers[{i}].position"),
                accept_cap=int(s.get("accept_cap", 3)),
                ride_cap=int(s.get("ride_cap", 2)),
            )
            for i, s in enumerate(data.get("drivers", []))
        )
        tasks = tuple(
            TaskSpec(
                position=_pair(s["position"], f"initial_tasks[{i}].position"),
                destination=_pair(s["destination"], f"initial_tasks[{i}].destination"),
            )
            for i, s in enumerate(data.get("initial_tasks", []))
        )
        return RideshareConfig(
            grid_height=int(data["grid_height"]),
            grid_width=int(data["grid_width"]),
            drivers=drivers,
            initial_tasks=tasks,
            p_arrival=float(data.get("p_arrival", 0.2)),
            max_open_tasks=int(data.get("max_open_tasks", 8)),
            waiting_penalty=float(data.get("waiting_penalty", -0.1)),
            penalize_accepted=bool(data.get("penalize_accepted", False)),
            max_steps=int(data.get("max_steps", 200)),
        )
    except KeyError as exc:
        raise ConfigError(str(exc.args[0]), "required field missing") from None
    except (TypeError, ValueError) as exc:
        raise ConfigError("rideshare", f"malformed field: {exc}") from exc


_BODY_PARSERS = {
    "wildfire": _parse_wildfire,
    "cybersecurity": _parse_cybersecurity,
    "rideshare": _parse_rideshare,
}


def default_config(domain: str) -> EnvConfig:
    """The canonical benchmark instance for a domain (what the shipped
    medium/low-openness config files contain)."""
    if domain == "wildfire":
        body: DomainConfig = WildfireConfig(
            grid_height=6,
            grid_width=6,
            agents=(
                FirefighterSpec((1, 1)),
                FirefighterSpec((1, 4)),
                FirefighterSpec((4, 2)),
            ),
            fires=(
                FireSpec((0, 1), 1, 1),
                FireSpec((2, 2), 1, 2),
                FireSpec((1, 5), 1, 1),
                FireSpec((2, 4), 1, 3),
                FireSpec((4, 1), 2, 2),
                FireSpec((5, 3), 1, 2),
            ),
        )
    elif domain == "cybersecurity":
        body = CyberConfig(
            nodes=4,
            edges=((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0)),
            defenders=(CyberAgentSpec(0), CyberAgentSpec(2)),
            attackers=(CyberAgentSpec(1), CyberAgentSpec(3)),
        )
    elif domain == "rideshare":
        body = RideshareConfig(
            grid_height=10,
            grid_width=10,
            drivers=(DriverSpec((2, 2)), DriverSpec((7, 7))),
        )
    else:
        raise ConfigError("domain", f"unknown domain tag {domain!r}")
    body.validate()
    return EnvConfig(domain=domain, body=body, digest=canonical_digest(domain, body), label=f"{domain}-default")
