"""Seed-reproducible benchmark suite for open multi-agent POSG domains."""
from . import baselines, config_io, core, cybersecurity, evaluation, registry, rideshare, wildfire

__version__ = "0.1.0"

__all__ = [
    "core",
    "wildfire",
    "cybersecurity",
    "rideshare",
    "baselines",
    "evaluation",
    "config_io",
    "registry",
    "__version__",
]
