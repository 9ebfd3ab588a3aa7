"""Quantum Fourier gates and states, rough entanglement and teleportation."""
from . import applications, backend, circuit, document, gates, numerics, states, teleport, verify
from .circuit import Circuit, OutcomeDistribution
from .states import StateLabel
from .teleport import PairSource

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "OutcomeDistribution",
    "PairSource",
    "StateLabel",
    "applications",
    "backend",
    "circuit",
    "document",
    "gates",
    "numerics",
    "states",
    "teleport",
    "verify",
]
