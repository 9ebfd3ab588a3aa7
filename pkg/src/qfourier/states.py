"""Fourier states of degree 0..3, Bell, GHZ and gamma states, their density
matrices, and the nonzero-tile classifier for two-qubit density matrices.

Two-qubit families are labelled by a phase bit ``a`` and a parity bit ``b``;
the input basis state is ``|ab>`` with ``a`` on qubit 0.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import gates
from .numerics import ShapeError, basis_state, check_state_cap, kron, outer, zeros_state


@dataclass(frozen=True)
class StateLabel:
    a: int  # phase bit
    b: int  # parity bit

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"labels must be bits, got a={self.a!r} b={self.b!r}")

    @property
    def bits(self) -> str:
        return f"{self.a}{self.b}"


LABELS = tuple(StateLabel(a, b) for a in (0, 1) for b in (0, 1))


def _label(label) -> StateLabel:
    return label if isinstance(label, StateLabel) else StateLabel(*label)


def fourier_state_2q(d: int, label) -> np.ndarray:
    """``qfg(2, d) (H x I) |ab>``."""
    lab = _label(label)
    if d < 0:
        raise ValueError("degree must be non-negative")
    prep = kron(gates.H, gates.I2) @ basis_state(lab.bits)
    return gates.qfg(2, d) @ prep


def fourier_state(p: int, d: int) -> np.ndarray:
    """``qfg(p, d) (H x I) |0...0>``."""
    check_state_cap(p)
    prep = kron(gates.H, np.eye(2 ** (p - 1))) @ zeros_state(p)
    return gates.qfg(p, d) @ prep


def bell(label) -> np.ndarray:
    """``(|0b> + (-1)^a |1, not b>) / sqrt 2``."""
    lab = _label(label)
    v = np.zeros(4, dtype=complex)
    v[lab.b] = 1
    v[2 + (1 - lab.b)] = (-1) ** lab.a
    return v / math.sqrt(2)


def gamma(label) -> np.ndarray:
    """Non-maximally entangled pair ``CNOT (X^(1/4) x I) |ab>``."""
    lab = _label(label)
    return gates.CNOT @ kron(gates.fourth_root_x(), gates.I2) @ basis_state(lab.bits)


def ghz(n: int) -> np.ndarray:
    if n < 2:
        raise ValueError("GHZ needs at least 2 qubits")
    check_state_cap(n)
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 1 / math.sqrt(2)
    return v


def density(state) -> np.ndarray:
    return outer(state)


class Layout(enum.Enum):
    CORNER_ENTANGLED = "CornerEntangled"
    CENTER_ENTANGLED = "CenterEntangled"
    ROUGH_A = "RoughA"
    ROUGH_B = "RoughB"
    OTHER = "Other"


def _mask(indices) -> np.ndarray:
    m = np.zeros((4, 4), dtype=bool)
    for i in indices:
        for j in indices:
            m[i, j] = True
    return m


# each layout is a full block over the listed basis indices
CANONICAL_MASKS = {
    Layout.CORNER_ENTANGLED: _mask((0, 3)),
    Layout.CENTER_ENTANGLED: _mask((1, 2)),
    Layout.ROUGH_A: _mask((0, 2, 3)),
    Layout.ROUGH_B: _mask((1, 2, 3)),
}


def tile_pattern(rho, tol: float = 1e-6) -> np.ndarray:
    """Boolean 4x4 mask of the entries with modulus above ``tol``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ShapeError(f"tile patterns are defined for 4x4 density matrices, got {rho.shape}")
    return np.abs(rho) > tol


def classify(rho, tol: float = 1e-6) -> Layout:
    mask = tile_pattern(rho, tol)
    for layout, canon in CANONICAL_MASKS.items():
        if np.array_equal(mask, canon):
            return layout
    return Layout.OTHER
