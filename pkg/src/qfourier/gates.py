"""Gate constructors: QFT, qubit-order reversal, the quantum Fourier gate
family F(p, d), standard gates, the fourth root of X, Hadamard rotation
gates and Toffoli, plus Boolean models of how some of them act on
computational basis states.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .numerics import check_matrix_cap, identity

_SQ2 = 1 / math.sqrt(2)

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) * _SQ2
S = np.array([[1, 0], [0, 1j]], dtype=complex)
T = np.array([[1, 0], [0, cmath.exp(1j * math.pi / 4)]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
# CNOT with control and target exchanged
CNOT_FLIPPED = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)
CZ = np.diag([1, 1, 1, -1]).astype(complex)

for _g in (I2, X, Y, Z, H, S, T, SWAP, CNOT, CNOT_FLIPPED, CZ):
    _g.setflags(write=False)

STANDARD = {
    "I": I2,
    "X": X,
    "Y": Y,
    "Z": Z,
    "H": H,
    "S": S,
    "T": T,
    "SWAP": SWAP,
    "CNOT": CNOT,
    "CX": CNOT,
    "CZ": CZ,
}


def standard_gate(name: str) -> np.ndarray:
    try:
        return STANDARD[name.upper()].copy()
    except KeyError:
        raise ValueError(f"unknown gate {name!r}; known: {sorted(STANDARD)}") from None


def _check_p(p: int) -> None:
    if not isinstance(p, (int, np.integer)) or p < 1:
        raise ValueError(f"qubit count must be a positive integer, got {p!r}")
    check_matrix_cap(int(p))


def qft(p: int) -> np.ndarray:
    """DFT matrix on p qubits, entry (j, k) = exp(2 pi i jk / N) / sqrt(N).

    No bit-reversal swaps are folded in.
    """
    _check_p(p)
    n = 2**p
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jk / n) / math.sqrt(n)


def bit_reverse(index: int, p: int) -> int:
    return int(format(index, f"0{p}b")[::-1], 2)


def sbeq(p: int) -> np.ndarray:
    """Swap of qubits k and p-1-k for every k: full reversal of qubit order."""
    _check_p(p)
    n = 2**p
    m = np.zeros((n, n), dtype=complex)
    for i in range(n):
        m[bit_reverse(i, p), i] = 1.0
    return m


def qfg(p: int, d: int) -> np.ndarray:
    """Quantum Fourier gate of p qubits and degree d: sbeq . qft^(d mod 4) . sbeq."""
    _check_p(p)
    if not isinstance(d, (int, np.integer)) or d < 0:
        raise ValueError(f"degree must be a non-negative integer, got {d!r}")
    d = int(d) % 4
    if d == 0:
        return identity(p)
    r = sbeq(p)
    f = qft(p)
    return r @ np.linalg.matrix_power(f, d) @ r


def fourth_root_x() -> np.ndarray:
    """[[u, v], [v, u]] with u = (1 + e^{i pi/4})/2, v = (1 - e^{i pi/4})/2, built as H T H."""
    return H @ T @ H


def fourth_root_x_entries() -> tuple[complex, complex]:
    w = cmath.exp(1j * math.pi / 4)
    return (1 + w) / 2, (1 - w) / 2


_HROT = {
    1: np.array([[1, 1], [1, -1]], dtype=complex) * _SQ2,
    2: np.array([[1, -1], [1, 1]], dtype=complex) * _SQ2,
    3: np.array([[-1, 1], [1, 1]], dtype=complex) * _SQ2,
    4: np.array([[1, 1], [-1, 1]], dtype=complex) * _SQ2,
}

# (theta, phi, lambda) reproducing each Hadamard rotation gate
HROT_ANGLES = {
    1: (math.pi / 2, 0.0, math.pi),
    2: (math.pi / 2, 0.0, 0.0),
    3: (5 * math.pi / 2, math.pi, 0.0),
    4: (math.pi / 2, math.pi, math.pi),
}


def hadamard_rotation(quadrant: int) -> np.ndarray:
    if quadrant not in _HROT:
        raise ValueError(f"quadrant must be 1..4, got {quadrant!r}")
    return _HROT[quadrant].copy()


def general_unitary(theta: float, phi: float, lam: float) -> np.ndarray:
    for a in (theta, phi, lam):
        if not math.isfinite(a):
            raise ValueError("angles must be finite")
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [
            [c, -cmath.exp(1j * lam) * s],
            [cmath.exp(1j * phi) * s, cmath.exp(1j * (lam + phi)) * c],
        ],
        dtype=complex,
    )


def toffoli(p: int) -> np.ndarray:
    """X on the last of p qubits, controlled on all the others."""
    if p < 2:
        raise ValueError("toffoli needs at least 2 qubits")
    _check_p(p)
    m = identity(p)
    n = 2**p
    m[[n - 2, n - 1]] = m[[n - 1, n - 2]]
    return m


def _check_bits(p: int, bits: Sequence[int]) -> list[int]:
    bits = [int(b) for b in bits]
    if len(bits) != p:
        raise ValueError(f"expected {p} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0 or 1")
    return bits


def cbs_logic_qfg2(p: int, bits: Sequence[int]) -> tuple[int, ...]:
    """Boolean action of qfg(p, 2) on a basis state: bit k ^= OR of bits 0..k-1."""
    bits = _check_bits(p, bits)
    out, seen = [], 0
    for b in bits:
        out.append(b ^ seen)
        seen |= b
    return tuple(out)


def cbs_logic_toffoli(p: int, bits: Sequence[int]) -> tuple[int, ...]:
    """Boolean action of toffoli(p): last bit ^= AND of the others."""
    bits = _check_bits(p, bits)
    return tuple(bits[:-1]) + (bits[-1] ^ int(all(bits[:-1])),)


def cbs_logic_cnot_fanout(p: int, bits: Sequence[int]) -> tuple[int, ...]:
    """Boolean action of CNOTs from qubit 0 onto every other qubit."""
    bits = _check_bits(p, bits)
    return (bits[0],) + tuple(b ^ bits[0] for b in bits[1:])


GATE_NAMES = (
    "I", "X", "Y", "Z", "H", "S", "T", "SWAP", "CNOT",
    "QFT", "SBEQ", "QFG", "FourthRootX", "HRot", "U3", "Toffoli",
)


@dataclass(frozen=True)
class GateSpec:
    """Named gate with its parameters; ``matrix()`` builds it."""

    name: str
    p: int | None = None
    d: int | None = None
    quadrant: int | None = None
    theta: float | None = None
    phi: float | None = None
    lam: float | None = None

    def __post_init__(self):
        if self.name not in GATE_NAMES:
            raise ValueError(f"unknown gate {self.name!r}")
        if self.p is not None and self.p < 1:
            raise ValueError("p must be >= 1")
        if self.d is not None and self.d < 0:
            raise ValueError("d must be >= 0")
        if self.quadrant is not None and self.quadrant not in (1, 2, 3, 4):
            raise ValueError("quadrant must be in 1..4")

    def _need(self, attr):
        value = getattr(self, attr)
        if value is None:
            raise ValueError(f"gate {self.name} requires parameter {attr!r}")
        return value

    def matrix(self) -> np.ndarray:
        n = self.name
        if n in STANDARD:
            return standard_gate(n)
        if n == "QFT":
            return qft(self._need("p"))
        if n == "SBEQ":
            return sbeq(self._need("p"))
        if n == "QFG":
            return qfg(self._need("p"), self._need("d"))
        if n == "FourthRootX":
            return fourth_root_x()
        if n == "HRot":
            return hadamard_rotation(self._need("quadrant"))
        if n == "U3":
            return general_unitary(self._need("theta"), self._need("phi"), self._need("lam"))
        return toffoli(self._need("p"))
