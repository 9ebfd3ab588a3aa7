"""Dense complex linear algebra used by every other module.

Matrices and state vectors are plain ``numpy`` arrays of dtype complex128.
Basis index convention: qubit 0 is the most significant bit of the index,
so ``|q0 q1 ... q_{p-1}>`` maps to ``int("q0q1...", 2)``.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

# largest state vector we allocate (2**20 amplitudes)
MAX_STATE_QUBITS = 20
# largest dense operator we allocate (4096 x 4096)
MAX_MATRIX_QUBITS = 12

DEFAULT_TOL = 1e-9
PRINTED_TOL = 5e-4
PSD_TOL = 1e-7


class QFourierError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(QFourierError, ValueError):
    """Operand dimensions do not fit together."""


class NormalizationError(QFourierError, ValueError):
    """A vector that must have unit norm does not."""


class CapError(QFourierError, ValueError):
    """Requested object exceeds the dense-representation size cap."""


def check_state_cap(num_qubits: int) -> None:
    if num_qubits > MAX_STATE_QUBITS:
        raise CapError(f"{num_qubits} qubits exceeds the state cap of {MAX_STATE_QUBITS}")


def check_matrix_cap(num_qubits: int) -> None:
    if num_qubits > MAX_MATRIX_QUBITS:
        raise CapError(
            f"{num_qubits}-qubit dense operator exceeds the cap of {MAX_MATRIX_QUBITS} qubits"
        )


def num_qubits_of(dim: int) -> int:
    """Return p such that ``dim == 2**p``; raise ShapeError otherwise."""
    if dim < 1 or dim & (dim - 1):
        raise ShapeError(f"dimension {dim} is not a power of two")
    return dim.bit_length() - 1


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf")
    return m


def as_state(v, *, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate ``v`` as a normalized state vector of length 2**p."""
    s = np.asarray(v, dtype=complex).reshape(-1)
    p = num_qubits_of(s.size)
    check_state_cap(p)
    if not np.all(np.isfinite(s)):
        raise ValueError("state contains NaN or Inf")
    norm = float(np.vdot(s, s).real)
    if abs(norm - 1.0) > tol:
        raise NormalizationError(f"state norm^2 is {norm!r}, expected 1")
    return s


def basis_state(bits: str | Iterable[int]) -> np.ndarray:
    """Computational basis vector for a bit string, e.g. ``basis_state("010")``."""
    bits = [int(b) for b in bits]
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0/1, got {bits}")
    check_state_cap(len(bits))
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int("".join(map(str, bits)) or "0", 2)] = 1.0
    return v


def zeros_state(num_qubits: int) -> np.ndarray:
    check_state_cap(num_qubits)
    v = np.zeros(2**num_qubits, dtype=complex)
    v[0] = 1.0
    return v


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*mats) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in mats:
        out = np.kron(out, as_matrix(m))
    return out


def kron_states(*vecs) -> np.ndarray:
    out = np.ones(1, dtype=complex)
    for v in vecs:
        out = np.kron(out, np.asarray(v, dtype=complex).reshape(-1))
    return out


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def matpow(a, n: int) -> np.ndarray:
    a = as_matrix(a)
    if n < 0:
        raise ValueError("negative matrix power")
    return np.linalg.matrix_power(a, n)


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def identity(num_qubits: int) -> np.ndarray:
    check_matrix_cap(num_qubits)
    return np.eye(2**num_qubits, dtype=complex)


def outer(v) -> np.ndarray:
    """Density matrix ``|v><v|`` of a normalized state."""
    s = as_state(v)
    return np.outer(s, s.conj())


def partial_trace(rho, keep: Iterable[int]) -> np.ndarray:
    """Reduce ``rho`` to the qubits in ``keep``, in ascending qubit order."""
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise ShapeError(f"density matrix must be square, got {rho.shape}")
    p = num_qubits_of(rho.shape[0])
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("keep set must be nonempty")
    if kept[0] < 0 or kept[-1] >= p:
        raise ValueError(f"keep set {kept} out of range for {p} qubits")
    traced = [q for q in range(p) if q not in kept]
    dk, dt = 2 ** len(kept), 2 ** len(traced)
    t = rho.reshape([2] * (2 * p))
    order = kept + traced + [p + q for q in kept] + [p + q for q in traced]
    t = t.transpose(order).reshape(dk, dt, dk, dt)
    return np.einsum("ajbj->ab", t)


def approx_eq(a, b, tol: float = DEFAULT_TOL) -> bool:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    return bool(np.max(np.abs(a - b), initial=0.0) <= tol)


def max_deviation(a, b) -> float:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b), initial=0.0))


def is_unitary(u, tol: float = DEFAULT_TOL) -> bool:
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False
    return approx_eq(dagger(u) @ u, np.eye(u.shape[0]), tol)


def is_density_matrix(rho, tol: float = DEFAULT_TOL, psd_tol: float = PSD_TOL) -> bool:
    """Hermitian, unit trace and positive semidefinite within tolerance."""
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        return False
    if not approx_eq(rho, rho.conj().T, tol):
        return False
    if abs(np.trace(rho) - 1.0) > tol:
        return False
    return bool(np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() >= -psd_tol)


def fidelity(psi, phi) -> float:
    """``|<psi|phi>|^2`` for pure states."""
    return float(abs(np.vdot(np.asarray(psi, complex), np.asarray(phi, complex))) ** 2)


def equal_up_to_phase(psi, phi, tol: float = DEFAULT_TOL) -> bool:
    return abs(fidelity(psi, phi) - 1.0) <= tol
