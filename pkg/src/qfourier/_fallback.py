"""Pure numpy implementation of the state-vector kernels.

Same contract as the compiled kernels in ``_core.pyx``; trajectories are
vectorized across shots instead of looped.
"""
from __future__ import annotations

import numpy as np

# amplitudes held in memory at once while batching trajectories
_BATCH_AMPLITUDES = 1 << 22


def apply_gate(state: np.ndarray, gate: np.ndarray, targets, num_qubits: int) -> np.ndarray:
    k = len(targets)
    t = state.reshape([2] * num_qubits)
    g = gate.reshape([2] * (2 * k))
    out = np.tensordot(g, t, axes=(list(range(k, 2 * k)), list(targets)))
    out = np.moveaxis(out, list(range(k)), list(targets))
    return np.ascontiguousarray(out).reshape(-1)


def _apply_batch(states: np.ndarray, gate: np.ndarray, targets, num_qubits: int) -> np.ndarray:
    k = len(targets)
    shots = states.shape[0]
    t = states.reshape([shots] + [2] * num_qubits)
    g = gate.reshape([2] * (2 * k))
    axes = [q + 1 for q in targets]
    out = np.tensordot(g, t, axes=(list(range(k, 2 * k)), axes))
    out = np.moveaxis(out, list(range(k)), axes)
    return np.ascontiguousarray(out).reshape(shots, -1)


def run_trajectories(initial, program, num_qubits, uniforms, n_slots):
    """Batched counterpart of ``_core.run_trajectories``.

    ``program`` is a sequence of ``(kind, matrix, targets, slot)`` with kind
    in {"gate", "measure", "cgate"}; for "measure" ``targets`` is ``(qubit,)``.
    """
    shots = uniforms.shape[0]
    n = initial.size
    records = np.zeros((shots, n_slots), dtype=np.int8)
    chunk = max(1, _BATCH_AMPLITUDES // n)
    index = np.arange(n)
    for lo in range(0, shots, chunk):
        hi = min(shots, lo + chunk)
        states = np.tile(initial, (hi - lo, 1))
        rec = records[lo:hi]
        m = 0
        for kind, matrix, targets, slot in program:
            if kind == "gate":
                states = _apply_batch(states, matrix, targets, num_qubits)
            elif kind == "cgate":
                sel = rec[:, slot] == 1
                if sel.any():
                    states[sel] = _apply_batch(states[sel], matrix, targets, num_qubits)
            else:
                mask = 1 << (num_qubits - 1 - targets[0])
                is_one = (index & mask) != 0
                probs = states.real**2 + states.imag**2
                p1 = probs[:, is_one].sum(axis=1)
                p0 = probs[:, ~is_one].sum(axis=1)
                outcome = uniforms[lo:hi, m] * (p0 + p1) < p1
                m += 1
                rec[:, slot] = outcome
                scale = 1.0 / np.sqrt(np.where(outcome, p1, p0))
                keep = is_one[None, :] == outcome[:, None]
                states = np.where(keep, states, 0) * scale[:, None]
    return records
