"""Kernel backend selection.

At import, the compiled Cython kernels (``qfourier._core``) are used when
they were built; otherwise the numpy fallback is used.  Set
``QFOURIER_BACKEND=python`` to force the fallback.

Both backends expose the same two operations:

``apply_gate(state, gate, targets, num_qubits)``
    New state with ``gate`` acting on ``targets`` (first target is the
    gate's most significant qubit).
``run_trajectories(initial, program, num_qubits, uniforms, n_slots)``
    One trajectory per row of ``uniforms``; returns an ``int8`` record
    array of shape ``(shots, n_slots)``.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

from . import _fallback

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

_KINDS = {"gate": 0, "measure": 1, "cgate": 2}


def _offsets(targets, num_qubits: int) -> tuple[np.ndarray, int]:
    k = len(targets)
    positions = [num_qubits - 1 - t for t in targets]
    offs = np.zeros(2**k, dtype=np.intp)
    for r in range(2**k):
        for j, pos in enumerate(positions):
            if (r >> (k - 1 - j)) & 1:
                offs[r] |= 1 << pos
    return offs, int(offs[-1])


def _compiled_apply_gate(state, gate, targets, num_qubits):
    offs, mask = _offsets(targets, num_qubits)
    return _core.apply_gate(
        np.ascontiguousarray(state, dtype=complex),
        np.ascontiguousarray(gate, dtype=complex),
        offs,
        mask,
    )


def _compiled_run_trajectories(initial, program, num_qubits, uniforms, n_slots):
    kinds, slots, masks, dims, mat_start, off_start = [], [], [], [], [], []
    mats, offs = [], []
    mpos = opos = 0
    for kind, matrix, targets, slot in program:
        kinds.append(_KINDS[kind])
        slots.append(slot if slot is not None else 0)
        if kind == "measure":
            masks.append(1 << (num_qubits - 1 - targets[0]))
            dims.append(0)
            mat_start.append(mpos)
            off_start.append(opos)
            continue
        o, mask = _offsets(targets, num_qubits)
        m = np.ascontiguousarray(matrix, dtype=complex).reshape(-1)
        masks.append(mask)
        dims.append(o.size)
        mat_start.append(mpos)
        off_start.append(opos)
        mats.append(m)
        offs.append(o)
        mpos += m.size
        opos += o.size
    mats.append(np.zeros(1, dtype=complex))
    offs.append(np.zeros(1, dtype=np.intp))
    return _core.run_trajectories(
        np.ascontiguousarray(initial, dtype=complex),
        np.asarray(kinds, dtype=np.intc),
        np.asarray(slots, dtype=np.intp),
        np.asarray(masks, dtype=np.intp),
        np.asarray(dims, dtype=np.intp),
        np.asarray(mat_start, dtype=np.intp),
        np.concatenate(mats),
        np.asarray(off_start, dtype=np.intp),
        np.concatenate(offs),
        np.ascontiguousarray(uniforms, dtype=np.float64),
        n_slots,
    )


PYTHON = SimpleNamespace(
    name="python",
    apply_gate=_fallback.apply_gate,
    run_trajectories=_fallback.run_trajectories,
)

COMPILED = (
    SimpleNamespace(
        name="compiled",
        apply_gate=_compiled_apply_gate,
        run_trajectories=_compiled_run_trajectories,
    )
    if _core is not None
    else None
)


def available() -> list[str]:
    return ["python"] + (["compiled"] if COMPILED is not None else [])


def get(name: str | None = None) -> SimpleNamespace:
    """Return the named backend, or the import-time default."""
    if name is None:
        return ACTIVE
    if name == "python":
        return PYTHON
    if name == "compiled":
        if COMPILED is None:
            raise RuntimeError("compiled kernels are not built; reinstall with a C compiler")
        return COMPILED
    raise ValueError(f"unknown backend {name!r}")


def _select() -> SimpleNamespace:
    forced = os.environ.get("QFOURIER_BACKEND", "").strip().lower()
    if forced in ("python", "numpy", "fallback"):
        return PYTHON
    return COMPILED if COMPILED is not None else PYTHON


ACTIVE = _select()
