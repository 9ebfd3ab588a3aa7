# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled state-vector kernels.

Both entry points take pre-flattened data prepared by ``qfourier.backend``;
they do no validation of their own.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef double complex cplx

cdef enum:
    OP_GATE = 0
    OP_MEASURE = 1
    OP_CGATE = 2


cdef inline void _apply(cplx* state, Py_ssize_t n, const cplx* gate, Py_ssize_t d,
                        const Py_ssize_t* offsets, Py_ssize_t mask, cplx* scratch) noexcept nogil:
    cdef Py_ssize_t i, r, c
    cdef cplx acc
    for i in range(n):
        if i & mask:
            continue
        for r in range(d):
            scratch[r] = state[i + offsets[r]]
        for r in range(d):
            acc = 0
            for c in range(d):
                acc = acc + gate[r * d + c] * scratch[c]
            state[i + offsets[r]] = acc


def apply_gate(const cplx[::1] state, const cplx[:, ::1] gate, const Py_ssize_t[::1] offsets, Py_ssize_t mask):
    """Return a new state with ``gate`` applied on the sub-space given by ``offsets``."""
    cdef Py_ssize_t n = state.shape[0], d = gate.shape[0]
    out = np.array(state, dtype=np.complex128, copy=True)
    cdef cplx[::1] o = out
    cdef cplx[::1] scratch = np.empty(d, dtype=np.complex128)
    with nogil:
        _apply(&o[0], n, &gate[0, 0], d, &offsets[0], mask, &scratch[0])
    return out


def run_trajectories(const cplx[::1] initial,
                     const int[::1] kinds,
                     const Py_ssize_t[::1] slots,
                     const Py_ssize_t[::1] masks,
                     const Py_ssize_t[::1] dims,
                     const Py_ssize_t[::1] mat_start,
                     const cplx[::1] mats,
                     const Py_ssize_t[::1] off_start,
                     const Py_ssize_t[::1] offs,
                     const double[:, ::1] uniforms,
                     Py_ssize_t n_slots):
    """Simulate one pure-state trajectory per row of ``uniforms``.

    Measurement k of a shot consumes ``uniforms[shot, k]``; the outcome is 1
    iff ``u * (p0 + p1) < p1``.
    """
    cdef Py_ssize_t n = initial.shape[0]
    cdef Py_ssize_t shots = uniforms.shape[0]
    cdef Py_ssize_t n_ops = kinds.shape[0]
    cdef Py_ssize_t max_d = 1, s, k, i, m
    for k in range(n_ops):
        if dims[k] > max_d:
            max_d = dims[k]
    records = np.zeros((shots, n_slots), dtype=np.int8)
    cdef signed char[:, ::1] rec = records
    cdef cplx[::1] work = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] scratch = np.empty(max_d, dtype=np.complex128)
    cdef double p0, p1, a2, scale
    cdef int outcome
    with nogil:
        for s in range(shots):
            for i in range(n):
                work[i] = initial[i]
            m = 0
            for k in range(n_ops):
                if kinds[k] == OP_GATE or (kinds[k] == OP_CGATE and rec[s, slots[k]] == 1):
                    _apply(&work[0], n, &mats[mat_start[k]], dims[k],
                           &offs[off_start[k]], masks[k], &scratch[0])
                elif kinds[k] == OP_MEASURE:
                    p0 = 0.0
                    p1 = 0.0
                    for i in range(n):
                        a2 = work[i].real * work[i].real + work[i].imag * work[i].imag
                        if i & masks[k]:
                            p1 = p1 + a2
                        else:
                            p0 = p0 + a2
                    outcome = 1 if uniforms[s, m] * (p0 + p1) < p1 else 0
                    m = m + 1
                    rec[s, slots[k]] = outcome
                    scale = 1.0 / ((p1 if outcome else p0) ** 0.5)
                    for i in range(n):
                        if ((i & masks[k]) != 0) == (outcome == 1):
                            work[i] = work[i] * scale
                        else:
                            work[i] = 0
    return records
