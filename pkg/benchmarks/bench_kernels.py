"""Compare the compiled and numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--shots N] [--repeat R] [--qubits Q]

Times ``apply_gate`` on a random state and ``run_trajectories`` on the
three-qubit teleportation protocol, and checks that both backends agree.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from qfourier import backend, gates
from qfourier import circuit as C
from qfourier import teleport as tp


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_apply_gate(name: str, qubits: int, repeat: int) -> float:
    rng = np.random.default_rng(0)
    psi = rng.normal(size=2**qubits) + 1j * rng.normal(size=2**qubits)
    psi /= np.linalg.norm(psi)
    be = backend.get(name)
    layers = [(gates.H, (q,)) for q in range(qubits)] + [(gates.CNOT, (q, q + 1)) for q in range(qubits - 1)]

    def run():
        s = psi
        for g, t in layers:
            s = be.apply_gate(s, g, t, qubits)
        return s

    return best_of(run, repeat) / len(layers)


def bench_trajectories(name: str, shots: int, repeat: int) -> float:
    circ = tp.protocol_circuit()
    psi = tp.psi_presets()["R"]
    source = tp.PairSource.rough(1)
    initial = np.kron(psi, tp.pair_state(source))
    return best_of(lambda: C.sample_records(circ, initial, shots, 0, backend=name), repeat)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--shots", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--qubits", type=int, default=16)
    args = ap.parse_args()

    names = backend.available()
    print(f"backends: {', '.join(names)}")
    rows = []
    for name in names:
        g = bench_apply_gate(name, args.qubits, args.repeat)
        t = bench_trajectories(name, args.shots, args.repeat)
        rows.append((name, g, t))
        print(f"{name:>9}  apply_gate ({args.qubits} qubits): {g * 1e3:8.3f} ms/gate"
              f"  run_trajectories ({args.shots} shots): {t:7.3f} s")
    if len(rows) == 2:
        (_, gp, tp_), (_, gc, tc) = rows
        print(f"speedup    apply_gate: {gp / gc:5.2f}x  run_trajectories: {tp_ / tc:5.2f}x")
        circ = tp.protocol_circuit()
        initial = np.kron(tp.psi_presets()["R"], tp.pair_state(tp.PairSource.rough(1)))
        a = C.sample_records(circ, initial, 2000, 3, backend="python")
        b = C.sample_records(circ, initial, 2000, 3, backend="compiled")
        print(f"records identical across backends: {bool(np.array_equal(a, b))}")


if __name__ == "__main__":
    main()
