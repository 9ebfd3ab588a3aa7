"""Constructions built from Fourier gates: stretching, entanglement levels,
parallel pair and GHZ sources, hyper-teleportation, secret-sharing sources
and two styles of repeater.

Qubit layouts used below:

* ``parallel_pairs(n)``: controls ``0..n-1``, targets ``n..2n-1``; pair ``i``
  is ``(i, n + i)``.
* ``parallel_ghz(b)``: ``2b`` qubits, the two central qubits ``b-1`` and ``b``
  seed the upper branch ``0..b-1`` and the lower branch ``b..2b-1``.
* ``hyper_teleport``: inputs ``0..n-1``, then the ``2n`` pair qubits laid out
  as in ``parallel_pairs(n)``.
* ``entanglement_swap``: ``A=0, B1=1, B2=2, C=3``.
* ``repeater_chain``: input on qubit 0, hop ``h`` uses pair ``(2h+1, 2h+2)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import gates, states
from .circuit import (
    Circuit,
    OutcomeDistribution,
    qubit_marginal,
    run_analytic,
    run_sampled,
)
from .numerics import (
    DEFAULT_TOL,
    as_matrix,
    as_state,
    check_state_cap,
    fidelity,
    is_unitary,
    kron,
    kron_states,
    max_deviation,
    outer,
    partial_trace,
    zeros_state,
)
from .teleport import PairSource, pair_state

SEED_GATES = {
    "h": gates.H,
    "x4": gates.fourth_root_x(),
}

BELL00 = states.bell((0, 0))
BELL00_DENSITY = outer(BELL00)
MIXED_PAIR = np.eye(4) / 4


def seed_gate(name: str) -> np.ndarray:
    try:
        return SEED_GATES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown seed gate {name!r}; choose from {sorted(SEED_GATES)}") from None


def _check_seed(g) -> np.ndarray:
    g = as_matrix(g)
    if g.shape != (2, 2):
        raise ValueError(f"seed gate must be 2x2, got {g.shape}")
    if not is_unitary(g):
        raise ValueError("seed gate is not unitary")
    return g


@dataclass(frozen=True)
class StretchSpec:
    k: int
    seed_gate: np.ndarray = field(default_factory=lambda: gates.H)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("stretching index must be >= 1")
        object.__setattr__(self, "seed_gate", _check_seed(self.seed_gate))


@dataclass(frozen=True)
class LevelSpec:
    p: int
    position: int
    seed_gate: np.ndarray = field(default_factory=lambda: gates.H)

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if not 0 <= self.position < self.p:
            raise ValueError(f"position {self.position} out of range for {self.p} qubits")
        object.__setattr__(self, "seed_gate", _check_seed(self.seed_gate))


def _evolve(circuit: Circuit, initial=None) -> np.ndarray:
    (branch,) = run_analytic(circuit, initial).values()
    return branch.state


def stretch(spec: StretchSpec | int, seed=None) -> np.ndarray:
    """``qfg(k, 2) (seed x I) |0...0>``: amplitude ``seed[0,0]`` on ``|0...0>``
    and ``seed[1,0]`` on ``|1...1>``."""
    if not isinstance(spec, StretchSpec):
        spec = StretchSpec(spec, gates.H if seed is None else seed)
    check_state_cap(spec.k)
    c = Circuit(spec.k).gate(spec.seed_gate, 0).gate(gates.qfg(spec.k, 2), *range(spec.k))
    return _evolve(c)


def level(spec: LevelSpec | int, position: int | None = None, seed=None) -> np.ndarray:
    """Seed gate on qubit ``position`` followed by ``qfg(p, 2)`` on all qubits."""
    if not isinstance(spec, LevelSpec):
        spec = LevelSpec(spec, position, gates.H if seed is None else seed)
    check_state_cap(spec.p)
    c = Circuit(spec.p).gate(spec.seed_gate, spec.position).gate(gates.qfg(spec.p, 2), *range(spec.p))
    return _evolve(c)


# entanglement parallelization


def parallel_pairs_circuit(n: int) -> Circuit:
    if n < 1:
        raise ValueError("need at least one pair")
    check_state_cap(2 * n)
    c = Circuit(2 * n).gate(gates.qfg(n, 1), *range(n))
    for i in range(n):
        c = c.gate(gates.CNOT, i, n + i)
    return c


def parallel_pairs(n: int) -> tuple[Circuit, np.ndarray]:
    """``n`` independent ``|beta_00>`` pairs from one ``qfg(n, 1)`` and ``n`` CNOTs."""
    c = parallel_pairs_circuit(n)
    return c, _evolve(c)


def reduced(state, qubits: Sequence[int]) -> np.ndarray:
    return partial_trace(outer(state), qubits)


def parallel_pairs_check(n: int) -> dict:
    """Largest deviations of the pair and cross reduced matrices from
    ``|beta_00><beta_00|`` and ``I/4``."""
    _, psi = parallel_pairs(n)
    paired = [max_deviation(reduced(psi, (i, n + i)), BELL00_DENSITY) for i in range(n)]
    cross = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for a, b in ((i, j), (i, n + j), (n + i, n + j)):
                if a < b:
                    cross.append(max_deviation(reduced(psi, (a, b)), MIXED_PAIR))
    return {
        "n": n,
        "norm": float(np.linalg.norm(psi)),
        "pair_deviation": max(paired),
        "cross_deviation": max(cross) if cross else 0.0,
        "cross_pairs_checked": len(cross),
    }


def parallel_ghz_circuit(branch: int) -> Circuit:
    if branch not in (3, 4):
        raise ValueError("branch must be 3 or 4")
    b = branch
    c = Circuit(2 * b).gate(gates.qfg(2, 1), b - 1, b)
    for t in range(b - 2, -1, -1):
        c = c.gate(gates.CNOT, b - 1, t)
    for t in range(b + 1, 2 * b):
        c = c.gate(gates.CNOT, b, t)
    return c


def parallel_ghz(branch: int) -> tuple[Circuit, np.ndarray]:
    """Two independent GHZ states of ``branch`` qubits from one ``qfg(2, 1)``."""
    c = parallel_ghz_circuit(branch)
    return c, _evolve(c)


def ghz_corner_signature(rho, tol: float = 1e-6) -> bool:
    """True iff only the four corner entries of ``rho`` are nonzero."""
    rho = as_matrix(rho)
    mask = np.abs(rho) > tol
    expect = np.zeros_like(mask)
    expect[0, 0] = expect[0, -1] = expect[-1, 0] = expect[-1, -1] = True
    return bool(np.array_equal(mask, expect))


def parallel_ghz_check(branch: int) -> dict:
    _, psi = parallel_ghz(branch)
    b = branch
    upper, lower = reduced(psi, range(b)), reduced(psi, range(b, 2 * b))
    return {
        "branch": b,
        "central_deviation": max_deviation(reduced(psi, (b - 1, b)), MIXED_PAIR),
        "upper_ghz_deviation": max_deviation(upper, outer(states.ghz(b))),
        "lower_ghz_deviation": max_deviation(lower, outer(states.ghz(b))),
        "upper_corner_signature": ghz_corner_signature(upper),
        "lower_corner_signature": ghz_corner_signature(lower),
    }


# hyper-teleportation


def _bsm(c: Circuit, sender: int, half: int, slot_sender: int, slot_half: int, bob: int) -> Circuit:
    """Bell measurement on (sender, half) with Bob's X/Z corrections."""
    c = c.gate(gates.CNOT, sender, half).gate(gates.H, sender)
    c = c.measure(sender, slot_sender).measure(half, slot_half)
    return c.c_if(gates.X, bob, slot=slot_half).c_if(gates.Z, bob, slot=slot_sender)


def hyper_teleport_circuit(n: int, *, measure_bob: bool = True) -> Circuit:
    if n < 1:
        raise ValueError("need at least one channel")
    check_state_cap(3 * n)
    c = Circuit(3 * n)
    c = c.gate(gates.qfg(n, 1), *range(n, 2 * n))
    for i in range(n):
        c = c.gate(gates.CNOT, n + i, 2 * n + i)
    for i in range(n):
        c = _bsm(c, i, n + i, 2 * i, 2 * i + 1, 2 * n + i)
    if measure_bob:
        for i in range(n):
            c = c.measure(2 * n + i, 2 * n + i)
    return c


def hyper_teleport(psis, shots: int | None = None, seed: int = 0, *, backend=None) -> list[OutcomeDistribution]:
    """Teleport ``len(psis)`` qubits at once over pairs from ``parallel_pairs``.

    Returns one Bob marginal per channel: analytic when ``shots`` is None,
    otherwise sampled counts.
    """
    psis = [as_state(p) for p in psis]
    if any(p.size != 2 for p in psis):
        raise ValueError("every input must be a single-qubit state")
    n = len(psis)
    initial = kron_states(*psis, zeros_state(2 * n))
    if shots is None:
        branches = run_analytic(hyper_teleport_circuit(n, measure_bob=False), initial, backend=backend)
        return [qubit_marginal(branches, 2 * n + i) for i in range(n)]
    dist = run_sampled(hyper_teleport_circuit(n), initial, shots, seed, backend=backend)
    return [dist.marginal([2 * n + i]) for i in range(n)]


# secret-sharing sources


def qss_sources() -> tuple[Circuit, np.ndarray]:
    """Two GHZ_3 sources sharing one ``qfg(2, 1)``."""
    return parallel_ghz(3)


def independence_check(state, group_a: Sequence[int], group_b: Sequence[int]) -> dict:
    """How far the two qubit groups are from being uncorrelated."""
    a, b = sorted(group_a), sorted(group_b)
    if set(a) & set(b):
        raise ValueError("groups overlap")
    rho_a, rho_b = reduced(state, a), reduced(state, b)
    joint = reduced(state, a + b)
    if a[-1] > b[0]:
        raise ValueError("group_a must precede group_b")
    singles = [max_deviation(reduced(state, (q,)), np.eye(2) / 2) for q in a + b]
    cross = [max_deviation(reduced(state, (i, j)), MIXED_PAIR) for i in a for j in b]
    return {
        "product_deviation": max_deviation(joint, kron(rho_a, rho_b)),
        "single_deviation": max(singles),
        "cross_deviation": max(cross),
    }


# repeaters


@dataclass(frozen=True)
class SwapBranch:
    probability: float
    before: np.ndarray = field(repr=False)
    after: np.ndarray = field(repr=False)

    @property
    def fidelity(self) -> float:
        """Fidelity of the corrected (A, C) state with ``|beta_00>``."""
        return fidelity(self.after, BELL00)


@dataclass
class SwapReport:
    source: PairSource
    variant: str
    branches: dict[str, SwapBranch]

    def min_fidelity(self) -> float:
        return min(b.fidelity for b in self.branches.values())


def _swap_resource(source: PairSource, variant: str) -> np.ndarray:
    if variant == "a":
        return kron_states(pair_state(source), pair_state(source))
    if variant == "b":
        if source != PairSource.maximal():
            raise ValueError("variant b builds its links from qfg(2, 1) and supports only the maximal source")
        c = Circuit(4).gate(gates.qfg(2, 1), 0, 3).gate(gates.CNOT, 0, 1).gate(gates.CNOT, 3, 2)
        return _evolve(c)
    raise ValueError(f"unknown variant {variant!r}; use 'a' or 'b'")


def _ac_state(state: np.ndarray, m0: int, m1: int) -> np.ndarray:
    idx = [8 * a + 4 * m0 + 2 * m1 + c for a in (0, 1) for c in (0, 1)]
    return state[idx]


def entanglement_swap(source: PairSource | None = None, variant: str = "b") -> SwapReport:
    """Swap links (A, B1) and (B2, C) into one (A, C) pair.

    Variant ``a`` prepares each link from ``source``; variant ``b`` makes both
    maximal links with one ``qfg(2, 1)``.  Each branch reports the (A, C)
    state straight after the Bell measurement on (B1, B2) and after the X/Z
    correction on C.
    """
    source = source or PairSource.maximal()
    initial = _swap_resource(source, variant)
    c = Circuit(4).gate(gates.CNOT, 1, 2).gate(gates.H, 1).measure(1, 0).measure(2, 1)
    before = run_analytic(c, initial)
    after = run_analytic(c.c_if(gates.X, 3, slot=1).c_if(gates.Z, 3, slot=0), initial)
    out = {}
    for key in sorted(before):
        m0, m1 = int(key[0]), int(key[1])
        out[key] = SwapBranch(
            before[key].probability,
            _ac_state(before[key].state, m0, m1),
            _ac_state(after[key].state, m0, m1),
        )
    return SwapReport(source, variant, out)


MAX_HOPS = 3


def repeater_circuit(hops: int, *, measure_final: bool = True) -> Circuit:
    if not 1 <= hops <= MAX_HOPS:
        raise ValueError(f"hops must be between 1 and {MAX_HOPS}")
    c = Circuit(2 * hops + 1)
    for h in range(hops):
        c = _bsm(c, 2 * h, 2 * h + 1, 2 * h, 2 * h + 1, 2 * h + 2)
    if measure_final:
        c = c.measure(2 * hops, 2 * hops)
    return c


def repeater_chain(psi, hops: int = 1, source: PairSource | None = None,
                   shots: int | None = None, seed: int = 0, *, backend=None) -> OutcomeDistribution:
    """Teleport ``psi`` through ``hops`` consecutive links, each corrected
    before the next hop; returns the marginal of the final qubit."""
    source = source or PairSource.maximal()
    circuit = repeater_circuit(hops, measure_final=shots is not None)
    initial = kron_states(as_state(psi), *[pair_state(source)] * hops)
    if shots is None:
        return qubit_marginal(run_analytic(circuit, initial, backend=backend), 2 * hops)
    return run_sampled(circuit, initial, shots, seed, backend=backend).marginal([2 * hops])


def cbs_preserved(dist: OutcomeDistribution, bit: int, tol: float = DEFAULT_TOL) -> bool:
    return abs(dist.prob(str(bit)) - 1.0) <= tol

