"""Circuit model and execution.

A :class:`Circuit` is an immutable sequence of instructions on ``num_qubits``
qubits and ``num_slots`` classical bits:

* :class:`GateOp` -- unitary on an ordered list of target qubits,
* :class:`Measure` -- computational-basis measurement written to a slot,
* :class:`ControlledGate` -- unitary applied only when a slot holds 1.

Execution is either analytic (every measurement branch enumerated, Born
weights multiplied) or sampled (one pure-state trajectory per shot).

Bitstring keys list classical slots in slot order.  Qubit 0 is the most
significant bit of basis indices everywhere; ``bit_order="ibm"`` only
changes how keys are displayed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

import numpy as np

from . import backend as _backend
from . import gates
from .numerics import (
    ShapeError,
    as_state,
    check_matrix_cap,
    check_state_cap,
    identity,
    kron_all,
    num_qubits_of,
)

PRUNE = 1e-15


@dataclass(frozen=True)
class GateOp:
    matrix: np.ndarray
    targets: tuple[int, ...]
    label: str = ""


@dataclass(frozen=True)
class Measure:
    qubit: int
    slot: int


@dataclass(frozen=True)
class ControlledGate:
    matrix: np.ndarray
    targets: tuple[int, ...]
    slot: int
    label: str = ""


Instruction = Union[GateOp, Measure, ControlledGate]


def _check_targets(targets: Sequence[int], num_qubits: int, matrix: np.ndarray) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if len(set(targets)) != len(targets):
        raise ValueError(f"duplicate targets {targets}")
    if any(t < 0 or t >= num_qubits for t in targets):
        raise ValueError(f"targets {targets} out of range for {num_qubits} qubits")
    if matrix.shape != (2 ** len(targets),) * 2:
        raise ShapeError(f"gate of shape {matrix.shape} does not act on {len(targets)} qubits")
    return targets


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    instructions: tuple[Instruction, ...] = ()
    num_slots: int = 0

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        check_state_cap(self.num_qubits)

    def _with(self, inst: Instruction, num_slots: int | None = None) -> "Circuit":
        return Circuit(
            self.num_qubits,
            self.instructions + (inst,),
            self.num_slots if num_slots is None else num_slots,
        )

    def gate(self, matrix, *targets: int, label: str = "") -> "Circuit":
        m = np.asarray(matrix, dtype=complex)
        return self._with(GateOp(m, _check_targets(targets, self.num_qubits, m), label))

    def measure(self, qubit: int, slot: int | None = None) -> "Circuit":
        if not 0 <= qubit < self.num_qubits:
            raise ValueError(f"qubit {qubit} out of range")
        slot = self.num_slots if slot is None else slot
        if slot in self.written_slots():
            raise ValueError(f"classical slot {slot} is already written")
        return self._with(Measure(qubit, slot), max(self.num_slots, slot + 1))

    def c_if(self, matrix, *targets: int, slot: int, label: str = "") -> "Circuit":
        if slot not in self.written_slots():
            raise ValueError(f"classical slot {slot} is read before any measurement writes it")
        m = np.asarray(matrix, dtype=complex)
        return self._with(ControlledGate(m, _check_targets(targets, self.num_qubits, m), slot, label))

    def extend(self, other: "Circuit") -> "Circuit":
        if other.num_qubits != self.num_qubits:
            raise ValueError("qubit counts differ")
        out = self
        for inst in other.instructions:
            if isinstance(inst, GateOp):
                out = out.gate(inst.matrix, *inst.targets, label=inst.label)
            elif isinstance(inst, Measure):
                out = out.measure(inst.qubit, inst.slot)
            else:
                out = out.c_if(inst.matrix, *inst.targets, slot=inst.slot, label=inst.label)
        return out

    def written_slots(self) -> set[int]:
        return {i.slot for i in self.instructions if isinstance(i, Measure)}

    @property
    def has_measurements(self) -> bool:
        return any(not isinstance(i, GateOp) for i in self.instructions)

    @property
    def num_measurements(self) -> int:
        return sum(isinstance(i, Measure) for i in self.instructions)


@dataclass
class OutcomeDistribution:
    """Bitstring -> probability (``mode="analytic"``) or count (``mode="sampled"``)."""

    entries: dict[str, float]
    mode: str = "analytic"
    shots: int | None = None

    def __post_init__(self):
        if self.mode not in ("analytic", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "sampled" and self.shots is None:
            self.shots = int(sum(self.entries.values()))

    def probabilities(self) -> dict[str, float]:
        if self.mode == "analytic":
            return dict(self.entries)
        return {k: c / self.shots for k, c in self.entries.items()}

    def prob(self, key: str) -> float:
        return self.probabilities().get(key, 0.0)

    def marginal(self, positions: Sequence[int]) -> "OutcomeDistribution":
        """Distribution over the bits at ``positions`` of each key."""
        out: dict[str, float] = {}
        for k, v in self.entries.items():
            sub = "".join(k[i] for i in positions)
            out[sub] = out.get(sub, 0) + v
        return OutcomeDistribution(dict(sorted(out.items())), self.mode, self.shots)

    def display(self, bit_order: str = "msb") -> dict[str, float]:
        if bit_order == "msb":
            return dict(sorted(self.entries.items()))
        if bit_order == "ibm":
            return dict(sorted((k[::-1], v) for k, v in self.entries.items()))
        raise ValueError(f"unknown bit order {bit_order!r}")

    def total_variation(self, other: "OutcomeDistribution") -> float:
        p, q = self.probabilities(), other.probabilities()
        keys = set(p) | set(q)
        return 0.5 * sum(abs(p.get(k, 0.0) - q.get(k, 0.0)) for k in keys)

    def to_dict(self) -> dict:
        return {"entries": dict(sorted(self.entries.items())), "mode": self.mode, "shots": self.shots}


def apply_gate(state, gate, targets: Sequence[int], *, backend=None) -> np.ndarray:
    """Apply ``gate`` to the listed qubits; the first target is the gate's MSB."""
    s = np.asarray(state, dtype=complex).reshape(-1)
    p = num_qubits_of(s.size)
    g = np.asarray(gate, dtype=complex)
    targets = _check_targets(targets, p, g)
    return _backend.get(backend).apply_gate(s, g, targets, p)


def embed(gate, targets: Sequence[int], num_qubits: int) -> np.ndarray:
    """Full ``2**p`` matrix of ``gate`` acting on ``targets``."""
    check_matrix_cap(num_qubits)
    g = np.asarray(gate, dtype=complex)
    targets = _check_targets(targets, num_qubits, g)
    be = _backend.get()
    cols = [be.apply_gate(col, g, targets, num_qubits) for col in identity(num_qubits).T]
    return np.array(cols).T


def to_unitary(circuit: Circuit) -> np.ndarray:
    if circuit.has_measurements:
        raise ValueError("circuit contains measurements or classical control")
    check_matrix_cap(circuit.num_qubits)
    u = identity(circuit.num_qubits)
    be = _backend.get()
    for inst in circuit.instructions:
        u = np.array([be.apply_gate(c, inst.matrix, inst.targets, circuit.num_qubits) for c in u.T]).T
    return u


def _bit_mask(qubit: int, num_qubits: int) -> np.ndarray:
    return (np.arange(2**num_qubits) >> (num_qubits - 1 - qubit)) & 1


def _project(state: np.ndarray, qubit: int, num_qubits: int):
    """Yield (outcome, probability, renormalized collapsed state)."""
    bits = _bit_mask(qubit, num_qubits)
    probs = np.abs(state) ** 2
    for outcome in (0, 1):
        keep = bits == outcome
        p = float(probs[keep].sum())
        if p < PRUNE:
            continue
        collapsed = np.where(keep, state, 0) / np.sqrt(p)
        yield outcome, p, collapsed


def measure_qubits(state, qubits: Sequence[int]) -> list[tuple[str, float, np.ndarray]]:
    """All outcomes of measuring ``qubits`` (in listed order) with their
    probabilities and collapsed states."""
    s = as_state(state)
    p = num_qubits_of(s.size)
    if len(set(qubits)) != len(qubits) or any(q < 0 or q >= p for q in qubits):
        raise ValueError(f"invalid qubit list {qubits}")
    branches = [("", 1.0, s)]
    for q in qubits:
        branches = [
            (key + str(o), prob * po, st)
            for key, prob, cur in branches
            for o, po, st in _project(cur, q, p)
        ]
    return branches


@dataclass(frozen=True)
class Branch:
    probability: float
    state: np.ndarray = field(repr=False)


def run_analytic(circuit: Circuit, initial=None, *, backend=None) -> dict[str, Branch]:
    """Enumerate measurement branches.

    Keys are classical records (slot order, unwritten slots read ``0``).
    Branches with probability below 1e-15 are pruned.
    """
    p = circuit.num_qubits
    s = as_state(_initial(initial, p))
    be = _backend.get(backend)
    branches: list[tuple[list[int], float, np.ndarray]] = [([0] * circuit.num_slots, 1.0, s)]
    for inst in circuit.instructions:
        if isinstance(inst, GateOp):
            branches = [(r, pr, be.apply_gate(st, inst.matrix, inst.targets, p)) for r, pr, st in branches]
        elif isinstance(inst, ControlledGate):
            branches = [
                (r, pr, be.apply_gate(st, inst.matrix, inst.targets, p) if r[inst.slot] else st)
                for r, pr, st in branches
            ]
        else:
            nxt = []
            for r, pr, st in branches:
                for o, po, collapsed in _project(st, inst.qubit, p):
                    if pr * po < PRUNE:
                        continue
                    rec = list(r)
                    rec[inst.slot] = o
                    nxt.append((rec, pr * po, collapsed))
            branches = nxt
    return {"".join(map(str, r)): Branch(pr, st) for r, pr, st in branches}


def _initial(initial, num_qubits: int) -> np.ndarray:
    if initial is None:
        v = np.zeros(2**num_qubits, dtype=complex)
        v[0] = 1
        return v
    v = np.asarray(initial, dtype=complex).reshape(-1)
    if v.size != 2**num_qubits:
        raise ShapeError(f"initial state has {v.size} amplitudes, circuit needs {2**num_qubits}")
    return v


def final_distribution(circuit: Circuit, initial=None) -> OutcomeDistribution:
    """Analytic distribution over classical records."""
    return OutcomeDistribution({k: b.probability for k, b in sorted(run_analytic(circuit, initial).items())})


def qubit_marginal(branches: Mapping[str, Branch], qubit: int) -> OutcomeDistribution:
    """Probability of reading 0/1 on ``qubit`` if measured after every branch."""
    p0 = p1 = 0.0
    for b in branches.values():
        n = num_qubits_of(b.state.size)
        bits = _bit_mask(qubit, n)
        probs = np.abs(b.state) ** 2
        p1 += b.probability * float(probs[bits == 1].sum())
        p0 += b.probability * float(probs[bits == 0].sum())
    return OutcomeDistribution({"0": p0, "1": p1})


def _program(circuit: Circuit):
    prog = []
    for inst in circuit.instructions:
        if isinstance(inst, GateOp):
            prog.append(("gate", inst.matrix, inst.targets, None))
        elif isinstance(inst, Measure):
            prog.append(("measure", None, (inst.qubit,), inst.slot))
        else:
            prog.append(("cgate", inst.matrix, inst.targets, inst.slot))
    return prog


def make_rng(seed: int) -> np.random.Generator:
    """The package RNG: numpy PCG64 seeded through SeedSequence."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed) & (2**64 - 1))))


def sample_records(circuit: Circuit, initial, shots: int, seed: int, *, backend=None) -> np.ndarray:
    """Per-shot classical records, shape ``(shots, num_slots)``.

    Shot ``i`` consumes row ``i`` of a ``(shots, num_measurements)`` block of
    uniforms drawn from ``make_rng(seed)``, so results do not depend on the
    backend or on how shots are scheduled.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    p = circuit.num_qubits
    s = as_state(_initial(initial, p))
    uniforms = make_rng(seed).random((shots, max(circuit.num_measurements, 1)))
    return _backend.get(backend).run_trajectories(s, _program(circuit), p, uniforms, circuit.num_slots)


def run_sampled(circuit: Circuit, initial=None, shots: int = 8192, seed: int = 0, *, backend=None) -> OutcomeDistribution:
    if circuit.num_slots == 0:
        raise ValueError("circuit has no measurements to sample")
    records = sample_records(circuit, initial, shots, seed, backend=backend)
    m = circuit.num_slots
    codes = records.astype(np.int64) @ (1 << np.arange(m - 1, -1, -1, dtype=np.int64))
    counts = np.bincount(codes, minlength=2**m)
    entries = {format(k, f"0{m}b"): int(c) for k, c in enumerate(counts) if c}
    return OutcomeDistribution(dict(sorted(entries.items())), "sampled", shots)


# reference gate chains producing GHZ states


def cnot_fanout(num_qubits: int) -> Circuit:
    """CNOTs from qubit 0 onto qubits 1, 2, ... (nested-CNOT GHZ chain)."""
    c = Circuit(num_qubits)
    for t in range(1, num_qubits):
        c = c.gate(gates.CNOT, 0, t)
    return c


def _full(*factors) -> np.ndarray:
    return kron_all(*factors)


def ghz3_swap_chain() -> Circuit:
    """3-qubit chain of SWAP/CNOT layers written as full-width Kronecker products."""
    I2 = np.eye(2)
    layers = [
        _full(gates.CNOT, I2),
        _full(gates.SWAP, I2),
        _full(I2, gates.CNOT),
        _full(gates.SWAP, I2),
    ]
    c = Circuit(3)
    for m in layers:
        c = c.gate(m, 0, 1, 2)
    return c


def ghz4_swap_chain() -> Circuit:
    """4-qubit analogue of :func:`ghz3_swap_chain`."""
    I2, I4 = np.eye(2), np.eye(4)
    sw01 = _full(gates.SWAP, I4)
    sw12 = _full(I2, gates.SWAP, I2)
    layers = [
        _full(gates.CNOT, I4),
        sw01,
        _full(I2, gates.CNOT, I2),
        sw01,
        sw01,
        sw12,
        _full(I4, gates.CNOT),
        sw12,
        sw01,
    ]
    c = Circuit(4)
    for m in layers:
        c = c.gate(m, 0, 1, 2, 3)
    return c


def hadamard_first(num_qubits: int) -> Circuit:
    return Circuit(num_qubits).gate(gates.H, 0)
