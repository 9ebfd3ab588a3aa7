"""Teleportation of one qubit through a maximal, non-maximal or rough pair.

Qubit 0 holds the input, qubits 1 and 2 the pair (qubit 2 is Bob's).
The Bell measurement reads qubit 0 into slot 0 and qubit 1 into slot 1;
Bob then applies X if slot 1 is set and Z if slot 0 is set.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gates, reference, states
from .circuit import (
    Branch,
    Circuit,
    OutcomeDistribution,
    apply_gate,
    qubit_marginal,
    run_analytic,
    run_sampled,
)
from .numerics import QFourierError, as_state, basis_state, kron_states

TIE_TOL = 1e-9

KINDS = ("maximal", "nonmaximal", "rough")


class AmbiguousOutcomeError(QFourierError):
    """Both Bob outcomes are equally likely; no bit can be decided."""


@dataclass(frozen=True)
class PairSource:
    kind: str
    label: states.StateLabel = states.StateLabel(0, 0)
    degree: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.kind == "rough" and self.degree not in (1, 3):
            raise ValueError("rough sources have degree 1 or 3")
        if self.kind != "rough" and self.degree is not None:
            raise ValueError(f"{self.kind} sources take no degree")

    @classmethod
    def maximal(cls, a: int = 0, b: int = 0) -> "PairSource":
        return cls("maximal", states.StateLabel(a, b))

    @classmethod
    def nonmaximal(cls, a: int = 0, b: int = 0) -> "PairSource":
        return cls("nonmaximal", states.StateLabel(a, b))

    @classmethod
    def rough(cls, degree: int = 1, a: int = 0, b: int = 0) -> "PairSource":
        return cls("rough", states.StateLabel(a, b), degree)

    @classmethod
    def parse(cls, name: str, a: int = 0, b: int = 0) -> "PairSource":
        """``maximal``, ``nonmax``/``nonmaximal``, ``rough1`` or ``rough3``."""
        key = name.strip().lower()
        if key in ("maximal", "bell"):
            return cls.maximal(a, b)
        if key in ("nonmax", "nonmaximal", "gamma"):
            return cls.nonmaximal(a, b)
        if key in ("rough1", "rough3"):
            return cls.rough(int(key[-1]), a, b)
        raise ValueError(f"unknown pair source {name!r}")

    @property
    def name(self) -> str:
        base = {"maximal": "maximal", "nonmaximal": "nonmax"}.get(self.kind, f"rough{self.degree}")
        return f"{base}[{self.label.bits}]"


def pair_state(source: PairSource) -> np.ndarray:
    if source.kind == "maximal":
        return states.bell(source.label)
    if source.kind == "nonmaximal":
        return states.gamma(source.label)
    return states.fourier_state_2q(source.degree, source.label)


def psi_presets() -> dict[str, np.ndarray]:
    zero, one = basis_state("0"), basis_state("1")
    sh = gates.S @ gates.H
    return {
        "0": zero,
        "1": one,
        "+": gates.H @ zero,
        "-": gates.H @ one,
        "R": sh @ zero,
        "L": sh @ one,
    }


def make_psi(alpha: complex, beta: complex) -> np.ndarray:
    """``alpha|0> + beta|1>``, normalized."""
    v = np.array([alpha, beta], dtype=complex)
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("alpha and beta cannot both be zero")
    return v / n


def protocol_circuit(*, simplified: bool = False, measure_bob: bool = True) -> Circuit:
    """Three-qubit protocol applied after the pair is in place.

    ``simplified`` replaces the mid-circuit measurements and classically
    controlled corrections by CNOT/CZ from the sender qubits, with all
    measurements at the end.
    """
    c = Circuit(3).gate(gates.CNOT, 0, 1).gate(gates.H, 0)
    if simplified:
        c = c.gate(gates.CNOT, 1, 2).gate(gates.CZ, 0, 2)
        c = c.measure(0, 0).measure(1, 1)
    else:
        c = c.measure(0, 0).measure(1, 1)
        c = c.c_if(gates.X, 2, slot=1).c_if(gates.Z, 2, slot=0)
    if measure_bob:
        c = c.measure(2, 2)
    return c


def timeline(psi, source: PairSource) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """States before the pair arrives, after it arrives, after CNOT, after H."""
    psi = as_state(psi)
    t0 = kron_states(psi, basis_state("00"))
    t1 = kron_states(psi, pair_state(source))
    t2 = apply_gate(t1, gates.CNOT, (0, 1))
    t3 = apply_gate(t2, gates.H, (0,))
    return t0, t1, t2, t3


@dataclass
class TeleportReport:
    source: PairSource
    psi: np.ndarray
    timeline: tuple[np.ndarray, ...] = field(repr=False)
    branches: dict[str, Branch] = field(repr=False)
    bob_marginal: OutcomeDistribution = None

    def bob_state(self, outcome: str) -> np.ndarray:
        """Bob's corrected qubit for Bell-measurement outcome ``outcome``."""
        m0, m1 = int(outcome[0]), int(outcome[1])
        st = self.branches[outcome].state
        base = 4 * m0 + 2 * m1
        return st[base : base + 2]

    def branch_probabilities(self) -> dict[str, float]:
        return {k: b.probability for k, b in sorted(self.branches.items())}

    def joint(self) -> OutcomeDistribution:
        """Distribution over ``m0 m1 bob`` keys."""
        out = {}
        for k, b in sorted(self.branches.items()):
            bob = self.bob_state(k)
            for bit in (0, 1):
                p = b.probability * float(abs(bob[bit]) ** 2)
                if p > 0:
                    out[k + str(bit)] = p
        return OutcomeDistribution(out)


def teleport_analytic(psi, source: PairSource) -> TeleportReport:
    t = timeline(psi, source)
    branches = run_analytic(protocol_circuit(measure_bob=False), t[1])
    return TeleportReport(source, as_state(psi), t, branches, qubit_marginal(branches, 2))


def teleport_distribution(psi, source: PairSource, *, simplified: bool = False) -> OutcomeDistribution:
    """Analytic distribution over ``q0 q1 q2`` for the full or simplified protocol."""
    t1 = kron_states(as_state(psi), pair_state(source))
    branches = run_analytic(protocol_circuit(simplified=simplified), t1)
    return OutcomeDistribution({k: b.probability for k, b in sorted(branches.items())})


def teleport_sampled(psi, source: PairSource, shots: int = 8192, seed: int = 0,
                     simplified: bool = False, *, backend=None) -> OutcomeDistribution:
    t1 = kron_states(as_state(psi), pair_state(source))
    return run_sampled(protocol_circuit(simplified=simplified), t1, shots, seed, backend=backend)


def post_process(bob_marginal: OutcomeDistribution) -> int:
    """Most likely Bob bit; ties raise AmbiguousOutcomeError."""
    e = bob_marginal.entries
    if set(e) - {"0", "1"}:
        raise ValueError("expected a distribution over the single bits 0 and 1")
    p0, p1 = e.get("0", 0), e.get("1", 0)
    if bob_marginal.mode == "analytic":
        if abs(p0 - p1) < TIE_TOL:
            raise AmbiguousOutcomeError(f"tie: P(0)={p0}, P(1)={p1}")
    elif p0 == p1:
        raise AmbiguousOutcomeError(f"tie: {p0} counts each")
    return 0 if p0 > p1 else 1


def outcome_error(theoretical: float, observed: float) -> float:
    for x in (theoretical, observed):
        if not 0.0 <= x <= 1.0:
            raise ValueError(f"probability {x} outside [0, 1]")
    return abs(theoretical - observed)


REPORT_SOURCES = {
    "maximal": PairSource.maximal(),
    "nonmaximal": PairSource.nonmaximal(),
    "rough": PairSource.rough(1),
}


def hardware_comparison_report(shots: int = 8192, seed: int = 0, *, backend=None) -> list[dict]:
    """Theoretical, sampled and published outcome probabilities for CBS inputs.

    One row per (source kind, input bit).  ``delta_*`` columns are absolute
    differences in P(Bob reads 0) from the theoretical value.
    """
    rows = []
    for i, (kind, source) in enumerate(REPORT_SOURCES.items()):
        for bit in (0, 1):
            psi = basis_state(str(bit))
            theory = teleport_analytic(psi, source).bob_marginal
            sampled = teleport_sampled(psi, source, shots, seed + 2 * i + bit, backend=backend)
            bob = sampled.marginal([2]).probabilities()
            key = (kind, bit)
            t0 = theory.prob("0")
            row = {
                "source": kind,
                "psi": str(bit),
                "theoretical": {"0": t0, "1": theory.prob("1")},
                "sampled": {"0": bob.get("0", 0.0), "1": bob.get("1", 0.0)},
                "reference_simulator": {
                    "0": reference.TELEPORT_ROWS["simulator"][key],
                    "1": reference.TELEPORT_ROWS_P1["simulator"][key],
                },
                "reference_hardware": {
                    "0": reference.TELEPORT_ROWS["hardware"][key],
                    "1": reference.TELEPORT_ROWS_P1["hardware"][key],
                },
                "shots": shots,
                "seed": seed + 2 * i + bit,
            }
            row["delta_sampled"] = outcome_error(t0, row["sampled"]["0"])
            row["delta_reference_simulator"] = outcome_error(t0, row["reference_simulator"]["0"])
            row["delta_reference_hardware"] = outcome_error(t0, row["reference_hardware"]["0"])
            rows.append(row)
    return rows


def nonmax_expected_branches() -> dict[str, float]:
    """|u|^2/2 and |v|^2/2 for the non-maximal source with input |0>."""
    u, v = gates.fourth_root_x_entries()
    a, b = abs(u) ** 2 / 2, abs(v) ** 2 / 2
    return {"00": a, "01": b, "10": a, "11": b}

