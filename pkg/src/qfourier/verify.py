"""Self-check harness behind ``qfourier verify``.

Every check compares a computed object with an independent expectation and
records the largest absolute deviation.  Checks are grouped into the scopes
``gates``, ``states``, ``teleport`` and ``apps``.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import applications as apps
from . import circuit, gates, reference, states
from . import teleport as tp
from .numerics import (
    DEFAULT_TOL,
    PRINTED_TOL,
    basis_state,
    identity,
    matpow,
    max_deviation,
    outer,
)

EXACT = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.deviation)) and self.deviation <= self.tolerance

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _worst(pairs) -> float:
    return max((max_deviation(a, b) for a, b in pairs), default=0.0)


# Hadamard-rotation products: (target, coefficient, first, second) meaning
# target == coefficient * H_first @ H_second
HROT_IDENTITIES = [
    ("I", 1, 1, 1), ("I", 1, 3, 3), ("I", 1, 2, 4), ("I", 1, 4, 2),
    ("X", 1, 3, 2), ("X", 1, 2, 1), ("X", 1, 1, 4), ("X", 1, 4, 3),
    ("Y", 1j, 3, 1), ("Y", 1j, 2, 2), ("Y", -1j, 4, 4), ("Y", -1j, 1, 3),
    ("Z", -1, 2, 3), ("Z", 1, 1, 2), ("Z", -1, 3, 4), ("Z", 1, 4, 1),
]


def gate_checks() -> list[CheckResult]:
    s = "gates"
    out = [
        CheckResult("qfg(2,2) is CNOT", s, max_deviation(gates.qfg(2, 2), gates.CNOT), DEFAULT_TOL),
        CheckResult("qfg(1,1) is H", s, max_deviation(gates.qfg(1, 1), gates.H), DEFAULT_TOL),
        CheckResult("qfg(p,0) is identity, p<=4", s,
                    _worst((gates.qfg(p, 0), identity(p)) for p in range(1, 5)), DEFAULT_TOL),
        CheckResult("qft(2)^2 is the flipped CNOT", s,
                    max_deviation(matpow(gates.qft(2), 2), gates.CNOT_FLIPPED), DEFAULT_TOL),
        CheckResult("qft(p)^4 is identity, p<=5", s,
                    _worst((matpow(gates.qft(p), 4), identity(p)) for p in range(1, 6)), DEFAULT_TOL),
        CheckResult("sbeq(2) is SWAP", s, max_deviation(gates.sbeq(2), gates.SWAP), DEFAULT_TOL),
        CheckResult("sbeq(1) is identity", s, max_deviation(gates.sbeq(1), identity(1)), DEFAULT_TOL),
        CheckResult("qfg degree is periodic mod 4, d<=8, p<=4", s,
                    _worst((gates.qfg(p, d), gates.qfg(p, d % 4))
                           for p in range(1, 5) for d in range(9)), DEFAULT_TOL),
    ]
    h = gates.hadamard_rotation
    paulis = {"I": gates.I2, "X": gates.X, "Y": gates.Y, "Z": gates.Z}
    out.append(CheckResult(
        "Pauli gates from Hadamard-rotation products", s,
        _worst((paulis[t], c * h(a) @ h(b)) for t, c, a, b in HROT_IDENTITIES), DEFAULT_TOL))
    out.append(CheckResult(
        "Hadamard rotations from U(theta,phi,lambda)", s,
        _worst((h(q), gates.general_unitary(*gates.HROT_ANGLES[q])) for q in range(1, 5)), DEFAULT_TOL))
    r = gates.fourth_root_x()
    out.append(CheckResult("fourth root of X to the 4th is X", s, max_deviation(matpow(r, 4), gates.X), DEFAULT_TOL))
    out.append(CheckResult("fourth root of X matches printed u, v", s,
                           max_deviation(r, reference.FOURTH_ROOT_X), PRINTED_TOL))
    cbs = []
    for p in range(2, 6):
        f2 = gates.qfg(p, 2)
        tof = gates.toffoli(p)
        for bits in itertools.product((0, 1), repeat=p):
            v = basis_state(bits)
            cbs.append((f2 @ v, basis_state(gates.cbs_logic_qfg2(p, bits))))
            cbs.append((tof @ v, basis_state(gates.cbs_logic_toffoli(p, bits))))
    out.append(CheckResult("qfg(p,2) and Toffoli Boolean models on every basis state, p=2..5", s,
                           _worst(cbs), DEFAULT_TOL))
    return out


def state_checks() -> list[CheckResult]:
    s = "states"
    fourier = [(states.fourier_state_2q(d, ab), reference.FOURIER_STATES[d][ab])
               for d in range(4) for ab in reference.FOURIER_STATES[d]]
    gamma = [(states.gamma(ab), reference.GAMMA_STATES[ab]) for ab in reference.GAMMA_STATES]
    ghz = [
        (states.fourier_state(3, 2), reference.GHZ3),
        (states.fourier_state(4, 2), reference.GHZ4),
        (circuit.run_analytic(circuit.hadamard_first(3).extend(circuit.ghz3_swap_chain()))[""].state, reference.GHZ3),
        (circuit.run_analytic(circuit.hadamard_first(4).extend(circuit.ghz4_swap_chain()))[""].state, reference.GHZ4),
    ]
    conj = [(states.fourier_state_2q(3, ab), states.fourier_state_2q(1, ab).conj()) for ab in ((0, 0), (0, 1))]
    dens = []
    for (family, ab), rho in reference.DENSITY.items():
        vec = {"bell": states.bell, "gamma": states.gamma}.get(family)
        v = vec(ab) if vec else states.fourier_state_2q(1, ab)
        dens.append((outer(v), rho))
    wrong = 0
    for layout, members in reference.LAYOUT_MEMBERS.items():
        for family, degree, ab in members:
            if family == "bell":
                v = states.bell(ab)
            elif family == "gamma":
                v = states.gamma(ab)
            else:
                v = states.fourier_state_2q(degree, ab)
            wrong += states.classify(outer(v)).value != layout
    return [
        CheckResult("two-qubit Fourier states, degrees 0..3", s, _worst(fourier), PRINTED_TOL),
        CheckResult("gamma states", s, _worst(gamma), PRINTED_TOL),
        CheckResult("GHZ3 and GHZ4 via qfg and via explicit gate chains", s, _worst(ghz), EXACT),
        CheckResult("degree-3 states conjugate degree-1 states (a=0)", s, _worst(conj), EXACT),
        CheckResult("printed density matrices", s, _worst(dens), PRINTED_TOL),
        CheckResult("tile layouts of the sixteen listed states", s, float(wrong), 0.0),
    ]


def teleport_checks() -> list[CheckResult]:
    s = "teleport"
    rows = []
    for (kind, bit), p0 in reference.TELEPORT_ROWS["theoretical"].items():
        rep = tp.teleport_analytic(basis_state(str(bit)), tp.REPORT_SOURCES[kind])
        rows.append(abs(rep.bob_marginal.prob("0") - p0))
    nm = tp.teleport_analytic(basis_state("0"), tp.PairSource.nonmaximal()).branch_probabilities()
    nm_dev = max(abs(nm[k] - v) for k, v in reference.NONMAX_BRANCHES.items())
    deferred = []
    for src in (tp.PairSource.maximal(), tp.PairSource.nonmaximal(), tp.PairSource.rough(1), tp.PairSource.rough(3)):
        for psi in tp.psi_presets().values():
            full = tp.teleport_distribution(psi, src)
            simple = tp.teleport_distribution(psi, src, simplified=True)
            deferred.append(full.total_variation(simple))
    r1 = [tp.teleport_analytic(basis_state(b), tp.PairSource.rough(1)).joint().probabilities() for b in "01"]
    r3 = [tp.teleport_analytic(basis_state(b), tp.PairSource.rough(3)).joint().probabilities() for b in "01"]
    rough_dev = max(abs(a.get(k, 0) - b.get(k, 0)) for a, b in zip(r1, r3) for k in set(a) | set(b))
    hw = []
    for kind, expected in reference.HARDWARE_OUTCOME_ERRORS.items():
        got = tp.outcome_error(reference.TELEPORT_ROWS["theoretical"][(kind, 0)],
                               reference.TELEPORT_ROWS["hardware"][(kind, 0)])
        hw.append(abs(got - expected))
    return [
        CheckResult("theoretical teleportation rows for basis inputs", s, max(rows), DEFAULT_TOL),
        CheckResult("non-maximal source branch probabilities", s, nm_dev, 1e-4),
        CheckResult("rough degree-3 source matches degree-1", s, rough_dev, DEFAULT_TOL),
        CheckResult("deferred-measurement protocol matches mid-circuit protocol", s, max(deferred), DEFAULT_TOL),
        CheckResult("hardware outcome errors recomputed from stored rows", s, max(hw), EXACT),
    ]


def app_checks() -> list[CheckResult]:
    s = "apps"
    u, v = gates.fourth_root_x_entries()
    ghz_like = np.zeros(16, dtype=complex)
    ghz_like[[0, 15]] = u, v
    stretch = [(apps.stretch(k), states.ghz(k) if k > 1 else gates.H @ basis_state("0")) for k in range(1, 6)]
    stretch.append((apps.stretch(4, gates.fourth_root_x()), ghz_like))
    level = [
        (apps.level(p, pos, g), np.kron(basis_state("0" * pos), apps.stretch(p - pos, g)) if pos else apps.stretch(p, g))
        for p in range(1, 6) for pos in range(p) for g in apps.SEED_GATES.values()
    ]
    pp = apps.parallel_pairs_check(4)
    ghz3, ghz4 = apps.parallel_ghz_check(3), apps.parallel_ghz_check(4)
    _, qss = apps.qss_sources()
    ind = apps.independence_check(qss, (0, 1, 2), (3, 4, 5))
    swap = apps.entanglement_swap(tp.PairSource.maximal(), "b")
    chain = [abs(apps.repeater_chain(basis_state(b), h).prob(b) - 1.0) for h in (1, 2) for b in "01"]
    return [
        CheckResult("stretched states for H and fourth-root-of-X seeds", s, _worst(stretch), DEFAULT_TOL),
        CheckResult("entanglement levels equal padded stretched states", s, _worst(level), DEFAULT_TOL),
        CheckResult("parallel pairs: each pair is beta_00", s, pp["pair_deviation"], DEFAULT_TOL),
        CheckResult("parallel pairs: cross pairs maximally mixed", s, pp["cross_deviation"], DEFAULT_TOL),
        CheckResult("parallel GHZ: central pair maximally mixed", s,
                    max(ghz3["central_deviation"], ghz4["central_deviation"]), DEFAULT_TOL),
        CheckResult("secret-sharing sources are independent", s, max(ind.values()), DEFAULT_TOL),
        CheckResult("entanglement swap restores beta_00 on every branch", s,
                    1.0 - swap.min_fidelity(), DEFAULT_TOL),
        CheckResult("repeater chain preserves basis inputs, 1 and 2 hops", s, max(chain), DEFAULT_TOL),
    ]


SCOPES: dict[str, Callable[[], list[CheckResult]]] = {
    "gates": gate_checks,
    "states": state_checks,
    "teleport": teleport_checks,
    "apps": app_checks,
}


def run(scope: str = "all") -> list[CheckResult]:
    if scope == "all":
        return [r for fn in SCOPES.values() for r in fn()]
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    return SCOPES[scope]()

