"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest,
where the lines are repeated in the terminal summary.
"""
from __future__ import annotations

import cmath
import itertools
import math
import os
import sys
from dataclasses import dataclass

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from qfourier import applications as apps  # noqa: E402
from qfourier import backend, circuit, gates, reference, states  # noqa: E402
from qfourier import teleport as tp  # noqa: E402
from qfourier.numerics import (  # noqa: E402
    basis_state,
    is_density_matrix,
    is_unitary,
    matpow,
    max_deviation,
    outer,
    partial_trace,
)
from oracles import bit_reversal, cnot, dft, random_state  # noqa: E402

R2 = 1 / math.sqrt(2)
PRINTED = 5e-4


@dataclass
class Check:
    name: str
    value: float
    tol: float

    @property
    def ok(self) -> bool:
        return bool(np.isfinite(self.value)) and self.value <= self.tol


def dev(a, b) -> float:
    return max_deviation(a, b)


RESULTS: dict[int, tuple[str, bool, str]] = {}


def report(number: int, title: str, checks: list[Check]) -> list[Check]:
    failed = [c for c in checks if not c.ok]
    status = "PASS" if not failed else "FAIL"
    if failed:
        detail = "; ".join(f"{c.name}: {c.value:.3g} > {c.tol:g}" for c in failed)
    else:
        detail = f"{len(checks)} checks"
    line = f"criterion {number} [{status}] {title} ({detail})"
    RESULTS[number] = (line, not failed, title)
    print(line)
    return failed


# criterion 1


def criterion_1() -> list[Check]:
    c = []
    c.append(Check("qfg(2,2) = CNOT", dev(gates.qfg(2, 2), gates.CNOT), 1e-9))
    c.append(Check("qfg(1,1) = H", dev(gates.qfg(1, 1), gates.H), 1e-9))
    for p in range(1, 5):
        c.append(Check(f"qfg({p},0) = I", dev(gates.qfg(p, 0), np.eye(2**p)), 1e-9))
    c.append(Check("qft(2)^2 = flipped CNOT",
                   dev(matpow(gates.qft(2), 2), np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]])), 1e-9))
    for p in range(1, 6):
        c.append(Check(f"qft({p})^4 = I", dev(matpow(gates.qft(p), 4), np.eye(2**p)), 1e-9))
        c.append(Check(f"qft({p}) = loop DFT", dev(gates.qft(p), dft(p)), 1e-9))
    c.append(Check("sbeq(2) = SWAP", dev(gates.sbeq(2), [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]), 1e-9))
    c.append(Check("sbeq(1) = I", dev(gates.sbeq(1), np.eye(2)), 1e-9))
    for p in range(1, 5):
        for d in range(9):
            c.append(Check(f"qfg({p},{d}) periodic", dev(gates.qfg(p, d), gates.qfg(p, d % 4)), 1e-9))
        r = bit_reversal(p)
        c.append(Check(f"qfg({p},1) two-route", dev(gates.qfg(p, 1), r @ dft(p) @ r), 1e-9))
    h = {
        1: np.array([[1, 1], [1, -1]]) * R2,
        2: np.array([[1, -1], [1, 1]]) * R2,
        3: np.array([[-1, 1], [1, 1]]) * R2,
        4: np.array([[1, 1], [-1, 1]]) * R2,
    }
    for q in range(1, 5):
        c.append(Check(f"Hadamard rotation {q} matrix", dev(gates.hadamard_rotation(q), h[q]), 1e-12))
    I, X, Y, Z = np.eye(2), np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.diag([1, -1])
    products = [
        (I, h[1] @ h[1]), (I, h[3] @ h[3]), (I, h[2] @ h[4]), (I, h[4] @ h[2]),
        (X, h[3] @ h[2]), (X, h[2] @ h[1]), (X, h[1] @ h[4]), (X, h[4] @ h[3]),
        (Y, 1j * h[3] @ h[1]), (Y, 1j * h[2] @ h[2]), (Y, -1j * h[4] @ h[4]), (Y, -1j * h[1] @ h[3]),
        (Z, -h[2] @ h[3]), (Z, h[1] @ h[2]), (Z, -h[3] @ h[4]), (Z, h[4] @ h[1]),
    ]
    for i, (a, b) in enumerate(products):
        c.append(Check(f"Pauli from rotation product #{i}", dev(a, b), 1e-9))
    for q, (th, ph, la) in {1: (math.pi / 2, 0, math.pi), 2: (math.pi / 2, 0, 0),
                           3: (5 * math.pi / 2, math.pi, 0), 4: (math.pi / 2, math.pi, math.pi)}.items():
        c.append(Check(f"rotation {q} from U angles", dev(gates.general_unitary(th, ph, la), h[q]), 1e-9))
    r4 = gates.fourth_root_x()
    t = np.diag([1, cmath.exp(1j * math.pi / 4)])
    c.append(Check("fourth root of X ^4 = X", dev(matpow(r4, 4), X), 1e-9))
    c.append(Check("fourth root of X = H T H", dev(r4, h[1] @ t @ h[1]), 1e-9))
    c.append(Check("u, v vs printed", dev(r4, [[0.8536 + 0.3536j, 0.1464 - 0.3536j], [0.1464 - 0.3536j, 0.8536 + 0.3536j]]), PRINTED))
    return c


# criterion 2


def fourier_closed_form(d, a, b):
    p, m = (1 + 1j) / 2, (1 - 1j) / 2
    v = np.zeros(4, dtype=complex)
    if d in (0, 2):
        v[b] = R2
        v[(2 + b) if d == 0 else (3 - b)] = (-1) ** a * R2
        return v
    s = (-1) ** b
    q, w = (p, m) if d == 1 else (m, p)
    return R2 * (np.array([1, 0, s * q, s * w]) if a == 0 else np.array([0, 1, s * w, s * q]))


def criterion_2() -> list[Check]:
    c = []
    for d, a, b in itertools.product(range(4), (0, 1), (0, 1)):
        v = states.fourier_state_2q(d, (a, b))
        c.append(Check(f"Fourier d={d} ({a}{b}) closed form", dev(v, fourier_closed_form(d, a, b)), 1e-12))
        c.append(Check(f"Fourier d={d} ({a}{b}) printed", dev(v, reference.FOURIER_STATES[d][(a, b)]), PRINTED))
    u = (1 + cmath.exp(1j * math.pi / 4)) / 2
    v = (1 - cmath.exp(1j * math.pi / 4)) / 2
    gamma_closed = {(0, 0): [u, 0, 0, v], (1, 0): [v, 0, 0, u], (0, 1): [0, u, v, 0], (1, 1): [0, v, u, 0]}
    for ab, vec in gamma_closed.items():
        g = states.gamma(ab)
        c.append(Check(f"gamma {ab} closed form", dev(g, vec), 1e-12))
        c.append(Check(f"gamma {ab} printed", dev(g, reference.GAMMA_STATES[ab]), PRINTED))
    ghz3 = np.zeros(8)
    ghz3[[0, 7]] = R2
    ghz4 = np.zeros(16)
    ghz4[[0, 15]] = R2
    c.append(Check("GHZ3 via qfg", dev(states.fourier_state(3, 2), ghz3), 1e-12))
    c.append(Check("GHZ4 via qfg", dev(states.fourier_state(4, 2), ghz4), 1e-12))
    # explicit chains rebuilt here from Kronecker products of the listed layers
    I2, I4 = np.eye(2), np.eye(4)
    H, CN, SW = gates.H, gates.CNOT, gates.SWAP
    chain3 = [np.kron(H, I4), np.kron(CN, I2), np.kron(SW, I2), np.kron(I2, CN), np.kron(SW, I2)]
    s = basis_state("000")
    for m in chain3:
        s = m @ s
    c.append(Check("GHZ3 via gate chain", dev(s, ghz3), 1e-12))
    sw01, sw12 = np.kron(SW, I4), np.kron(np.kron(I2, SW), I2)
    chain4 = [np.kron(H, np.eye(8)), np.kron(CN, I4), sw01, np.kron(np.kron(I2, CN), I2), sw01,
              sw01, sw12, np.kron(I4, CN), sw12, sw01]
    s = basis_state("0000")
    for m in chain4:
        s = m @ s
    c.append(Check("GHZ4 via gate chain", dev(s, ghz4), 1e-12))
    c.append(Check("GHZ3 via package chain",
                   dev(circuit.run_analytic(circuit.hadamard_first(3).extend(circuit.ghz3_swap_chain()))[""].state, ghz3), 1e-12))
    c.append(Check("GHZ4 via package chain",
                   dev(circuit.run_analytic(circuit.hadamard_first(4).extend(circuit.ghz4_swap_chain()))[""].state, ghz4), 1e-12))
    for ab in ((0, 0), (0, 1)):
        c.append(Check(f"degree 3 = conj(degree 1) {ab}",
                       dev(states.fourier_state_2q(3, ab), states.fourier_state_2q(1, ab).conj()), 1e-12))
    return c


# criterion 3


def criterion_3() -> list[Check]:
    c = []
    vec = {"bell": states.bell, "gamma": states.gamma, "fourier1": lambda ab: states.fourier_state_2q(1, ab)}
    for (family, ab), rho in reference.DENSITY.items():
        c.append(Check(f"density {family} {ab}", dev(outer(vec[family](ab)), rho), PRINTED))
    for layout, members in reference.LAYOUT_MEMBERS.items():
        for family, degree, ab in members:
            v = states.bell(ab) if family == "bell" else states.gamma(ab) if family == "gamma" else states.fourier_state_2q(degree, ab)
            got = states.classify(outer(v)).value
            c.append(Check(f"layout {family} d={degree} {ab}", 0.0 if got == layout else 1.0, 0.0))
    return c


# criterion 4


def or_model(bits):
    out, seen = [], 0
    for b in bits:
        out.append(b ^ seen)
        seen |= b
    return out


def criterion_4() -> list[Check]:
    c = []
    cases = 0
    for p in range(2, 6):
        f2, tof = gates.qfg(p, 2), gates.toffoli(p)
        for bits in itertools.product((0, 1), repeat=p):
            cases += 1
            v = basis_state(bits)
            c.append(Check(f"qfg({p},2) {bits}", dev(f2 @ v, basis_state(or_model(bits))), 1e-9))
            tb = list(bits[:-1]) + [bits[-1] ^ int(all(bits[:-1]))]
            c.append(Check(f"toffoli({p}) {bits}", dev(tof @ v, basis_state(tb)), 0.0))
    c.append(Check("60 basis cases", abs(cases - 60), 0))
    fan3 = cnot(3, 0, 2) @ cnot(3, 0, 1)
    fan4 = cnot(4, 0, 3) @ cnot(4, 0, 2) @ cnot(4, 0, 1)
    c.append(Check("qfg(3,2)|010> = |011>", dev(gates.qfg(3, 2) @ basis_state("010"), basis_state("011")), 1e-12))
    c.append(Check("fan-out |010> = |010>", dev(fan3 @ basis_state("010"), basis_state("010")), 0.0))
    c.append(Check("qfg(4,2)|0100> = |0111>", dev(gates.qfg(4, 2) @ basis_state("0100"), basis_state("0111")), 1e-12))
    c.append(Check("fan-out |0100> = |0100>", dev(fan4 @ basis_state("0100"), basis_state("0100")), 0.0))
    return c


# criterion 5

SOURCES = {
    "maximal": tp.PairSource.maximal(),
    "nonmax": tp.PairSource.nonmaximal(),
    "rough1": tp.PairSource.rough(1),
    "rough3": tp.PairSource.rough(3),
}


def criterion_5() -> list[Check]:
    c = []
    for name in ("maximal", "nonmax"):
        for bit in "01":
            m = tp.teleport_analytic(basis_state(bit), SOURCES[name]).bob_marginal
            c.append(Check(f"{name} |{bit}> -> {bit}", abs(m.prob(bit) - 1.0), 1e-9))
    br = tp.teleport_analytic(basis_state("0"), SOURCES["nonmax"]).branch_probabilities()
    for k, v in {"00": 0.4268, "01": 0.0732, "10": 0.4268, "11": 0.0732}.items():
        c.append(Check(f"nonmax branch {k}", abs(br[k] - v), 1e-4))
    for name in ("rough1", "rough3"):
        j0 = tp.teleport_analytic(basis_state("0"), SOURCES[name]).joint()
        m0 = tp.teleport_analytic(basis_state("0"), SOURCES[name]).bob_marginal
        c.append(Check(f"{name} marginal 0.75", abs(m0.prob("0") - 0.75), 1e-9))
        c.append(Check(f"{name} marginal 0.25", abs(m0.prob("1") - 0.25), 1e-9))
        expect = {"000": 0.25, "001": 0, "010": 0.125, "011": 0.125, "100": 0.25, "101": 0, "110": 0.125, "111": 0.125}
        c.append(Check(f"{name} per-term structure", max(abs(j0.prob(k) - v) for k, v in expect.items()), 1e-9))
        m1 = tp.teleport_analytic(basis_state("1"), SOURCES[name]).bob_marginal
        c.append(Check(f"{name} |1> marginal", abs(m1.prob("1") - 0.75), 1e-9))
    for bit in "01":
        a = tp.teleport_analytic(basis_state(bit), SOURCES["rough1"]).joint()
        b = tp.teleport_analytic(basis_state(bit), SOURCES["rough3"]).joint()
        c.append(Check(f"rough3 = rough1 |{bit}>", a.total_variation(b), 1e-9))
    for name, src in SOURCES.items():
        for pname, psi in tp.psi_presets().items():
            full = tp.teleport_distribution(psi, src)
            simple = tp.teleport_distribution(psi, src, simplified=True)
            c.append(Check(f"full vs simplified {name} {pname}", full.total_variation(simple), 1e-9))
    return c


# criterion 6

SHOTS = 100_000


def criterion_6() -> list[Check]:
    c = []
    seed = 2024
    for i, (name, src) in enumerate(SOURCES.items()):
        for j, (pname, psi) in enumerate(tp.psi_presets().items()):
            for simplified in (False, True):
                s = seed + 100 * i + 10 * j + simplified
                analytic = tp.teleport_distribution(psi, src, simplified=simplified).probabilities()
                sampled = tp.teleport_sampled(psi, src, SHOTS, s, simplified).probabilities()
                keys = set(analytic) | set(sampled)
                err = max(abs(analytic.get(k, 0.0) - sampled.get(k, 0.0)) for k in keys)
                c.append(Check(f"{name} {pname} simplified={simplified}", err, 0.01))
    a = tp.teleport_sampled(basis_state("0"), SOURCES["rough1"], SHOTS, 7)
    b = tp.teleport_sampled(basis_state("0"), SOURCES["rough1"], SHOTS, 7)
    c.append(Check("same seed, same counts", 0.0 if a.entries == b.entries else 1.0, 0.0))
    for other in backend.available():
        d = tp.teleport_sampled(basis_state("0"), SOURCES["rough1"], SHOTS, 7, backend=other)
        c.append(Check(f"same counts on {other} backend", 0.0 if d.entries == a.entries else 1.0, 0.0))
    return c


# criterion 7


def criterion_7() -> list[Check]:
    c = []
    plus = np.array([R2, R2])
    bell = np.array([R2, 0, 0, R2])
    ghz3 = np.zeros(8)
    ghz3[[0, 7]] = R2
    ghz4 = np.zeros(16)
    ghz4[[0, 15]] = R2
    for k, expect in zip(range(1, 5), (plus, bell, ghz3, ghz4)):
        c.append(Check(f"stretch({k}, H)", dev(apps.stretch(k), expect), 1e-9))
    u = (1 + cmath.exp(1j * math.pi / 4)) / 2
    v = (1 - cmath.exp(1j * math.pi / 4)) / 2
    x4 = gates.fourth_root_x()
    for k in range(1, 5):
        e = np.zeros(2**k, dtype=complex)
        e[0], e[-1] = u, v
        c.append(Check(f"stretch({k}, fourth root X)", dev(apps.stretch(k, x4), e), 1e-9))
    for pos in range(4):
        e = np.zeros(2 ** (4 - pos), dtype=complex)
        e[0], e[-1] = u, v
        if pos == 3:
            e = x4 @ basis_state("0")
        c.append(Check(f"level(4, {pos}, fourth root X)", dev(apps.level(4, pos, x4), np.kron(basis_state("0" * pos), e) if pos else e), 1e-9))
    for pos, e in ((3, np.kron(basis_state("000"), plus)), (2, np.kron(basis_state("00"), bell)),
                   (1, np.kron(basis_state("0"), ghz3)), (0, ghz4)):
        c.append(Check(f"level(4, {pos}, H)", dev(apps.level(4, pos, gates.H), e), 1e-9))
    _, psi = apps.parallel_pairs(4)
    rho = outer(psi)
    dm_pair = 0.5 * np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]])
    for i in range(4):
        c.append(Check(f"pair (c{i}, t{i})", dev(partial_trace(rho, (i, 4 + i)), dm_pair), 1e-9))
        for j in range(4):
            if i != j:
                c.append(Check(f"cross (c{i}, t{j})", dev(partial_trace(rho, (i, 4 + j)), np.eye(4) / 4), 1e-9))
                if i < j:
                    c.append(Check(f"cross (c{i}, c{j})", dev(partial_trace(rho, (i, j)), np.eye(4) / 4), 1e-9))
                    c.append(Check(f"cross (t{i}, t{j})", dev(partial_trace(rho, (4 + i, 4 + j)), np.eye(4) / 4), 1e-9))
    for b in (3, 4):
        _, g = apps.parallel_ghz(b)
        c.append(Check(f"parallel GHZ{b} central pair", dev(partial_trace(outer(g), (b - 1, b)), np.eye(4) / 4), 1e-9))
    for variant in ("a", "b"):
        rep = apps.entanglement_swap(tp.PairSource.maximal(), variant)
        c.append(Check(f"swap variant {variant} branches", abs(len(rep.branches) - 4), 0))
        for k, br in rep.branches.items():
            fid = abs(np.vdot(bell, br.after)) ** 2
            c.append(Check(f"swap {variant} branch {k} fidelity", abs(1 - fid), 1e-9))
    for hops in (1, 2):
        for bit in "01":
            m = apps.repeater_chain(basis_state(bit), hops, tp.PairSource.maximal())
            c.append(Check(f"chain {hops} hops |{bit}>", abs(m.prob(bit) - 1.0), 1e-9))
    return c


# criterion 8

LIMA_P0 = {"maximal": 0.9101, "nonmaximal": 0.8808, "rough": 0.6972}
THEORY_P0 = {"maximal": 1.0, "nonmaximal": 1.0, "rough": 0.75}
OUTCOME_ERRORS = {"maximal": 0.0899, "nonmaximal": 0.1192, "rough": 0.0528}


def criterion_8() -> list[Check]:
    c = []
    for kind in OUTCOME_ERRORS:
        c.append(Check(f"fixture {kind}", abs(reference.TELEPORT_ROWS["hardware"][(kind, 0)] - LIMA_P0[kind]), 0.0))
        got = tp.outcome_error(THEORY_P0[kind], reference.TELEPORT_ROWS["hardware"][(kind, 0)])
        c.append(Check(f"outcome error {kind}", abs(got - OUTCOME_ERRORS[kind]), 1e-12))
        c.append(Check(f"stored outcome error {kind}", abs(reference.HARDWARE_OUTCOME_ERRORS[kind] - OUTCOME_ERRORS[kind]), 0.0))
    rows = tp.hardware_comparison_report(shots=2000, seed=1)
    for r in rows:
        key = (r["source"], int(r["psi"]))
        c.append(Check(f"report carries hardware row {key}",
                       abs(r["reference_hardware"]["0"] - reference.TELEPORT_ROWS["hardware"][key]), 0.0))
    return c


# criterion 9


def constructed_gates():
    out = []
    for p in range(1, 5):
        out += [(f"qft({p})", gates.qft(p)), (f"sbeq({p})", gates.sbeq(p))]
        out += [(f"qfg({p},{d})", gates.qfg(p, d)) for d in range(4)]
    out += [(f"toffoli({p})", gates.toffoli(p)) for p in range(2, 6)]
    out += [(f"hrot({q})", gates.hadamard_rotation(q)) for q in range(1, 5)]
    out += [("fourth root X", gates.fourth_root_x())]
    out += [(n, gates.standard_gate(n)) for n in gates.STANDARD]
    rng = np.random.default_rng(9)
    out += [(f"U3 #{i}", gates.general_unitary(*rng.uniform(-7, 7, 3))) for i in range(10)]
    return out


def all_circuits():
    yield "teleport", tp.protocol_circuit(), 3
    yield "teleport simplified", tp.protocol_circuit(simplified=True), 3
    for h in (1, 2, 3):
        yield f"chain {h}", apps.repeater_circuit(h), 2 * h + 1
    for n in (1, 2, 3):
        yield f"hyper {n}", apps.hyper_teleport_circuit(n, measure_bob=False), 3 * n
    for n in (1, 2, 3, 4):
        yield f"parallel pairs {n}", apps.parallel_pairs_circuit(n), 2 * n
    for b in (3, 4):
        yield f"parallel GHZ {b}", apps.parallel_ghz_circuit(b), 2 * b
    yield "GHZ3 chain", circuit.hadamard_first(3).extend(circuit.ghz3_swap_chain()), 3
    yield "GHZ4 chain", circuit.hadamard_first(4).extend(circuit.ghz4_swap_chain()), 4


def criterion_9() -> list[Check]:
    c = []
    for name, g in constructed_gates():
        c.append(Check(f"unitary {name}", 0.0 if is_unitary(g) else 1.0, 0.0))
    rng = np.random.default_rng(99)
    for name, circ, n in all_circuits():
        psi = random_state(rng, n)
        branches = circuit.run_analytic(circ, psi)
        total = sum(b.probability for b in branches.values())
        norm = max(abs(np.linalg.norm(b.state) - 1) for b in branches.values())
        c.append(Check(f"probabilities sum to 1: {name}", abs(total - 1), 1e-9))
        c.append(Check(f"branch norms: {name}", norm, 1e-9))
    dens = [outer(states.fourier_state_2q(d, ab)) for d in range(4) for ab in states.LABELS]
    dens += [outer(states.gamma(ab)) for ab in states.LABELS]
    _, big = apps.parallel_pairs(3)
    dens += [partial_trace(outer(big), keep) for keep in ((0,), (0, 3), (1, 2, 5))]
    for i, rho in enumerate(dens):
        c.append(Check(f"density invariants #{i}", 0.0 if is_density_matrix(rho) else 1.0, 0.0))
    srcs = list(SOURCES.values())
    for i in range(50):
        kind = srcs[int(rng.integers(len(srcs)))]
        a, b = (int(x) for x in rng.integers(0, 2, 2))
        src = tp.PairSource(kind.kind, states.StateLabel(a, b), kind.degree)
        psi = random_state(rng, 1)
        full = tp.teleport_distribution(psi, src)
        simple = tp.teleport_distribution(psi, src, simplified=True)
        c.append(Check(f"deferred measurement case {i} ({src.name})", full.total_variation(simple), 1e-9))
    return c


CRITERIA = {
    1: ("gate identities", criterion_1),
    2: ("state tables", criterion_2),
    3: ("density matrices and tile layouts", criterion_3),
    4: ("basis-state logic of qfg(p,2) and Toffoli", criterion_4),
    5: ("analytic teleportation", criterion_5),
    6: ("sampled teleportation at 1e5 shots", criterion_6),
    7: ("applications", criterion_7),
    8: ("hardware reference rows and outcome errors", criterion_8),
    9: ("property suites", criterion_9),
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    title, fn = CRITERIA[number]
    failed = report(number, title, fn())
    assert not failed, RESULTS[number][0]


def main() -> int:
    bad = 0
    for number, (title, fn) in sorted(CRITERIA.items()):
        bad += bool(report(number, title, fn()))
    print(f"{len(CRITERIA) - bad}/{len(CRITERIA)} criteria passed")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
