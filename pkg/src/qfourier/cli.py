"""``qfourier`` command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
The default output format can be set with ``QFOURIER_FORMAT``.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__, gates, states
from . import applications as apps
from . import teleport as tp
from . import verify as vf
from .document import BIT_ORDERS, OutputDocument, render_csv, render_pretty
from .numerics import QFourierError, outer

FORMATS = ("pretty", "json", "csv")
DEFAULT_SHOTS = 8192
DEFAULT_SEED = 0

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GATE_CHOICES = {
    "i": "I", "x": "X", "y": "Y", "z": "Z", "h": "H", "s": "S", "t": "T",
    "swap": "SWAP", "cnot": "CNOT", "qft": "QFT", "sbeq": "SBEQ", "qfg": "QFG",
    "x4": "FourthRootX", "hrot": "HRot", "u3": "U3", "toffoli": "Toffoli",
}


class UsageError(QFourierError):
    pass


def parse_psi(text: str) -> np.ndarray:
    """A preset (0, 1, +, -, R, L) or ``alpha,beta`` with Python complex literals."""
    presets = tp.psi_presets()
    if text in presets:
        return presets[text]
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"psi must be one of {sorted(presets)} or 'alpha,beta', got {text!r}")
    try:
        alpha, beta = (complex(p.strip().replace(" ", "")) for p in parts)
    except ValueError:
        raise UsageError(f"cannot parse amplitudes in {text!r}") from None
    return tp.make_psi(alpha, beta)


def _source(name: str, a: int = 0, b: int = 0) -> tp.PairSource:
    try:
        return tp.PairSource.parse(name, a, b)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _shots(args) -> int | None:
    if args.shots < 0:
        raise UsageError("shots must be >= 0")
    return args.shots or None


# commands


def cmd_gate(args) -> OutputDocument:
    spec = gates.GateSpec(GATE_CHOICES[args.name], p=args.p, d=args.d, quadrant=args.quadrant,
                          theta=args.theta, phi=args.phi, lam=args.lam)
    m = spec.matrix()
    params = {"name": args.name, "p": args.p, "d": args.d, "quadrant": args.quadrant,
              "theta": args.theta, "phi": args.phi, "lam": args.lam}
    return OutputDocument("gate", {k: v for k, v in params.items() if v is not None},
                          {"matrix": np.asarray(m, dtype=complex), "dimension": m.shape[0]})


def cmd_state(args) -> OutputDocument:
    label = (args.a, args.b)
    if args.family == "fourier":
        if args.p == 2:
            vec = states.fourier_state_2q(args.d, label)
        elif label != (0, 0):
            raise UsageError("labels other than a=b=0 are only defined for p=2")
        else:
            vec = states.fourier_state(args.p, args.d)
        params = {"family": "fourier", "p": args.p, "d": args.d, "a": args.a, "b": args.b}
    elif args.family == "bell":
        vec, params = states.bell(label), {"family": "bell", "a": args.a, "b": args.b}
    elif args.family == "gamma":
        vec, params = states.gamma(label), {"family": "gamma", "a": args.a, "b": args.b}
    else:
        vec, params = states.ghz(args.n), {"family": "ghz", "n": args.n}
    results = {"state": np.asarray(vec, dtype=complex)}
    if args.density or args.tiles:
        rho = outer(vec)
        if args.density:
            results["density"] = rho
        if args.tiles:
            if rho.shape != (4, 4):
                raise UsageError("tile patterns are defined for two-qubit states only")
            results["tiles"] = states.tile_pattern(rho).astype(int)
            results["layout"] = states.classify(rho).value
    return OutputDocument("state", params, results)


def cmd_teleport(args) -> OutputDocument:
    src = _source(args.source, args.a, args.b)
    psi = parse_psi(args.psi)
    shots = _shots(args)
    rep = tp.teleport_analytic(psi, src)
    results = {
        "branches": {k: v for k, v in rep.branch_probabilities().items()},
        "bob_states": {k: rep.bob_state(k) for k in rep.branches},
        "joint": rep.joint(),
        "bob_marginal": rep.bob_marginal,
    }
    decided = rep.bob_marginal
    if shots:
        hist = tp.teleport_sampled(psi, src, shots, args.seed, args.simplified)
        results["histogram"] = hist
        results["sampled_bob_marginal"] = hist.marginal([2])
        decided = hist.marginal([2])
    try:
        results["decision"] = {"bit": tp.post_process(decided), "tie": False}
    except tp.AmbiguousOutcomeError:
        results["decision"] = {"bit": None, "tie": True}
    params = {"source": src.name, "psi": args.psi, "simplified": args.simplified}
    return OutputDocument("teleport", params, results, seed=args.seed if shots else None, shots=shots)


def cmd_verify(args) -> OutputDocument:
    checks = vf.run(args.scope)
    failed = [c.name for c in checks if not c.passed]
    results = {
        "checks": [c.to_dict() for c in checks],
        "passed": not failed,
        "failed": failed,
    }
    return OutputDocument("verify", {"scope": args.scope}, results)


def _seed_matrix(name: str) -> np.ndarray:
    try:
        return apps.seed_gate(name)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_apps(args) -> OutputDocument:
    which = args.app
    seed, shots = None, None
    if which == "stretch":
        params = {"k": args.k, "gate": args.gate}
        results = {"state": apps.stretch(args.k, _seed_matrix(args.gate))}
    elif which == "level":
        params = {"p": args.p, "position": args.position, "gate": args.gate}
        results = {"state": apps.level(args.p, args.position, _seed_matrix(args.gate))}
    elif which == "parallel":
        params = {"n": args.n, "check": args.check}
        _, psi = apps.parallel_pairs(args.n)
        results = {"state": psi}
        if args.check:
            results["check"] = apps.parallel_pairs_check(args.n)
    elif which == "ghz":
        params = {"branch": args.branch}
        _, psi = apps.parallel_ghz(args.branch)
        results = {"state": psi, "check": apps.parallel_ghz_check(args.branch)}
    elif which == "qss":
        params = {}
        _, psi = apps.qss_sources()
        results = {"state": psi, "independence": apps.independence_check(psi, (0, 1, 2), (3, 4, 5))}
    elif which == "swap":
        src = _source(args.source)
        params = {"source": src.name, "variant": args.variant}
        rep = apps.entanglement_swap(src, args.variant)
        results = {
            "branches": {
                k: {"probability": b.probability, "before": b.before, "after": b.after, "fidelity": b.fidelity}
                for k, b in rep.branches.items()
            },
            "min_fidelity": rep.min_fidelity(),
        }
    elif which == "chain":
        src = _source(args.source)
        shots = _shots(args)
        seed = args.seed if shots else None
        params = {"hops": args.hops, "source": src.name, "psi": args.psi}
        results = {"final_marginal": apps.repeater_chain(parse_psi(args.psi), args.hops, src, shots, args.seed)}
    else:  # hyper
        shots = _shots(args)
        seed = args.seed if shots else None
        params = {"psis": args.psis}
        psis = [parse_psi(p) for p in args.psis]
        dists = apps.hyper_teleport(psis, shots, args.seed)
        results = {"channels": {str(i): d for i, d in enumerate(dists)}}
    return OutputDocument(f"apps {which}", params, results, seed=seed, shots=shots)


# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                   help="output format (default: $QFOURIER_FORMAT or pretty)")
    p.add_argument("--bit-order", choices=BIT_ORDERS, default=argparse.SUPPRESS,
                   help="bitstring display order: 'msb' lists q0 first, 'ibm' reverses")
    return p


def _sampling(p: argparse.ArgumentParser) -> None:
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS, help="0 for analytic results only")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="qfourier", parents=[common],
                                     description="Quantum Fourier gates, Fourier states and teleportation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gate", parents=[common], help="print a gate matrix")
    g.add_argument("name", choices=sorted(GATE_CHOICES))
    g.add_argument("-p", type=int, help="qubit count for qft/sbeq/qfg/toffoli")
    g.add_argument("-d", type=int, help="qfg degree")
    g.add_argument("--quadrant", type=int, choices=(1, 2, 3, 4), help="Hadamard rotation quadrant")
    g.add_argument("--theta", type=float)
    g.add_argument("--phi", type=float)
    g.add_argument("--lam", type=float)
    g.set_defaults(func=cmd_gate)

    s = sub.add_parser("state", parents=[common], help="print a state, its density matrix and tile layout")
    s.add_argument("family", choices=("fourier", "bell", "gamma", "ghz"))
    s.add_argument("-p", type=int, default=2)
    s.add_argument("-d", type=int, default=2)
    s.add_argument("-a", type=int, choices=(0, 1), default=0, help="phase bit")
    s.add_argument("-b", type=int, choices=(0, 1), default=0, help="parity bit")
    s.add_argument("-n", type=int, default=3, help="GHZ qubit count")
    s.add_argument("--density", action="store_true")
    s.add_argument("--tiles", action="store_true")
    s.set_defaults(func=cmd_state)

    t = sub.add_parser("teleport", parents=[common], help="teleport one qubit through a pair source")
    t.add_argument("--source", default="maximal", help="maximal, nonmax, rough1 or rough3")
    t.add_argument("--psi", default="0", help="0, 1, +, -, R, L or 'alpha,beta'")
    t.add_argument("-a", type=int, choices=(0, 1), default=0)
    t.add_argument("-b", type=int, choices=(0, 1), default=0)
    t.add_argument("--simplified", action="store_true", help="sample the deferred-measurement circuit")
    _sampling(t)
    t.set_defaults(func=cmd_teleport)

    v = sub.add_parser("verify", parents=[common], help="run the self-check suite")
    v.add_argument("scope", nargs="?", default="all", choices=("all", *vf.SCOPES))
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("apps", parents=[common], help="application constructions")
    asub = a.add_subparsers(dest="app", required=True)
    x = asub.add_parser("stretch", parents=[common])
    x.add_argument("-k", type=int, required=True)
    x.add_argument("--gate", default="h", help="h or x4")
    x = asub.add_parser("level", parents=[common])
    x.add_argument("-p", type=int, required=True)
    x.add_argument("--position", type=int, required=True)
    x.add_argument("--gate", default="h")
    x = asub.add_parser("parallel", parents=[common])
    x.add_argument("-n", type=int, required=True)
    x.add_argument("--check", action="store_true")
    x = asub.add_parser("ghz", parents=[common])
    x.add_argument("--branch", type=int, choices=(3, 4), default=3)
    asub.add_parser("qss", parents=[common])
    x = asub.add_parser("swap", parents=[common])
    x.add_argument("--source", default="maximal")
    x.add_argument("--variant", choices=("a", "b"), default="b")
    x = asub.add_parser("chain", parents=[common])
    x.add_argument("--hops", type=int, default=2)
    x.add_argument("--source", default="maximal")
    x.add_argument("--psi", default="0")
    _sampling(x)
    x.set_defaults(shots=0)
    x = asub.add_parser("hyper", parents=[common])
    x.add_argument("psis", nargs="+", help="one input per channel")
    _sampling(x)
    x.set_defaults(shots=0)
    a.set_defaults(func=cmd_apps)
    return parser


def render(doc: OutputDocument, fmt: str) -> str:
    if fmt == "json":
        return doc.to_json()
    if fmt == "csv":
        return render_csv(doc).rstrip("\n")
    return render_pretty(doc)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", None) or os.environ.get("QFOURIER_FORMAT", "pretty")
    if fmt not in FORMATS:
        print(f"qfourier: QFOURIER_FORMAT must be one of {FORMATS}, got {fmt!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        doc = args.func(args)
        doc.bit_order = getattr(args, "bit_order", "msb")
        text = render(doc, fmt)
    except (UsageError, ValueError) as e:
        print(f"qfourier: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    if doc.command == "verify" and not doc.results["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
