"""Published closed forms and measured values, stored as literal data.

Nothing here is computed from the simulator: these are the values the
simulator is checked against.  Hardware rows are read-only reference
data; they are not a simulation target.
"""
from __future__ import annotations

import math

import numpy as np

_R = 1 / math.sqrt(2)
_P = (1 + 1j) / 2
_M = (1 - 1j) / 2

# two-qubit Fourier states by degree and (phase bit, parity bit)
FOURIER_STATES = {
    0: {
        (0, 0): np.array([1, 0, 1, 0]) * _R,
        (1, 0): np.array([1, 0, -1, 0]) * _R,
        (0, 1): np.array([0, 1, 0, 1]) * _R,
        (1, 1): np.array([0, 1, 0, -1]) * _R,
    },
    1: {
        (0, 0): np.array([1, 0, _P, _M]) * _R,
        (1, 0): np.array([0, 1, _M, _P]) * _R,
        (0, 1): np.array([1, 0, -_P, -_M]) * _R,
        (1, 1): np.array([0, 1, -_M, -_P]) * _R,
    },
    2: {
        (0, 0): np.array([1, 0, 0, 1]) * _R,
        (1, 0): np.array([1, 0, 0, -1]) * _R,
        (0, 1): np.array([0, 1, 1, 0]) * _R,
        (1, 1): np.array([0, 1, -1, 0]) * _R,
    },
    3: {
        (0, 0): np.array([1, 0, _M, _P]) * _R,
        (1, 0): np.array([0, 1, _P, _M]) * _R,
        (0, 1): np.array([1, 0, -_M, -_P]) * _R,
        (1, 1): np.array([0, 1, -_P, -_M]) * _R,
    },
}

# fourth-root-of-X entries as printed (four decimals)
U = 0.8536 + 0.3536j
V = 0.1464 - 0.3536j

FOURTH_ROOT_X = np.array([[U, V], [V, U]])

GAMMA_STATES = {
    (0, 0): np.array([U, 0, 0, V]),
    (1, 0): np.array([V, 0, 0, U]),
    (0, 1): np.array([0, U, V, 0]),
    (1, 1): np.array([0, V, U, 0]),
}

GHZ3 = np.array([1, 0, 0, 0, 0, 0, 0, 1]) * _R
GHZ4 = np.zeros(16)
GHZ4[[0, 15]] = _R

# density matrices as printed; keys name the state they belong to
DENSITY = {
    ("bell", (0, 0)): 0.5 * np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]]),
    ("bell", (0, 1)): 0.5 * np.array([[0, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 0]]),
    ("gamma", (0, 0)): np.array(
        [[0.8536, 0, 0, 0.3536j], [0, 0, 0, 0], [0, 0, 0, 0], [-0.3536j, 0, 0, 0.1464]]
    ),
    ("gamma", (0, 1)): np.array(
        [[0, 0, 0, 0], [0, 0.8536, 0.3536j, 0], [0, -0.3536j, 0.1464, 0], [0, 0, 0, 0]]
    ),
    ("fourier1", (0, 0)): np.array(
        [
            [0.5, 0, 0.25 - 0.25j, 0.25 + 0.25j],
            [0, 0, 0, 0],
            [0.25 + 0.25j, 0, 0.25, 0.25j],
            [0.25 - 0.25j, 0, -0.25j, 0.25],
        ]
    ),
    ("fourier1", (0, 1)): np.array(
        [
            [0.5, 0, -0.25 + 0.25j, -0.25 - 0.25j],
            [0, 0, 0, 0],
            [-0.25 - 0.25j, 0, 0.25, 0.25j],
            [-0.25 + 0.25j, 0, -0.25j, 0.25],
        ]
    ),
    ("fourier1", (1, 0)): np.array(
        [
            [0, 0, 0, 0],
            [0, 0.5, 0.25 + 0.25j, 0.25 - 0.25j],
            [0, 0.25 - 0.25j, 0.25, -0.25j],
            [0, 0.25 + 0.25j, 0.25j, 0.25],
        ]
    ),
}

# which states share each nonzero-tile layout: (family, degree, label)
LAYOUT_MEMBERS = {
    "CornerEntangled": [("bell", 2, (0, 0)), ("bell", 2, (1, 0)), ("gamma", None, (0, 0)), ("gamma", None, (1, 0))],
    "CenterEntangled": [("bell", 2, (0, 1)), ("bell", 2, (1, 1)), ("gamma", None, (0, 1)), ("gamma", None, (1, 1))],
    "RoughA": [("fourier", 1, (0, 0)), ("fourier", 1, (0, 1)), ("fourier", 3, (0, 0)), ("fourier", 3, (0, 1))],
    "RoughB": [("fourier", 1, (1, 0)), ("fourier", 1, (1, 1)), ("fourier", 3, (1, 0)), ("fourier", 3, (1, 1))],
}

# non-maximal source, |psi> = |0>: probability of each Bell-measurement outcome
NONMAX_BRANCHES = {"00": 0.4268, "01": 0.0732, "10": 0.4268, "11": 0.0732}

# P(Bob reads 0) for CBS inputs; keys (source kind, input bit)
TELEPORT_ROWS = {
    "theoretical": {
        ("maximal", 0): 1.0, ("maximal", 1): 0.0,
        ("nonmaximal", 0): 1.0, ("nonmaximal", 1): 0.0,
        ("rough", 0): 0.75, ("rough", 1): 0.25,
    },
    "simulator": {
        ("maximal", 0): 1.0, ("maximal", 1): 0.0,
        ("nonmaximal", 0): 1.0, ("nonmaximal", 1): 0.0,
        ("rough", 0): 0.7392, ("rough", 1): 0.2588,
    },
    "hardware": {
        ("maximal", 0): 0.9101, ("maximal", 1): 0.0986,
        ("nonmaximal", 0): 0.8808, ("nonmaximal", 1): 0.0976,
        ("rough", 0): 0.6972, ("rough", 1): 0.3184,
    },
}

# P(Bob reads 1), listed separately because the published rows do not
# always sum to one after rounding
TELEPORT_ROWS_P1 = {
    "theoretical": {
        ("maximal", 0): 0.0, ("maximal", 1): 1.0,
        ("nonmaximal", 0): 0.0, ("nonmaximal", 1): 1.0,
        ("rough", 0): 0.25, ("rough", 1): 0.75,
    },
    "simulator": {
        ("maximal", 0): 0.0, ("maximal", 1): 1.0,
        ("nonmaximal", 0): 0.0, ("nonmaximal", 1): 1.0,
        ("rough", 0): 0.2608, ("rough", 1): 0.7412,
    },
    "hardware": {
        ("maximal", 0): 0.0899, ("maximal", 1): 0.9014,
        ("nonmaximal", 0): 0.1192, ("nonmaximal", 1): 0.9024,
        ("rough", 0): 0.3028, ("rough", 1): 0.6816,
    },
}

HARDWARE_DEVICE = "ibmq_lima (5-qubit)"

# |P0 theoretical - P0 hardware| for |psi> = |0>
HARDWARE_OUTCOME_ERRORS = {"maximal": 0.0899, "nonmaximal": 0.1192, "rough": 0.0528}
