import itertools
import math

import numpy as np
import pytest

from qfourier import circuit, gates, reference, states
from qfourier.numerics import PRINTED_TOL, basis_state, is_density_matrix, max_deviation, outer


def closed_form(d, a, b):
    """Two-qubit Fourier states written out from their amplitude patterns."""
    r = 1 / math.sqrt(2)
    p, m = (1 + 1j) / 2, (1 - 1j) / 2
    if d == 0:
        v = np.zeros(4, dtype=complex)
        v[b] = r
        v[2 + b] = (-1) ** a * r
        return v
    if d == 2:
        v = np.zeros(4, dtype=complex)
        v[b] = r
        v[3 - b] = (-1) ** a * r
        return v
    s = (-1) ** b
    q, w = (p, m) if d == 1 else (m, p)
    if a == 0:
        return r * np.array([1, 0, s * q, s * w])
    return r * np.array([0, 1, s * w, s * q])


class TestFourierStates:
    @pytest.mark.parametrize("d,a,b", list(itertools.product(range(4), (0, 1), (0, 1))))
    def test_against_closed_form(self, d, a, b):
        assert max_deviation(states.fourier_state_2q(d, (a, b)), closed_form(d, a, b)) < 1e-12

    @pytest.mark.parametrize("d,a,b", list(itertools.product(range(4), (0, 1), (0, 1))))
    def test_against_printed_tables(self, d, a, b):
        assert max_deviation(states.fourier_state_2q(d, (a, b)), reference.FOURIER_STATES[d][(a, b)]) < PRINTED_TOL

    @pytest.mark.parametrize("a,b", [(0, 0), (0, 1)])
    def test_degree_three_conjugates_degree_one(self, a, b):
        one, three = states.fourier_state_2q(1, (a, b)), states.fourier_state_2q(3, (a, b))
        assert max_deviation(three, one.conj()) < 1e-12

    @pytest.mark.parametrize("a,b", [(1, 0), (1, 1)])
    def test_degree_three_with_phase_bit_swaps_entries(self, a, b):
        one, three = states.fourier_state_2q(1, (a, b)), states.fourier_state_2q(3, (a, b))
        assert max_deviation(three[[2, 3]], one[[3, 2]]) < 1e-12

    def test_bell_states_are_degree_two(self):
        for lab in states.LABELS:
            assert max_deviation(states.bell(lab), states.fourier_state_2q(2, lab)) < 1e-12

    def test_labels_validate(self):
        with pytest.raises(ValueError):
            states.StateLabel(2, 0)
        with pytest.raises(ValueError):
            states.fourier_state_2q(-1, (0, 0))


class TestGHZ:
    @pytest.mark.parametrize("n,ref", [(3, reference.GHZ3), (4, reference.GHZ4)])
    def test_via_qfg(self, n, ref):
        assert max_deviation(states.fourier_state(n, 2), ref) < 1e-12

    def test_via_explicit_chains(self):
        c3 = circuit.hadamard_first(3).extend(circuit.ghz3_swap_chain())
        c4 = circuit.hadamard_first(4).extend(circuit.ghz4_swap_chain())
        assert max_deviation(circuit.run_analytic(c3)[""].state, reference.GHZ3) < 1e-12
        assert max_deviation(circuit.run_analytic(c4)[""].state, reference.GHZ4) < 1e-12

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_via_fanout(self, n):
        c = circuit.hadamard_first(n).extend(circuit.cnot_fanout(n))
        assert max_deviation(circuit.run_analytic(c)[""].state, states.ghz(n)) < 1e-12

    def test_too_small(self):
        with pytest.raises(ValueError):
            states.ghz(1)


class TestGamma:
    @pytest.mark.parametrize("a,b", list(itertools.product((0, 1), (0, 1))))
    def test_against_printed_table(self, a, b):
        assert max_deviation(states.gamma((a, b)), reference.GAMMA_STATES[(a, b)]) < PRINTED_TOL

    def test_closed_form(self):
        u, v = gates.fourth_root_x_entries()
        assert max_deviation(states.gamma((1, 1)), [0, v, u, 0]) < 1e-12


class TestDensity:
    @pytest.mark.parametrize("key", sorted(reference.DENSITY))
    def test_printed_matrices(self, key):
        family, ab = key
        vec = {"bell": states.bell, "gamma": states.gamma}.get(family)
        v = vec(ab) if vec else states.fourier_state_2q(1, ab)
        assert max_deviation(states.density(v), reference.DENSITY[key]) < PRINTED_TOL

    @pytest.mark.parametrize("d,a,b", list(itertools.product(range(4), (0, 1), (0, 1))))
    def test_invariants(self, d, a, b):
        assert is_density_matrix(states.density(states.fourier_state_2q(d, (a, b))))


def member_state(family, degree, ab):
    if family == "bell":
        return states.bell(ab)
    if family == "gamma":
        return states.gamma(ab)
    return states.fourier_state_2q(degree, ab)


class TestTiles:
    @pytest.mark.parametrize(
        "layout,member",
        [(k, m) for k, ms in reference.LAYOUT_MEMBERS.items() for m in ms],
    )
    def test_listed_members(self, layout, member):
        assert states.classify(outer(member_state(*member))).value == layout

    def test_degree_zero_is_other(self):
        assert states.classify(outer(states.fourier_state_2q(0, (0, 0)))) is states.Layout.OTHER

    def test_basis_state_is_other(self):
        assert states.classify(outer(basis_state("01"))) is states.Layout.OTHER

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            states.tile_pattern(np.eye(8))
