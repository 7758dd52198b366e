"""Standard gates, Bell preparation, and the QFT against the DFT oracle."""
import math

import numpy as np
import pytest

from qlin import (
    add_cnot,
    add_h,
    add_p,
    adjoint,
    compose,
    gate_counts,
    identity,
    matrix_of,
)
from qlin.stdcircuits import c_rm, cnot_gate, h_gate, p_gate, qft, rm, t_gate, to_bell_basis

from .oracles import assert_close, basis_state, bit_reversed_dft


def test_standalone_gates():
    assert h_gate() == add_h(identity(1), 0)
    assert p_gate(0.5) == add_p(identity(1), 0.5, 0)
    assert cnot_gate() == add_cnot(identity(2), 0, 1)
    assert t_gate() == p_gate(math.pi / 4)


def test_bell_basis_states():
    u = matrix_of(to_bell_basis())
    assert_close(u @ basis_state(2, 0b00), (basis_state(2, 0b00) + basis_state(2, 0b11)) / math.sqrt(2))
    assert_close(u @ basis_state(2, 0b10), (basis_state(2, 0b00) - basis_state(2, 0b11)) / math.sqrt(2))
    assert dict(gate_counts(to_bell_basis())) == {"H": 1, "CNOT": 1}


def test_rm_angles():
    assert rm(1) == p_gate(math.pi)
    assert rm(2) == p_gate(math.pi / 2)


def test_c_rm_block_matrix():
    assert_close(matrix_of(c_rm(2)), np.diag([1, 1, 1, np.exp(1j * math.pi / 2)]))


def test_qft_base_cases():
    assert qft(0) == identity(0)
    assert qft(1) == h_gate()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_qft_matches_bit_reversed_dft(n):
    assert_close(matrix_of(qft(n)), bit_reversed_dft(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_qft_unitary_and_uniform(n):
    u = matrix_of(qft(n))
    assert_close(u @ u.conj().T, np.eye(2**n))
    state = u @ basis_state(n, 0)
    assert_close(state, np.full(2**n, 1 / math.sqrt(2**n)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_qft_adjoint_inverse(n):
    assert_close(matrix_of(compose(adjoint(qft(n)), qft(n))), np.eye(2**n))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_qft_gate_counts(n):
    counts = gate_counts(qft(n))
    blocks = n * (n - 1) // 2
    assert counts["H"] == n
    # each controlled rotation expands to 3 P and 2 CNOT gates
    assert counts["CNOT"] == 2 * blocks
    assert counts["P"] == 3 * blocks
