"""Circuit construction, algebra, metrics, and reference matrix semantics."""
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlin import (
    Circuit,
    ControlledNot,
    Hadamard,
    add_cnot,
    add_h,
    add_p,
    adjoint,
    apply,
    compose,
    controlled,
    depth,
    draw,
    export_qasm,
    gate_counts,
    identity,
    matrix_of,
    optimise,
    tensor,
)
from qlin.errors import (
    ArityMismatch,
    ArityTooLarge,
    ControlEqualsTarget,
    DuplicateWire,
    WireOutOfRange,
)
from qlin.formats import parse_qasm
from qlin.stdcircuits import h_gate, p_gate, qft, to_bell_basis

from .oracles import (
    H,
    I2,
    assert_close,
    basis_state,
    block_diag_controlled,
    embed_matrix,
    kron_all,
    normalise_phase,
    random_circuit,
)


# constructors

def test_identity_matrices():
    assert_close(matrix_of(identity(0)), np.array([[1.0]]))
    assert_close(matrix_of(identity(1)), np.eye(2))
    assert_close(matrix_of(identity(2)), np.eye(4))
    assert identity(3).gates == ()


def test_add_h_action_on_basis():
    c = add_h(identity(1), 0)
    assert_close(matrix_of(c) @ basis_state(1, 0), np.array([1, 1]) / math.sqrt(2))
    assert_close(matrix_of(c) @ basis_state(1, 1), np.array([1, -1]) / math.sqrt(2))


def test_add_h_out_of_range():
    with pytest.raises(WireOutOfRange):
        add_h(identity(1), 1)


def test_add_p_special_phases():
    z = matrix_of(add_p(identity(1), math.pi, 0))
    assert_close(z @ basis_state(1, 1), -basis_state(1, 1))
    t = matrix_of(add_p(identity(1), math.pi / 4, 0))
    assert_close(t, np.diag([1, np.exp(1j * math.pi / 4)]))
    assert_close(matrix_of(add_p(identity(1), 0.0, 0)), np.eye(2))


def test_add_cnot_basis_action():
    c = matrix_of(add_cnot(identity(2), 0, 1))
    assert_close(c @ basis_state(2, 0b10), basis_state(2, 0b11))
    assert_close(c @ basis_state(2, 0b01), basis_state(2, 0b01))


def test_add_cnot_control_equals_target():
    with pytest.raises(ControlEqualsTarget):
        add_cnot(identity(2), 1, 1)


def test_direct_construction_is_validated():
    with pytest.raises(WireOutOfRange):
        Circuit(1, (Hadamard(3),))
    with pytest.raises(ControlEqualsTarget):
        Circuit(2, (ControlledNot(0, 0),))


# compose / tensor / apply

def test_compose_h_h_is_identity():
    assert_close(matrix_of(compose(h_gate(), h_gate())), np.eye(2))


def test_compose_builds_bell_basis():
    c = compose(add_cnot(identity(2), 0, 1), tensor(h_gate(), identity(1)))
    assert c == to_bell_basis()


def test_compose_identity_law():
    c = random_circuit(random.Random(0), 2, 8)
    assert_close(matrix_of(compose(identity(2), c)), matrix_of(c))


def test_compose_arity_mismatch():
    with pytest.raises(ArityMismatch):
        compose(identity(1), identity(2))


def test_tensor_h_with_identity():
    state = matrix_of(tensor(h_gate(), identity(1))) @ basis_state(2, 0)
    want = np.kron(H, I2) @ basis_state(2, 0)
    assert_close(state, want)
    assert_close(state, (basis_state(2, 0b00) + basis_state(2, 0b10)) / math.sqrt(2))


def test_tensor_unit_law():
    c = random_circuit(random.Random(1), 2, 6)
    assert tensor(identity(0), c) == c


def test_tensor_three_factor_example():
    c = tensor(h_gate(), tensor(identity(1), p_gate(math.pi)))
    want = kron_all(H, I2, np.diag([1, np.exp(1j * math.pi)]))
    assert_close(matrix_of(c), want)


def _example_u() -> Circuit:
    return tensor(h_gate(), tensor(identity(1), p_gate(math.pi)))


def test_apply_remaps_gates_structurally():
    applied = apply(to_bell_basis(), _example_u(), [0, 1])
    assert applied.gates[-2:] == (Hadamard(0), ControlledNot(0, 1))
    applied = apply(to_bell_basis(), _example_u(), [2, 0])
    assert applied.gates[-2:] == (Hadamard(2), ControlledNot(2, 0))


@pytest.mark.parametrize("wires", [[0, 1], [0, 2], [2, 0], [2, 1]])
def test_apply_matches_embedding_oracle(wires):
    big = _example_u()
    got = matrix_of(apply(to_bell_basis(), big, wires))
    want = embed_matrix(matrix_of(to_bell_basis()), 3, wires) @ matrix_of(big)
    assert_close(got, want)


def test_apply_canonical_embedding():
    rng = random.Random(2)
    small = random_circuit(rng, 2, 6)
    got = matrix_of(apply(small, identity(4), [0, 1]))
    assert_close(got, np.kron(matrix_of(small), np.eye(4)))


def test_apply_validation():
    with pytest.raises(ArityMismatch):
        apply(to_bell_basis(), identity(3), [0])
    with pytest.raises(WireOutOfRange):
        apply(to_bell_basis(), identity(3), [0, 3])
    with pytest.raises(DuplicateWire):
        apply(to_bell_basis(), identity(3), [1, 1])


# adjoint / controlled

def test_adjoint_simple_gates():
    assert adjoint(h_gate()) == h_gate()
    assert adjoint(p_gate(0.8)) == p_gate(-0.8)


def test_adjoint_inverts_qft():
    c = compose(adjoint(qft(3)), qft(3))
    assert_close(matrix_of(c), np.eye(8))


def test_controlled_x_equivalent_is_cnot():
    x_circuit = add_h(add_p(add_h(identity(1), 0), math.pi, 0), 0)
    assert_close(matrix_of(controlled(x_circuit)), matrix_of(add_cnot(identity(2), 0, 1)))


def test_controlled_identity():
    assert_close(matrix_of(controlled(identity(1))), np.eye(4))


def test_controlled_phase_block():
    alpha = 1.234
    assert_close(matrix_of(controlled(p_gate(alpha))), np.diag([1, 1, 1, np.exp(1j * alpha)]))


# optimise

def test_optimise_cancels_double_h():
    assert optimise(add_h(add_h(identity(1), 0), 0)) == identity(1)


def test_optimise_merges_phases():
    merged = optimise(add_p(add_p(identity(1), 0.3, 0), 0.4, 0))
    assert merged == add_p(identity(1), 0.3 + 0.4, 0)
    assert_close(matrix_of(merged), matrix_of(add_p(add_p(identity(1), 0.3, 0), 0.4, 0)))


def test_optimise_leaves_bell_alone():
    assert optimise(to_bell_basis()) == to_bell_basis()


def test_optimise_cancels_cnot_pair_through_disjoint_wires():
    c = add_cnot(add_h(add_cnot(identity(3), 0, 1), 2), 0, 1)
    assert optimise(c) == add_h(identity(3), 2)


def test_optimise_drops_zero_phase():
    assert optimise(add_p(identity(1), 0.0, 0)) == identity(1)


# metrics

def test_depth_examples():
    assert depth(identity(5)) == 0
    assert depth(to_bell_basis()) == 2
    assert depth(tensor(h_gate(), h_gate())) == 1


def test_gate_counts_bell():
    assert dict(gate_counts(to_bell_basis())) == {"H": 1, "CNOT": 1}


# matrix guard and drawing / export

def test_matrix_arity_guard():
    with pytest.raises(ArityTooLarge):
        matrix_of(identity(13))


def test_matrix_of_bell_state():
    state = matrix_of(to_bell_basis()) @ basis_state(2, 0)
    assert_close(state, (basis_state(2, 0b00) + basis_state(2, 0b11)) / math.sqrt(2))


def test_draw_identity_rows():
    assert draw(identity(2)) == "q0:\nq1:"


def test_draw_bell():
    assert draw(to_bell_basis()) == "q0: -H--o-\nq1: ----X-"


def test_export_qasm_bell():
    text = export_qasm(to_bell_basis())
    assert text.splitlines() == [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "qreg q[2];",
        "h q[0];",
        "cx q[0],q[1];",
    ]
    assert parse_qasm(text) == to_bell_basis()


def test_export_qasm_phase_serialisation():
    text = export_qasm(p_gate(math.pi))
    assert "u1(3.14159265358979) q[0];" in text
    reimported = parse_qasm(text)
    assert_close(matrix_of(reimported), matrix_of(p_gate(math.pi)), tol=1e-9)


# properties

circuits = st.builds(
    lambda seed, arity, gates: random_circuit(random.Random(seed), arity, gates),
    st.integers(0, 10_000),
    st.integers(1, 6),
    st.integers(0, 15),
)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(circuits)
def test_matrix_is_unitary(c):
    u = matrix_of(c)
    assert_close(u @ u.conj().T, np.eye(2**c.arity))


@settings(max_examples=60, deadline=None, derandomize=True)
@given(circuits)
def test_adjoint_is_involution(c):
    assert adjoint(adjoint(c)) == c


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.integers(0, 10_000))
def test_interchange_law(seed):
    rng = random.Random(seed)
    na, nb = rng.randint(1, 2), rng.randint(1, 2)
    a, c = (random_circuit(rng, na, 5) for _ in range(2))
    b, d = (random_circuit(rng, nb, 5) for _ in range(2))
    lhs = matrix_of(compose(tensor(a, b), tensor(c, d)))
    rhs = matrix_of(tensor(compose(a, c), compose(b, d)))
    assert_close(lhs, rhs)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.integers(0, 10_000))
def test_apply_generalises_tensor_and_compose(seed):
    rng = random.Random(seed)
    k, n = rng.randint(1, 2), rng.randint(3, 4)
    small = random_circuit(rng, k, 5)
    big = random_circuit(rng, n, 5)
    as_tensor = apply(small, identity(n), list(range(k)))
    assert_close(
        matrix_of(as_tensor), matrix_of(tensor(small, identity(n - k)))
    )
    full = random_circuit(rng, n, 5)
    applied = apply(full, big, list(range(n)))
    assert_close(matrix_of(applied), matrix_of(full) @ matrix_of(big))


@settings(max_examples=30, deadline=None, derandomize=True)
@given(circuits.filter(lambda c: c.arity <= 4))
def test_controlled_is_block_diagonal(c):
    assert_close(matrix_of(controlled(c)), block_diag_controlled(matrix_of(c)))


@settings(max_examples=60, deadline=None, derandomize=True)
@given(circuits.filter(lambda c: c.arity <= 4))
def test_optimise_preserves_semantics_and_count(c):
    slimmed = optimise(c)
    assert len(slimmed.gates) <= len(c.gates)
    assert_close(
        normalise_phase(matrix_of(slimmed)), normalise_phase(matrix_of(c))
    )
