"""qlin: algebraic quantum circuits over {H, P, CNOT}, a state-vector
simulator with single-use qubit handles, and variational algorithm drivers
(VQE, QAOA for MAXCUT, quantum coin, repeat-until-success).
"""
from . import errors
from .algorithms import (
    Cut,
    Graph,
    Hamiltonian,
    QaoaRecord,
    VqeRecord,
    ansatz,
    best_cut,
    coin,
    compute_energy,
    compute_energy_pauli,
    cut_value,
    encoding_unitary,
    qaoa,
    qaoa_trajectory,
    qaoa_unitary,
    random_ansatz_params,
    random_qaoa_params,
    run_rus,
    rus,
    rus_example_unitary,
    vqe,
    vqe_trajectory,
)
from .circuit import (
    Circuit,
    ControlledNot,
    GateApp,
    Hadamard,
    Phase,
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
from .device import (
    DeviceBackend,
    DeviceSession,
    QuantumProgram,
    QubitHandle,
    apply_circuit,
    apply_cnot,
    apply_h,
    apply_p,
    execute,
    execute_with_trace,
    measure,
    measure_qubit,
    new_qubits,
    pure,
    qprogram,
)
from .formats import (
    format_circuit,
    parse_circuit,
    parse_graph,
    parse_hamiltonian,
    parse_qasm,
)
from .simulator import QuantumState, RandomSource, StateVectorBackend, derive_seed
from .stdcircuits import c_rm, cnot_gate, h_gate, p_gate, qft, rm, t_gate, to_bell_basis

__all__ = [
    "errors",
    # circuit
    "Circuit", "GateApp", "Hadamard", "Phase", "ControlledNot",
    "identity", "add_h", "add_p", "add_cnot", "compose", "tensor", "apply",
    "adjoint", "controlled", "optimise", "depth", "gate_counts", "matrix_of",
    "draw", "export_qasm",
    # stdcircuits
    "h_gate", "p_gate", "cnot_gate", "t_gate", "to_bell_basis", "rm", "c_rm", "qft",
    # device
    "QubitHandle", "QuantumProgram", "DeviceBackend", "DeviceSession",
    "pure", "qprogram", "new_qubits", "apply_circuit", "apply_h", "apply_p",
    "apply_cnot", "measure", "measure_qubit", "execute", "execute_with_trace",
    # simulator
    "QuantumState", "RandomSource", "StateVectorBackend", "derive_seed",
    # algorithms
    "Cut", "Graph", "Hamiltonian", "QaoaRecord", "VqeRecord",
    "coin", "rus", "run_rus", "rus_example_unitary",
    "qaoa", "qaoa_trajectory", "qaoa_unitary", "cut_value", "best_cut",
    "random_qaoa_params", "random_ansatz_params",
    "encoding_unitary", "compute_energy", "compute_energy_pauli", "ansatz",
    "vqe", "vqe_trajectory",
    # formats
    "parse_circuit", "format_circuit", "parse_qasm", "parse_graph", "parse_hamiltonian",
]

__version__ = "0.1.0"
