#!/usr/bin/env python3
# Hamiltonian averaging and the variational eigensolver: estimating Pauli
# expectations shot by shot, then searching for a ground state.

import numpy as np

from qlin import (
    Hamiltonian,
    RandomSource,
    StateVectorBackend,
    ansatz,
    compute_energy,
    compute_energy_pauli,
    matrix_of,
    vqe_trajectory,
)
from qlin.stdcircuits import h_gate

print("== single-term estimates vs exact expectations ==")
backend = StateVectorBackend(seed=2)
print("  <Z> of |0>   :", compute_energy_pauli(backend, ansatz(1, 0, []), "Z", 2000))
print("  <Z> of H|0>  :", compute_energy_pauli(backend, h_gate(), "Z", 2000))
print("  <X> of H|0>  :", compute_energy_pauli(backend, h_gate(), "X", 2000))

print("\n== a two-term Hamiltonian on |0>: 0.5*Z + 0.5*X ==")
hamiltonian = Hamiltonian(((0.5, "Z"), (0.5, "X")))
estimate = compute_energy(backend, ansatz(1, 0, []), hamiltonian, 5000)
print(f"  estimate {estimate:+.4f}   exact +0.5")

print("\n== VQE on H = Z (ground energy -1) ==")
backend = StateVectorBackend(seed=7)
history = vqe_trajectory(backend, Hamiltonian(((1.0, "Z"),)), 1, 40, 1000, RandomSource(7))
best = float("inf")
for index, record in enumerate(history):
    if record.energy < best:
        best = record.energy
        print(f"  round {index:2d}: energy {record.energy:+.3f}  <- new best")
print(f"best energy found: {best:+.3f}")

print("\n== why it works: the ansatz sweeps <Z> = cos(theta) ==")
for theta in (0.0, np.pi / 2, np.pi):
    state = matrix_of(ansatz(1, 1, [theta, 0.0])) @ np.array([1, 0], complex)
    z = abs(state[0]) ** 2 - abs(state[1]) ** 2
    print(f"  theta={theta:4.2f}: <Z> = {z:+.3f}")
