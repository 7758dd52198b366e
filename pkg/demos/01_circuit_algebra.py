#!/usr/bin/env python3
# Building and transforming circuits: composition, tensoring, targeted
# application, adjoints, controlled versions, and peephole optimisation.

import math

import numpy as np

from qlin import (
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
from qlin.stdcircuits import h_gate, p_gate

print("== constructing circuits gate by gate ==")
bell = add_cnot(add_h(identity(2), 0), 0, 1)
print(draw(bell))
print("depth:", depth(bell), " counts:", dict(gate_counts(bell)))

print("\n== the same circuit from combinators ==")
also_bell = compose(add_cnot(identity(2), 0, 1), tensor(h_gate(), identity(1)))
print("structurally equal:", bell == also_bell)

print("\n== reference matrix semantics ==")
print(np.round(matrix_of(bell), 3))

print("\n== apply: drop a small circuit onto chosen wires ==")
big = tensor(h_gate(), tensor(identity(1), p_gate(math.pi)))
for wires in ([0, 1], [2, 0]):
    placed = apply(bell, big, wires)
    print(f"bell applied at wires {wires}:")
    print(draw(placed))

print("\n== adjoint undoes a circuit ==")
roundtrip = compose(adjoint(bell), bell)
print("U†U == I:", np.allclose(matrix_of(roundtrip), np.eye(4)))

print("\n== controlled circuits ==")
cp = controlled(p_gate(1.0))
print("controlled-P(1.0) diagonal:", np.round(np.diag(matrix_of(cp)), 3))

print("\n== peephole optimisation ==")
noisy = add_p(add_p(add_h(add_h(identity(1), 0), 0), 0.3, 0), -0.3, 0)
slim = optimise(noisy)
print(f"gates {len(noisy.gates)} -> {len(slim.gates)} (H·H and P(0.3)·P(-0.3) vanish)")

print("\n== OpenQASM export ==")
print(export_qasm(bell))
