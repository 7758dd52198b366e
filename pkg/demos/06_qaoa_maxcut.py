#!/usr/bin/env python3
# QAOA for MAXCUT: the phase-separating circuit, sampled cuts, and the
# classical search loop on two small graphs.

from collections import Counter

import numpy as np

from qlin import (
    Circuit,
    Graph,
    RandomSource,
    StateVectorBackend,
    best_cut,
    cut_value,
    matrix_of,
    qaoa_trajectory,
    qaoa_unitary,
)

triangle = Graph(3, ((0, 1), (1, 2), (0, 2)))
path4 = Graph(4, ((0, 1), (1, 2), (2, 3)))

print("== the cost layer is diagonal and phases cuts ==")
gamma = 0.9
circuit = qaoa_unitary([0.0], [gamma], triangle)
# skip the initial H layer (3 gates) to inspect the bare cost gadget
gadget = Circuit(3, circuit.gates[3 : 3 + 9])
diagonal = np.diag(matrix_of(gadget))
for x in range(8):
    cut = tuple((x >> (2 - i)) & 1 for i in range(3))
    expected = np.angle(np.exp(-2j * gamma * cut_value(triangle, cut)))
    print(f"  |{x:03b}>  cut value {cut_value(triangle, cut)}"
          f"  phase {np.angle(diagonal[x]):+.3f}  (expected {expected:+.3f})")

print("\n== QAOA search on the triangle (optimum 2) ==")
history = qaoa_trajectory(StateVectorBackend(seed=7), 30, 1, triangle, RandomSource(7))
values = Counter(cut_value(triangle, record.cut) for record in history)
print("  sampled cut values:", dict(sorted(values.items())))
cut, value = best_cut(triangle, [record.cut for record in history])
print(f"  best cut {''.join(map(str, cut))} with value {value}")

print("\n== QAOA search on the 4-path (optimum 3) ==")
history = qaoa_trajectory(StateVectorBackend(seed=7), 50, 1, path4, RandomSource(7))
cut, value = best_cut(path4, [record.cut for record in history])
print(f"  best cut {''.join(map(str, cut))} with value {value}")
