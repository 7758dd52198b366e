#!/usr/bin/env python3
# Probabilistic programs: the quantum coin and the recursive
# repeat-until-success protocol, with retry statistics.

from collections import Counter

import numpy as np

from qlin import (
    StateVectorBackend,
    coin,
    execute_with_trace,
    identity,
    matrix_of,
    measure_qubit,
    new_qubits,
    qprogram,
    rus,
    rus_example_unitary,
)

print("== quantum coin, 10000 tosses ==")
backend = StateVectorBackend(seed=3)
heads = sum(coin(backend) for _ in range(10000))
print(f"  heads frequency: {heads / 10000:.3f}")

print("\n== repeat-until-success ==")
u_prime = rus_example_unitary()
unitary = matrix_of(u_prime)
success = unitary[0:2, 0:2]  # ancilla projected onto |0>
target = success @ np.array([1, 0], complex)
target /= np.linalg.norm(target)
print("success-branch state from |0>:", np.round(target, 3))
print(f"predicted P(measure 1) = {abs(target[1])**2:.4f}")


@qprogram
def rus_run():
    q, = yield new_qubits(1)
    q = yield rus(q, u_prime, identity(1))
    bit = yield measure_qubit(q)
    return bit


program = rus_run()
backend = StateVectorBackend(seed=5)
ones = 0
retries = Counter()
for _ in range(10000):
    bit, trace = execute_with_trace(backend, program)
    ones += bit
    retries[sum(1 for op in trace if op[0] == "new") - 2] += 1

print(f"observed P(measure 1) = {ones / 10000:.4f}")
print("retry distribution (geometric, success probability 3/4):")
for count in sorted(retries):
    print(f"  {count} retries: {retries[count]}")
