#!/usr/bin/env python3
# Effectful programs with single-use qubit handles: preparing and sampling a
# Bell pair, and what the linearity discipline rejects.

from collections import Counter

from qlin import (
    StateVectorBackend,
    apply_circuit,
    apply_cnot,
    execute,
    measure,
    new_qubits,
    qprogram,
    to_bell_basis,
)
from qlin.errors import DanglingQubits, DuplicateHandle


@qprogram
def bell_shot():
    qs = yield new_qubits(2)
    qs = yield apply_circuit(qs, to_bell_basis())
    bits = yield measure(qs)
    return "".join(map(str, bits))


print("== sampling a Bell pair, 10000 seeded shots ==")
backend = StateVectorBackend(seed=7)
program = bell_shot()
counts = Counter(execute(backend, program) for _ in range(10000))
for outcome, count in sorted(counts.items()):
    print(f"  {outcome}: {count}  ({count / 10000:.3f})")
print("perfect correlation: only 00 and 11 ever appear")

print("\n== what the handle discipline rejects ==")


@qprogram
def copy_attempt():
    q, = yield new_qubits(1)
    yield apply_cnot(q, q)  # one qubit cannot be both control and target


try:
    execute(StateVectorBackend(seed=0), copy_attempt())
except DuplicateHandle as err:
    print("duplicate handle:", err)


@qprogram
def forgets_to_measure():
    qs = yield new_qubits(2)
    bits = yield measure([qs[0]])
    return bits


try:
    execute(StateVectorBackend(seed=0), forgets_to_measure())
except DanglingQubits as err:
    print("dangling qubit:", err)
