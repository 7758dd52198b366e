#!/usr/bin/env python3
# The quantum Fourier transform: recursive construction, gate growth, and the
# matrix identity it satisfies.

import math

import numpy as np

from qlin import depth, draw, gate_counts, matrix_of
from qlin.stdcircuits import qft

print("== qft(3) ==")
print(draw(qft(3)))

print("\n== gate growth ==")
for n in range(1, 7):
    counts = gate_counts(qft(n))
    print(f"  n={n}: depth {depth(qft(n)):3d}  counts {dict(counts)}")

print("\n== matrix identity ==")
n = 3
dim = 2**n
omega = np.exp(2j * np.pi / dim)
dft = np.array([[omega ** (j * k) for k in range(dim)] for j in range(dim)]) / math.sqrt(dim)
bitrev = [int(format(j, f"0{n}b")[::-1], 2) for j in range(dim)]
print("qft(3) == bit-reversed DFT:", np.allclose(matrix_of(qft(n)), dft[bitrev, :]))

state = matrix_of(qft(n))[:, 0]
print("qft|000> is the uniform superposition:", np.allclose(state, 1 / math.sqrt(dim)))
