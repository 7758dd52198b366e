"""Exact state-vector simulation backend.

Gates are applied directly to the 2^n amplitude vector (O(2^n) per gate); no
2^n x 2^n matrix is ever materialised. Measurement collapses and physically
contracts the measured wire out of the state, so the vector always has one
axis per live qubit. Wire 0 is the most significant bit of an amplitude
index, matching the circuit module's matrix convention.

Randomness is injected through RandomSource and never read from global
state: the same seed and program give the same outcome sequence, bit for bit.
"""
from __future__ import annotations

import json
import math
import random
from collections.abc import Sequence

import numpy as np

from .circuit import Circuit, GateApp, Hadamard, Phase
from .device import DeviceBackend, DeviceSession
from .errors import CapacityExceeded

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

DEFAULT_MAX_QUBITS = 24

_MASK64 = 0xFFFFFFFFFFFFFFFF


def derive_seed(seed: int, index: int) -> int:
    """Stable per-shot seed derivation (splitmix64 mixing)."""
    x = (seed + 0x9E3779B97F4A7C15 * (index + 1)) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class RandomSource:
    """Seedable stream of uniform doubles in [0, 1)."""

    def __init__(self, seed: int | None = None):
        self._rng = random.Random(seed)

    def uniform(self) -> float:
        return self._rng.random()


class QuantumState:
    """Amplitude vector plus the registry mapping live qubit ids to wires.

    The registry is a bijection between live ids and wire positions in
    [0, wire_count); measurement removes an id and shifts the wires above it
    down by one.
    """

    __slots__ = ("amplitudes", "registry")

    def __init__(self):
        self.amplitudes = np.ones(1, dtype=complex)
        self.registry: dict[int, int] = {}

    @property
    def wire_count(self) -> int:
        return len(self.registry)

    def extend_with_zeros(self, ids: Sequence[int]) -> None:
        """Append one |0> wire per id, as new least significant bits."""
        p = len(ids)
        if p == 0:
            return
        zeros = np.zeros(2**p, dtype=complex)
        zeros[0] = 1.0
        n = self.wire_count
        self.amplitudes = np.kron(self.amplitudes, zeros)
        for offset, ident in enumerate(ids):
            self.registry[ident] = n + offset

    def _tensor(self) -> np.ndarray:
        return self.amplitudes.reshape([2] * self.wire_count)

    def _hadamard(self, wire: int) -> None:
        t = self._tensor()
        idx0 = [slice(None)] * self.wire_count
        idx1 = list(idx0)
        idx0[wire], idx1[wire] = 0, 1
        idx0, idx1 = tuple(idx0), tuple(idx1)
        a0 = t[idx0].copy()
        a1 = t[idx1]
        t[idx0] = (a0 + a1) * _INV_SQRT2
        t[idx1] = (a0 - a1) * _INV_SQRT2

    def _phase(self, angle: float, wire: int) -> None:
        t = self._tensor()
        idx1 = [slice(None)] * self.wire_count
        idx1[wire] = 1
        t[tuple(idx1)] *= complex(math.cos(angle), math.sin(angle))

    def _cnot(self, control: int, target: int) -> None:
        t = self._tensor()
        i10 = [slice(None)] * self.wire_count
        i11 = list(i10)
        i10[control] = i11[control] = 1
        i10[target], i11[target] = 0, 1
        i10, i11 = tuple(i10), tuple(i11)
        swapped = t[i10].copy()
        t[i10] = t[i11]
        t[i11] = swapped

    def apply_gate(self, gate: GateApp) -> None:
        """Apply one gate whose wire fields are positions in this state."""
        if isinstance(gate, Hadamard):
            self._hadamard(gate.wire)
        elif isinstance(gate, Phase):
            self._phase(gate.angle, gate.wire)
        else:
            self._cnot(gate.control, gate.target)

    def measure_wire(self, ident: int, rand: RandomSource) -> int:
        """Measure the qubit named `ident`: collapse, renormalise, contract.

        The outcome is 1 exactly when the drawn uniform is below the
        probability of 1, so basis states measure deterministically for any
        seed.
        """
        wire = self.registry[ident]
        n = self.wire_count
        t = self._tensor()
        idx1 = [slice(None)] * n
        idx1[wire] = 1
        p_one = float(np.sum(np.abs(t[tuple(idx1)]) ** 2))
        bit = 1 if rand.uniform() < p_one else 0
        kept = np.take(t, bit, axis=wire).reshape(-1)
        norm = math.sqrt(p_one if bit else 1.0 - p_one)
        self.amplitudes = kept / norm
        del self.registry[ident]
        for other, w in self.registry.items():
            if w > wire:
                self.registry[other] = w - 1
        return bit

    def debug_dump(self) -> str:
        """Amplitudes as a JSON array of [re, im] pairs (test hook)."""
        return json.dumps([[z.real, z.imag] for z in self.amplitudes])


class _SimulatorSession(DeviceSession):
    def __init__(self, rand: RandomSource, max_qubits: int):
        self._state = QuantumState()
        self._random = rand
        self._max_qubits = max_qubits

    def allocate(self, ids: Sequence[int]) -> None:
        requested = self._state.wire_count + len(ids)
        if requested > self._max_qubits:
            raise CapacityExceeded(requested, self._max_qubits)
        self._state.extend_with_zeros(ids)

    def apply(self, ids: Sequence[int], circuit: Circuit) -> None:
        registry = self._state.registry
        wires = [registry[i] for i in ids]
        for gate in circuit.gates:
            if isinstance(gate, Hadamard):
                self._state._hadamard(wires[gate.wire])
            elif isinstance(gate, Phase):
                self._state._phase(gate.angle, wires[gate.wire])
            else:
                self._state._cnot(wires[gate.control], wires[gate.target])

    def rename(self, old_ids: Sequence[int], new_ids: Sequence[int]) -> None:
        registry = self._state.registry
        for old, new in zip(old_ids, new_ids):
            registry[new] = registry.pop(old)

    def measure(self, ids: Sequence[int]) -> list[int]:
        return [self._state.measure_wire(i, self._random) for i in ids]


class StateVectorBackend(DeviceBackend):
    """DeviceBackend running exact state-vector simulation.

    One RandomSource feeds all sessions of the instance, so a sequence of
    executes is reproducible end to end from the constructor seed. The qubit
    cap protects desk-scale machines from accidental 2^n blowups.
    """

    def __init__(self, seed: int | None = None, max_qubits: int = DEFAULT_MAX_QUBITS):
        self._random = RandomSource(seed)
        self.max_qubits = max_qubits

    def new_session(self) -> _SimulatorSession:
        return _SimulatorSession(self._random, self.max_qubits)
