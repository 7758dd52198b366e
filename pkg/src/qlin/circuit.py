"""Algebraic representation of unitary circuits over the gate set {H, P, CNOT}.

A Circuit is an immutable ordered gate sequence on a fixed number of wires;
an empty sequence is the identity. Gates are stored in temporal order, so the
dense matrix of a circuit is the product of the per-gate embeddings folded
left to right (the gate appended last is the leftmost factor).

Basis convention: wire 0 is the MOST significant bit of a basis-state index,
so on two wires |10> (wire 0 set) has index 2. Every matrix produced here and
every oracle in the test suite follows this convention.

All operations are pure and circuits are safe to share between threads.
"""
from __future__ import annotations

import cmath
import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    ArityMismatch,
    ArityTooLarge,
    ControlEqualsTarget,
    DuplicateWire,
    WireOutOfRange,
)

MATRIX_ARITY_LIMIT = 12


@dataclass(frozen=True)
class Hadamard:
    wire: int


@dataclass(frozen=True)
class Phase:
    angle: float
    wire: int


@dataclass(frozen=True)
class ControlledNot:
    control: int
    target: int


GateApp = Hadamard | Phase | ControlledNot


def _check_gate(gate: GateApp, arity: int) -> None:
    if isinstance(gate, ControlledNot):
        if not 0 <= gate.control < arity:
            raise WireOutOfRange(gate.control, arity)
        if not 0 <= gate.target < arity:
            raise WireOutOfRange(gate.target, arity)
        if gate.control == gate.target:
            raise ControlEqualsTarget(gate.control)
    else:
        if not 0 <= gate.wire < arity:
            raise WireOutOfRange(gate.wire, arity)


@dataclass(frozen=True)
class Circuit:
    """An n-wire unitary as an ordered sequence of atomic gate applications.

    Construction validates every gate against the arity, so an existing
    Circuit never holds an out-of-range wire or a CNOT with control == target.
    """

    arity: int
    gates: tuple[GateApp, ...] = ()

    def __post_init__(self):
        if self.arity < 0:
            raise ArityMismatch(f"arity must be non-negative, got {self.arity}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            _check_gate(gate, self.arity)


def identity(n: int) -> Circuit:
    """The identity circuit on n wires (no gates)."""
    return Circuit(n)


def add_h(c: Circuit, j: int) -> Circuit:
    """Append a Hadamard on wire j."""
    gate = Hadamard(j)
    _check_gate(gate, c.arity)
    return Circuit(c.arity, c.gates + (gate,))


def add_p(c: Circuit, alpha: float, j: int) -> Circuit:
    """Append a phase shift diag(1, e^(i*alpha)) on wire j."""
    gate = Phase(float(alpha), j)
    _check_gate(gate, c.arity)
    return Circuit(c.arity, c.gates + (gate,))


def add_cnot(c: Circuit, control: int, target: int) -> Circuit:
    """Append a CNOT; flips target exactly when control is 1."""
    gate = ControlledNot(control, target)
    _check_gate(gate, c.arity)
    return Circuit(c.arity, c.gates + (gate,))


def compose(a: Circuit, b: Circuit) -> Circuit:
    """Sequential composition: b runs first, so matrix_of(result) = A . B."""
    if a.arity != b.arity:
        raise ArityMismatch(f"cannot compose arity {a.arity} with arity {b.arity}")
    return Circuit(a.arity, b.gates + a.gates)


def _shift_gate(gate: GateApp, offset: int) -> GateApp:
    if isinstance(gate, Hadamard):
        return Hadamard(gate.wire + offset)
    if isinstance(gate, Phase):
        return Phase(gate.angle, gate.wire + offset)
    return ControlledNot(gate.control + offset, gate.target + offset)


def tensor(a: Circuit, b: Circuit) -> Circuit:
    """Parallel composition with a on the lower-indexed wires: matrix A (x) B."""
    shifted = tuple(_shift_gate(g, a.arity) for g in b.gates)
    return Circuit(a.arity + b.arity, a.gates + shifted)


def apply(small: Circuit, big: Circuit, wires: Sequence[int]) -> Circuit:
    """Apply `small` onto `big` so small's wire k acts on big's wires[k].

    The wire vector may hit any selection of big's wires in any order, which
    also permutes small's inputs/outputs. Appends the remapped gates after
    big's, i.e. matrix_of(result) = embed(small, wires) . matrix_of(big).
    """
    wires = list(wires)
    if len(wires) != small.arity:
        raise ArityMismatch(
            f"wire vector has length {len(wires)} but the applied circuit has arity {small.arity}"
        )
    seen: set[int] = set()
    for w in wires:
        if not 0 <= w < big.arity:
            raise WireOutOfRange(w, big.arity)
        if w in seen:
            raise DuplicateWire(w)
        seen.add(w)
    remapped = []
    for gate in small.gates:
        if isinstance(gate, Hadamard):
            remapped.append(Hadamard(wires[gate.wire]))
        elif isinstance(gate, Phase):
            remapped.append(Phase(gate.angle, wires[gate.wire]))
        else:
            remapped.append(ControlledNot(wires[gate.control], wires[gate.target]))
    return Circuit(big.arity, big.gates + tuple(remapped))


def adjoint(c: Circuit) -> Circuit:
    """Inverse circuit: reverse the gate list and invert each gate."""
    inverted = []
    for gate in reversed(c.gates):
        if isinstance(gate, Phase):
            inverted.append(Phase(-gate.angle, gate.wire))
        else:
            inverted.append(gate)
    return Circuit(c.arity, tuple(inverted))


# Controlled-gate decompositions. All three are exact (no stray global
# phase), so controlled(c) is block-diag(I, matrix_of(c)) to rounding error.
#
# CP(a)  = P(a/2)@t, CNOT, P(-a/2)@t, CNOT, P(a/2)@ctl
# CH     = Ry(pi/4)@t, CNOT, Ry(-pi/4)@t where Ry(r) = e^(-ir/2) P(pi/2) H P(r) H P(-pi/2);
#          the scalar phases of the two Ry blocks cancel.
# CCNOT  = standard T-depth construction over {H, P(+-pi/4), CNOT}.

_QUARTER = math.pi / 4
_HALF = math.pi / 2


def _controlled_phase(ctl: int, tgt: int, alpha: float) -> list[GateApp]:
    return [
        Phase(alpha / 2.0, tgt),
        ControlledNot(ctl, tgt),
        Phase(-alpha / 2.0, tgt),
        ControlledNot(ctl, tgt),
        Phase(alpha / 2.0, ctl),
    ]


def _ry_block(tgt: int, angle: float) -> list[GateApp]:
    return [
        Phase(-_HALF, tgt),
        Hadamard(tgt),
        Phase(angle, tgt),
        Hadamard(tgt),
        Phase(_HALF, tgt),
    ]


def _controlled_hadamard(ctl: int, tgt: int) -> list[GateApp]:
    return (
        _ry_block(tgt, _QUARTER)
        + [ControlledNot(ctl, tgt)]
        + _ry_block(tgt, -_QUARTER)
    )


def _toffoli(a: int, b: int, t: int) -> list[GateApp]:
    return [
        Hadamard(t),
        ControlledNot(b, t),
        Phase(-_QUARTER, t),
        ControlledNot(a, t),
        Phase(_QUARTER, t),
        ControlledNot(b, t),
        Phase(-_QUARTER, t),
        ControlledNot(a, t),
        Phase(_QUARTER, b),
        Phase(_QUARTER, t),
        Hadamard(t),
        ControlledNot(a, b),
        Phase(_QUARTER, a),
        Phase(-_QUARTER, b),
        ControlledNot(a, b),
    ]


def controlled(c: Circuit) -> Circuit:
    """Controlled version of c: new control on wire 0, c shifted up by one.

    The matrix equals block-diag(I, matrix_of(c)) exactly; each atomic gate
    is expanded to its controlled form over {H, P, CNOT}.
    """
    gates: list[GateApp] = []
    for gate in c.gates:
        if isinstance(gate, Hadamard):
            gates.extend(_controlled_hadamard(0, gate.wire + 1))
        elif isinstance(gate, Phase):
            gates.extend(_controlled_phase(0, gate.wire + 1, gate.angle))
        else:
            gates.extend(_toffoli(0, gate.control + 1, gate.target + 1))
    return Circuit(c.arity + 1, tuple(gates))


def _touched(gate: GateApp) -> tuple[int, ...]:
    if isinstance(gate, ControlledNot):
        return (gate.control, gate.target)
    return (gate.wire,)


def optimise(c: Circuit) -> Circuit:
    """Peephole cleanup, iterated to a fixpoint.

    Rules: cancel H.H on a wire, cancel identical adjacent CNOT pairs, merge
    P(a).P(b) into P(a+b), drop P(0). "Adjacent" is per-wire: gates on
    disjoint wires never block a rule. Preserves the matrix (up to rounding
    in merged angles) and never increases the gate count.
    """
    gates = [g for g in c.gates if not (isinstance(g, Phase) and g.angle == 0.0)]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(gates):
            gate = gates[i]
            wires = set(_touched(gate))
            partner = None
            for j in range(i + 1, len(gates)):
                if wires & set(_touched(gates[j])):
                    partner = j
                    break
            if partner is not None:
                other = gates[partner]
                if isinstance(gate, Hadamard) and gate == other:
                    del gates[partner], gates[i]
                    changed = True
                    continue
                if isinstance(gate, ControlledNot) and gate == other:
                    del gates[partner], gates[i]
                    changed = True
                    continue
                if (
                    isinstance(gate, Phase)
                    and isinstance(other, Phase)
                    and gate.wire == other.wire
                ):
                    merged = gate.angle + other.angle
                    del gates[partner]
                    if merged == 0.0:
                        del gates[i]
                    else:
                        gates[i] = Phase(merged, gate.wire)
                    changed = True
                    continue
            i += 1
    return Circuit(c.arity, tuple(gates))


def depth(c: Circuit) -> int:
    """Longest wire-wise dependency chain; a CNOT occupies both its wires."""
    frontier = [0] * c.arity
    for gate in c.gates:
        wires = _touched(gate)
        step = 1 + max(frontier[w] for w in wires)
        for w in wires:
            frontier[w] = step
    return max(frontier, default=0)


def gate_counts(c: Circuit) -> Counter[str]:
    """Exact gate multiset sizes keyed by kind ("H", "P", "CNOT")."""
    counts: Counter[str] = Counter()
    for gate in c.gates:
        if isinstance(gate, Hadamard):
            counts["H"] += 1
        elif isinstance(gate, Phase):
            counts["P"] += 1
        else:
            counts["CNOT"] += 1
    return counts


# reference matrix semantics

_H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)


def _embed_single(mat: np.ndarray, n: int, wire: int) -> np.ndarray:
    left = np.eye(2**wire, dtype=complex)
    right = np.eye(2 ** (n - wire - 1), dtype=complex)
    return np.kron(np.kron(left, mat), right)


def _cnot_permutation(n: int, control: int, target: int) -> np.ndarray:
    dim = 2**n
    cbit = 1 << (n - 1 - control)
    tbit = 1 << (n - 1 - target)
    src = np.arange(dim)
    dst = np.where(src & cbit, src ^ tbit, src)
    mat = np.zeros((dim, dim), dtype=complex)
    mat[dst, src] = 1.0
    return mat


def gate_matrix(gate: GateApp, n: int) -> np.ndarray:
    """Dense 2^n x 2^n embedding of a single gate application."""
    if isinstance(gate, Hadamard):
        return _embed_single(_H_MATRIX, n, gate.wire)
    if isinstance(gate, Phase):
        single = np.array([[1, 0], [0, cmath.exp(1j * gate.angle)]], dtype=complex)
        return _embed_single(single, n, gate.wire)
    return _cnot_permutation(n, gate.control, gate.target)


def matrix_of(c: Circuit) -> np.ndarray:
    """Dense unitary of the circuit; the reference semantics for everything else.

    Cost is O(8^arity) per gate, so arities above MATRIX_ARITY_LIMIT are
    rejected rather than silently thrashing memory.
    """
    if c.arity > MATRIX_ARITY_LIMIT:
        raise ArityTooLarge(c.arity, MATRIX_ARITY_LIMIT)
    mat = np.eye(2**c.arity, dtype=complex)
    for gate in c.gates:
        mat = gate_matrix(gate, c.arity) @ mat
    return mat


def draw(c: Circuit) -> str:
    """ASCII rendering, one row per wire, one column per gate in temporal order."""
    rows = [[f"q{w}: "] for w in range(c.arity)]
    for gate in c.gates:
        if isinstance(gate, Hadamard):
            cells = {gate.wire: "-H-"}
        elif isinstance(gate, Phase):
            cells = {gate.wire: "-P-"}
        else:
            lo, hi = sorted((gate.control, gate.target))
            cells = {w: "-|-" for w in range(lo + 1, hi)}
            cells[gate.control] = "-o-"
            cells[gate.target] = "-X-"
        for w in range(c.arity):
            rows[w].append(cells.get(w, "---"))
    return "\n".join("".join(row).rstrip() for row in rows)


def format_angle(angle: float) -> str:
    """Deterministic angle serialisation: 15 significant digits."""
    return f"{angle:.15g}"


def export_qasm(c: Circuit) -> str:
    """OpenQASM 2.0 text: H -> h, P(a) -> u1(a), CNOT -> cx."""
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{c.arity}];"]
    for gate in c.gates:
        if isinstance(gate, Hadamard):
            lines.append(f"h q[{gate.wire}];")
        elif isinstance(gate, Phase):
            lines.append(f"u1({format_angle(gate.angle)}) q[{gate.wire}];")
        else:
            lines.append(f"cx q[{gate.control}],q[{gate.target}];")
    return "\n".join(lines) + "\n"
