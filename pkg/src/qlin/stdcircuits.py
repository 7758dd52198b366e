"""Named standard circuits: standalone gates, Bell-basis prep, and the QFT."""
from __future__ import annotations

import math

from .circuit import Circuit, add_cnot, add_h, add_p, apply, compose, controlled, identity, tensor


def h_gate() -> Circuit:
    return add_h(identity(1), 0)


def p_gate(angle: float) -> Circuit:
    return add_p(identity(1), angle, 0)


def cnot_gate() -> Circuit:
    return add_cnot(identity(2), 0, 1)


def t_gate() -> Circuit:
    return p_gate(math.pi / 4)


def to_bell_basis() -> Circuit:
    """H on wire 0 then CNOT(0,1); maps |00> to the Bell state."""
    return add_cnot(add_h(identity(2), 0), 0, 1)


def rm(m: int) -> Circuit:
    """Phase rotation P(2*pi / 2^m) used by the QFT cascade."""
    return p_gate(2.0 * math.pi / 2**m)


def c_rm(m: int) -> Circuit:
    """Controlled rm(m); control on wire 0, rotation on wire 1."""
    return controlled(rm(m))


def _qft_cascade(n: int) -> Circuit:
    # H on wire 0 followed by controlled rotations onto wire 0: the control
    # at distance d contributes P(2*pi / 2^(d+1)).
    if n == 0:
        return identity(0)
    if n == 1:
        return h_gate()
    grown = tensor(_qft_cascade(n - 1), identity(1))
    return apply(c_rm(n), grown, [n - 1, 0])


def qft(n: int) -> Circuit:
    """Quantum Fourier transform on n wires, without a final swap layer.

    The matrix equals the DFT of size 2^n with the output bit order reversed.
    """
    if n == 0:
        return identity(0)
    rest = tensor(identity(1), qft(n - 1))
    return compose(rest, _qft_cascade(n))
