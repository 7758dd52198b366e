"""Algorithm suite over the abstract device: coin, repeat-until-success,
Hamiltonian averaging / VQE, and QAOA for MAXCUT.

Every driver is written against DeviceBackend, so it runs unchanged on any
backend. Randomness used by the classical optimisers is injected as a
RandomSource, separate from the backend's measurement randomness; proposal
strategies are plain callables so better optimisers can be plugged in
without touching the drivers.
"""
from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .circuit import Circuit, add_cnot, add_h, add_p, adjoint, identity
from .device import (
    DeviceBackend,
    QubitHandle,
    apply_circuit,
    apply_h,
    execute,
    measure,
    measure_qubit,
    new_qubits,
    qprogram,
)
from .errors import AllIdentityTerm, ArityMismatch, ParamCountMismatch, RusIterationLimit
from .simulator import RandomSource

Cut = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Undirected graph for MAXCUT; edges are stored sorted and deduplicated."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        normalised = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            edge = (min(u, v), max(u, v))
            if edge in seen:
                raise ValueError(f"duplicate edge {edge}")
            seen.add(edge)
            normalised.append(edge)
        object.__setattr__(self, "edges", tuple(sorted(normalised)))


_PAULI_OPS = frozenset("IXYZ")


@dataclass(frozen=True)
class Hamiltonian:
    """Real-weighted sum of Pauli strings, H = sum_i coeff_i * term_i."""

    terms: tuple[tuple[float, str], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a Hamiltonian needs at least one term")
        n = len(self.terms[0][1])
        cleaned = []
        for coeff, term in self.terms:
            coeff = float(coeff)
            if not math.isfinite(coeff):
                raise ValueError(f"non-finite coefficient {coeff}")
            if len(term) != n:
                raise ValueError("all Pauli strings must have the same length")
            if not set(term) <= _PAULI_OPS:
                raise ValueError(f"invalid Pauli string {term!r}")
            cleaned.append((coeff, term))
        object.__setattr__(self, "terms", tuple(cleaned))

    @property
    def arity(self) -> int:
        return len(self.terms[0][1])


class QaoaRecord(NamedTuple):
    betas: tuple[float, ...]
    gammas: tuple[float, ...]
    cut: Cut


class VqeRecord(NamedTuple):
    params: tuple[float, ...]
    energy: float


# quantum coin (allocate, H, measure)

@qprogram
def _coin_program():
    q, = yield new_qubits(1)
    q = yield apply_h(q)
    bit = yield measure_qubit(q)
    return bit


def coin(backend: DeviceBackend) -> int:
    """Fair coin toss from one qubit in superposition."""
    return execute(backend, _coin_program())


# repeat-until-success

def rus_example_unitary() -> Circuit:
    """Two-qubit trial unitary whose success branch is (I + 2iX)-like on the
    data wire and whose failure branch is the identity up to phase; the
    ancilla is wire 0."""
    c = add_h(identity(2), 0)
    c = add_p(c, math.pi / 4, 0)
    c = add_cnot(c, 0, 1)
    c = add_h(c, 0)
    c = add_cnot(c, 0, 1)
    c = add_p(c, math.pi / 4, 0)
    c = add_h(c, 0)
    return c


@qprogram
def rus(q: QubitHandle, u_prime: Circuit, e: Circuit, max_iterations: int | None = None):
    """Repeat-until-success protocol on the qubit named by `q`.

    Each round allocates an ancilla, applies `u_prime` to (ancilla, q) and
    measures the ancilla: 0 means success and the data qubit is returned;
    1 means the data qubit holds E|psi>, so adjoint(e) undoes it and the
    round repeats. Terminates with probability 1 whenever success has
    positive probability; `max_iterations` bounds the failure rounds.
    """
    undo = adjoint(e)
    failures = 0
    while True:
        anc, = yield new_qubits(1)
        anc, q = yield apply_circuit([anc, q], u_prime)
        bit = yield measure_qubit(anc)
        if not bit:
            return q
        q, = yield apply_circuit([q], undo)
        failures += 1
        if max_iterations is not None and failures >= max_iterations:
            raise RusIterationLimit(max_iterations)


@qprogram
def _rus_driver(u_prime: Circuit, e: Circuit, max_iterations: int | None):
    q, = yield new_qubits(1)
    q = yield rus(q, u_prime, e, max_iterations)
    bit = yield measure_qubit(q)
    return bit


def run_rus(
    backend: DeviceBackend,
    u_prime: Circuit | None = None,
    e: Circuit | None = None,
    max_iterations: int | None = None,
) -> int:
    """Run RUS from |0>, measure the resulting qubit, return the bit."""
    if u_prime is None:
        u_prime = rus_example_unitary()
    if e is None:
        e = identity(1)
    return execute(backend, _rus_driver(u_prime, e, max_iterations))


# MAXCUT / QAOA

def cut_value(graph: Graph, cut: Sequence[int]) -> int:
    """Number of edges whose endpoints land on opposite sides."""
    if len(cut) != graph.vertex_count:
        raise ValueError("cut length must match the vertex count")
    return sum(1 for u, v in graph.edges if cut[u] != cut[v])


def best_cut(graph: Graph, cuts: Sequence[Sequence[int]]) -> tuple[Cut, int]:
    """Maximum-value cut among `cuts`; ties go to the first occurrence."""
    best: Cut | None = None
    best_value = -1
    for cut in cuts:
        value = cut_value(graph, cut)
        if value > best_value:
            best, best_value = tuple(cut), value
    if best is None:
        raise ValueError("no cuts given")
    return best, best_value


def qaoa_unitary(
    betas: Sequence[float], gammas: Sequence[float], graph: Graph
) -> Circuit:
    """QAOA state-preparation circuit for MAXCUT.

    Starts with H on every wire, then per layer: for each edge (u, v) the
    diagonal gadget CNOT(u,v), P(-2*gamma) on v, CNOT(u,v), which phases
    |x> by exp(-2i*gamma*[x_u != x_v]); then the mixer H, P(2*beta), H on
    every wire (an X rotation up to global phase).
    """
    if len(betas) != len(gammas):
        raise ParamCountMismatch(len(betas), len(gammas))
    n = graph.vertex_count
    c = identity(n)
    for w in range(n):
        c = add_h(c, w)
    for beta, gamma in zip(betas, gammas):
        for u, v in graph.edges:
            c = add_cnot(c, u, v)
            c = add_p(c, -2.0 * gamma, v)
            c = add_cnot(c, u, v)
        for w in range(n):
            c = add_h(c, w)
            c = add_p(c, 2.0 * beta, w)
            c = add_h(c, w)
    return c


def random_qaoa_params(
    graph: Graph,
    p: int,
    history: Sequence[QaoaRecord],
    rand: RandomSource,
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Default proposal: ignore history, draw beta in [0, pi), gamma in [0, 2*pi)."""
    betas = tuple(rand.uniform() * math.pi for _ in range(p))
    gammas = tuple(rand.uniform() * 2.0 * math.pi for _ in range(p))
    return betas, gammas


QaoaOptimiser = Callable[
    [Graph, int, Sequence[QaoaRecord], RandomSource],
    tuple[Sequence[float], Sequence[float]],
]


@qprogram
def _sample_cut(circuit: Circuit):
    qs = yield new_qubits(circuit.arity)
    qs = yield apply_circuit(qs, circuit)
    bits = yield measure(qs)
    return tuple(bits)


def qaoa_trajectory(
    backend: DeviceBackend,
    k: int,
    p: int,
    graph: Graph,
    rand: RandomSource,
    optimiser: QaoaOptimiser = random_qaoa_params,
) -> list[QaoaRecord]:
    """k rounds of propose-parameters, run the circuit once, record the cut."""
    if k < 1:
        raise ValueError("iteration count must be at least 1")
    history: list[QaoaRecord] = []
    for _ in range(k):
        betas, gammas = optimiser(graph, p, history, rand)
        circuit = qaoa_unitary(betas, gammas, graph)
        cut = execute(backend, _sample_cut(circuit))
        history.append(QaoaRecord(tuple(betas), tuple(gammas), cut))
    return history


def qaoa(
    backend: DeviceBackend,
    k: int,
    p: int,
    graph: Graph,
    rand: RandomSource,
    optimiser: QaoaOptimiser = random_qaoa_params,
) -> Cut:
    """Best cut sampled across k QAOA rounds."""
    history = qaoa_trajectory(backend, k, p, graph, rand, optimiser)
    cut, _ = best_cut(graph, [record.cut for record in history])
    return cut


# Hamiltonian averaging / VQE

def encoding_unitary(term: str) -> Circuit:
    """Measurement-basis change for one Pauli string.

    Per wire: X -> H, Y -> P(-pi/2) then H, Z and I -> nothing; then CNOTs
    from every other non-identity wire onto the first one, so that wire's
    Z-measurement satisfies p0 - p1 = <term>.
    """
    if not set(term) <= _PAULI_OPS:
        raise ValueError(f"invalid Pauli string {term!r}")
    active = [i for i, op in enumerate(term) if op != "I"]
    if not active:
        raise AllIdentityTerm("all-identity term has expectation 1 and needs no circuit")
    c = identity(len(term))
    for i in active:
        if term[i] == "X":
            c = add_h(c, i)
        elif term[i] == "Y":
            c = add_p(c, -math.pi / 2, i)
            c = add_h(c, i)
    first = active[0]
    for i in active[1:]:
        c = add_cnot(c, i, first)
    return c


@qprogram
def _energy_sample(prepare: Circuit, encode: Circuit, target: int):
    qs = yield new_qubits(prepare.arity)
    qs = yield apply_circuit(qs, prepare)
    qs = yield apply_circuit(qs, encode)
    bits = yield measure(qs)
    return bits[target]


def compute_energy_pauli(
    backend: DeviceBackend, ansatz_circuit: Circuit, term: str, n_samples: int
) -> float:
    """Estimate <psi|term|psi> as (#zeros - #ones) / n_samples."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    if len(term) != ansatz_circuit.arity:
        raise ArityMismatch(
            f"term acts on {len(term)} qubits but the ansatz has arity {ansatz_circuit.arity}"
        )
    encode = encoding_unitary(term)
    target = next(i for i, op in enumerate(term) if op != "I")
    program = _energy_sample(ansatz_circuit, encode, target)
    ones = sum(execute(backend, program) for _ in range(n_samples))
    return (n_samples - 2 * ones) / n_samples


def compute_energy(
    backend: DeviceBackend,
    ansatz_circuit: Circuit,
    hamiltonian: Hamiltonian,
    n_samples: int,
) -> float:
    """Hamiltonian averaging: sum coeff_i * <term_i>, term by term.

    All-identity terms contribute their coefficient directly, with no device
    executions.
    """
    total = 0.0
    for coeff, term in hamiltonian.terms:
        if set(term) == {"I"}:
            total += coeff
        else:
            total += coeff * compute_energy_pauli(backend, ansatz_circuit, term, n_samples)
    return total


def ansatz(n: int, depth: int, params: Sequence[float]) -> Circuit:
    """Hardware-efficient ansatz over {H, P, CNOT}.

    Per layer: on each wire the rotation block H, P(theta), H, P(phi)
    (two angles per wire), then the entangling chain CNOT(i, i+1).
    """
    params = list(params)
    if len(params) != n * depth * 2:
        raise ParamCountMismatch(n * depth * 2, len(params))
    c = identity(n)
    angles = iter(params)
    for _ in range(depth):
        for w in range(n):
            c = add_h(c, w)
            c = add_p(c, next(angles), w)
            c = add_h(c, w)
            c = add_p(c, next(angles), w)
        for w in range(n - 1):
            c = add_cnot(c, w, w + 1)
    return c


def random_ansatz_params(
    hamiltonian: Hamiltonian,
    count: int,
    history: Sequence[VqeRecord],
    rand: RandomSource,
) -> tuple[float, ...]:
    """Default proposal: ignore history, draw every angle uniform in [0, 2*pi)."""
    return tuple(rand.uniform() * 2.0 * math.pi for _ in range(count))


VqeOptimiser = Callable[
    [Hamiltonian, int, Sequence[VqeRecord], RandomSource], Sequence[float]
]


def vqe_trajectory(
    backend: DeviceBackend,
    hamiltonian: Hamiltonian,
    depth: int,
    k: int,
    n_samples: int,
    rand: RandomSource,
    optimiser: VqeOptimiser = random_ansatz_params,
) -> list[VqeRecord]:
    """k rounds of propose-angles, estimate the energy, record the pair."""
    if k < 1:
        raise ValueError("iteration count must be at least 1")
    n = hamiltonian.arity
    count = n * depth * 2
    history: list[VqeRecord] = []
    for _ in range(k):
        params = tuple(optimiser(hamiltonian, count, history, rand))
        energy = compute_energy(backend, ansatz(n, depth, params), hamiltonian, n_samples)
        history.append(VqeRecord(params, energy))
    return history


def vqe(
    backend: DeviceBackend,
    hamiltonian: Hamiltonian,
    depth: int,
    k: int,
    n_samples: int,
    rand: RandomSource,
    optimiser: VqeOptimiser = random_ansatz_params,
) -> float:
    """Best (lowest) energy observed over k rounds; not guaranteed optimal."""
    history = vqe_trajectory(backend, hamiltonian, depth, k, n_samples, rand, optimiser)
    return min(record.energy for record in history)
