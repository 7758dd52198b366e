"""Abstract quantum-device interface with single-use qubit handles.

A QuantumProgram is an immutable description of an effectful computation; it
does nothing until `execute` runs it against a backend. Within one execution
every qubit handle is linear: it is produced by exactly one operation and
must be consumed by exactly one later operation (a circuit application or a
measurement). Violations raise UseAfterConsume / DuplicateHandle during the
run, and a program that returns while qubits are still live fails the final
DanglingQubits check.

Handle ids are hidden; tests may use the privileged `_handle_id` hook but
production code has no business reading them.
"""
from __future__ import annotations

import functools
from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from typing import Any, Generic, TypeVar

from .circuit import Circuit
from .errors import ArityMismatch, DanglingQubits, DeviceError, DuplicateHandle, UseAfterConsume
from .stdcircuits import cnot_gate, h_gate, p_gate

A = TypeVar("A")
B = TypeVar("B")

_TOKEN = object()


class QubitHandle:
    """Opaque single-use token naming one live qubit of a running program."""

    __slots__ = ("_id", "_owner")

    def __init__(self, ident: int, owner: object, *, _token: object = None):
        if _token is not _TOKEN:
            raise TypeError("QubitHandle values are issued by device operations only")
        self._id = ident
        self._owner = owner

    def __repr__(self) -> str:
        return "<qubit>"


def _handle_id(handle: QubitHandle) -> int:
    """Privileged inspection hook for tests."""
    return handle._id


class DeviceSession(ABC):
    """Backend-facing primitives for one execution, keyed by opaque qubit ids.

    The device layer owns id issuance and the linearity discipline; sessions
    only have to move quantum state around.
    """

    @abstractmethod
    def allocate(self, ids: Sequence[int]) -> None:
        """Add one |0> qubit per id."""

    @abstractmethod
    def apply(self, ids: Sequence[int], circuit: Circuit) -> None:
        """Apply `circuit` with its wire k acting on the qubit named ids[k]."""

    @abstractmethod
    def rename(self, old_ids: Sequence[int], new_ids: Sequence[int]) -> None:
        """Rebind qubits to fresh ids after their old handles were consumed."""

    @abstractmethod
    def measure(self, ids: Sequence[int]) -> list[int]:
        """Born-rule measurement; destroys the measured qubits."""


class DeviceBackend(ABC):
    """Factory for per-execution sessions."""

    @abstractmethod
    def new_session(self) -> DeviceSession:
        ...


class _Execution:
    """Linearity bookkeeping around one session; records the op trace."""

    def __init__(self, session: DeviceSession):
        self._session = session
        self._next_id = 0
        self._live: set[int] = set()
        self.trace: list[tuple[Any, ...]] = []

    def _issue(self, count: int) -> list[int]:
        ids = list(range(self._next_id, self._next_id + count))
        self._next_id += count
        self._live.update(ids)
        return ids

    def _consume(self, handles: Sequence[QubitHandle]) -> list[int]:
        ids = []
        seen: set[int] = set()
        for handle in handles:
            ident = handle._id
            if handle._owner is not self:
                raise UseAfterConsume("qubit handle belongs to a different execution")
            if ident in seen:
                raise DuplicateHandle("the same qubit handle was passed twice to one operation")
            seen.add(ident)
            if ident not in self._live:
                raise UseAfterConsume("qubit handle was already consumed")
            ids.append(ident)
        self._live.difference_update(ids)
        return ids

    @property
    def live_count(self) -> int:
        return len(self._live)

    def new_qubits(self, p: int) -> list[QubitHandle]:
        ids = self._issue(p)
        self._session.allocate(ids)
        self.trace.append(("new", p))
        return [QubitHandle(i, self, _token=_TOKEN) for i in ids]

    def apply_circuit(self, handles: Sequence[QubitHandle], circuit: Circuit) -> list[QubitHandle]:
        ids = self._consume(handles)
        if circuit.arity != len(ids):
            self._live.update(ids)
            raise ArityMismatch(
                f"circuit arity {circuit.arity} does not match {len(ids)} handle(s)"
            )
        self._session.apply(ids, circuit)
        fresh = self._issue(len(ids))
        self._session.rename(ids, fresh)
        self.trace.append(("apply", circuit.arity, circuit.gates))
        return [QubitHandle(i, self, _token=_TOKEN) for i in fresh]

    def measure(self, handles: Sequence[QubitHandle]) -> list[int]:
        ids = self._consume(handles)
        bits = self._session.measure(ids)
        self.trace.append(("measure", len(ids)))
        return bits


class QuantumProgram(Generic[A]):
    """Composable, reusable description of a device computation returning A.

    Values are immutable; running the same program twice performs the same
    operations on fresh sessions. Sequencing is monadic: `pure` injects a
    classical value and `then` chains a continuation on the result.
    """

    __slots__ = ("_step",)

    def __init__(self, step: Callable[[_Execution], A]):
        self._step = step

    def then(self, f: Callable[[A], "QuantumProgram[B]"]) -> "QuantumProgram[B]":
        """Monadic bind: run self, feed the result to f, run f's program."""
        return QuantumProgram(lambda ex: f(self._step(ex))._step(ex))

    def map(self, f: Callable[[A], B]) -> "QuantumProgram[B]":
        return QuantumProgram(lambda ex: f(self._step(ex)))


def pure(value: A) -> QuantumProgram[A]:
    """Program that performs no device operations and returns `value`."""
    return QuantumProgram(lambda ex: value)


def qprogram(genfn):
    """Write a program as a generator: `yield` a sub-program, receive its result.

    The decorated function returns a QuantumProgram value; the generator body
    is re-instantiated on every execution, so the value stays reusable.
    """

    @functools.wraps(genfn)
    def make(*args, **kwargs) -> QuantumProgram:
        def step(ex: _Execution):
            gen = genfn(*args, **kwargs)
            try:
                prog = next(gen)
                while True:
                    prog = gen.send(prog._step(ex))
            except StopIteration as stop:
                return stop.value

        return QuantumProgram(step)

    return make


def new_qubits(p: int) -> QuantumProgram[list[QubitHandle]]:
    """Prepare p fresh qubits in |0> and return their handles."""
    if p < 0:
        raise ValueError("qubit count must be non-negative")
    return QuantumProgram(lambda ex: ex.new_qubits(p))


def apply_circuit(
    handles: Sequence[QubitHandle], circuit: Circuit
) -> QuantumProgram[list[QubitHandle]]:
    """Apply `circuit` to the named qubits (in handle order) and return fresh handles."""
    handles = list(handles)
    return QuantumProgram(lambda ex: ex.apply_circuit(handles, circuit))


def apply_h(q: QubitHandle) -> QuantumProgram[QubitHandle]:
    return apply_circuit([q], h_gate()).map(lambda hs: hs[0])


def apply_p(alpha: float, q: QubitHandle) -> QuantumProgram[QubitHandle]:
    return apply_circuit([q], p_gate(alpha)).map(lambda hs: hs[0])


def apply_cnot(q1: QubitHandle, q2: QubitHandle) -> QuantumProgram[list[QubitHandle]]:
    return apply_circuit([q1, q2], cnot_gate())


def measure(handles: Sequence[QubitHandle]) -> QuantumProgram[list[int]]:
    """Measure and destroy the named qubits; bit k belongs to handles[k]."""
    handles = list(handles)
    return QuantumProgram(lambda ex: ex.measure(handles))


def measure_qubit(q: QubitHandle) -> QuantumProgram[int]:
    return measure([q]).map(lambda bits: bits[0])


def execute(backend: DeviceBackend, program: QuantumProgram[A]) -> A:
    """Run a program on a fresh session of `backend` and return its result.

    The program must measure every qubit it allocates; leftovers raise
    DanglingQubits. Executions on one backend instance must not nest.
    """
    result, _ = execute_with_trace(backend, program)
    return result


def execute_with_trace(
    backend: DeviceBackend, program: QuantumProgram[A]
) -> tuple[A, list[tuple[Any, ...]]]:
    """As execute, additionally returning the recorded device-op trace."""
    if getattr(backend, "_qlin_executing", False):
        raise DeviceError("execute may not be nested on the same backend instance")
    ex = _Execution(backend.new_session())
    backend._qlin_executing = True
    try:
        result = program._step(ex)
    finally:
        backend._qlin_executing = False
    if ex.live_count:
        raise DanglingQubits(ex.live_count)
    return result, ex.trace
