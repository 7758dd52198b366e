"""Text formats: the native circuit format, an OpenQASM 2.0 importer for the
subset this package emits, and the graph / Hamiltonian files used by the
algorithm drivers. All parse errors carry 1-based line numbers.

Native circuit format:
    qubits <n>
    H <j>
    P <angle> <j>
    CNOT <c> <t>
with `#` comments and free whitespace. Angles accept float literals or
simple expressions over `pi` (e.g. `pi/2`, `-3*pi/4`).
"""
from __future__ import annotations

import ast
import math

from .algorithms import Graph, Hamiltonian
from .circuit import (
    Circuit,
    Hadamard,
    Phase,
    add_cnot,
    add_h,
    add_p,
    format_angle,
    identity,
)
from .errors import CircuitError, ParseError


def _eval_angle_node(node: ast.expr) -> float:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id == "pi":
        return math.pi
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        value = _eval_angle_node(node.operand)
        return value if isinstance(node.op, ast.UAdd) else -value
    if isinstance(node, ast.BinOp) and isinstance(
        node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div)
    ):
        left = _eval_angle_node(node.left)
        right = _eval_angle_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        return left / right
    raise ValueError("unsupported angle expression")


def parse_angle(text: str, line: int) -> float:
    """Evaluate an angle literal or a +-*/ expression over `pi`."""
    try:
        return _eval_angle_node(ast.parse(text.strip(), mode="eval").body)
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise ParseError(line, f"bad angle {text.strip()!r}") from None


def _significant_lines(text: str, comment: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split(comment, 1)[0].strip()
        if stripped:
            yield number, stripped


def parse_circuit(text: str) -> Circuit:
    """Parse the native circuit format into a validated Circuit."""
    lines = _significant_lines(text, "#")
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty file: expected `qubits <n>`") from None
    fields = header.split()
    if len(fields) != 2 or fields[0] != "qubits" or not fields[1].isdigit():
        raise ParseError(number, f"expected `qubits <n>`, got {header!r}")
    circuit = identity(int(fields[1]))
    for number, line in lines:
        fields = line.split()
        try:
            if fields[0] == "H" and len(fields) == 2:
                circuit = add_h(circuit, _parse_wire(fields[1], number))
            elif fields[0] == "P" and len(fields) == 3:
                angle = parse_angle(fields[1], number)
                circuit = add_p(circuit, angle, _parse_wire(fields[2], number))
            elif fields[0] == "CNOT" and len(fields) == 3:
                circuit = add_cnot(
                    circuit, _parse_wire(fields[1], number), _parse_wire(fields[2], number)
                )
            else:
                raise ParseError(number, f"unrecognised gate line {line!r}")
        except CircuitError as err:
            raise ParseError(number, str(err)) from None
    return circuit


def _parse_wire(token: str, line: int) -> int:
    if not token.isdigit():
        raise ParseError(line, f"expected a wire index, got {token!r}")
    return int(token)


def format_circuit(c: Circuit) -> str:
    """Render a circuit in the native format (inverse of parse_circuit)."""
    lines = [f"qubits {c.arity}"]
    for gate in c.gates:
        if isinstance(gate, Hadamard):
            lines.append(f"H {gate.wire}")
        elif isinstance(gate, Phase):
            lines.append(f"P {format_angle(gate.angle)} {gate.wire}")
        else:
            lines.append(f"CNOT {gate.control} {gate.target}")
    return "\n".join(lines) + "\n"


def _parse_qasm_qubit(token: str, register: str, size: int, line: int) -> int:
    token = token.strip()
    if not (token.startswith(f"{register}[") and token.endswith("]")):
        raise ParseError(line, f"expected {register}[<index>], got {token!r}")
    index = token[len(register) + 1 : -1]
    if not index.isdigit():
        raise ParseError(line, f"bad qubit index in {token!r}")
    value = int(index)
    if value >= size:
        raise ParseError(line, f"qubit {token} exceeds register size {size}")
    return value


def parse_qasm(text: str) -> Circuit:
    """Parse the OpenQASM 2.0 subset produced by export_qasm (h, u1/p, cx)."""
    register: str | None = None
    size = 0
    circuit: Circuit | None = None
    for number, line in _significant_lines(text, "//"):
        for statement in filter(None, (s.strip() for s in line.split(";"))):
            head = statement.split(None, 1)[0]
            if head == "OPENQASM" or head == "include":
                continue
            if head == "qreg":
                if register is not None:
                    raise ParseError(number, "only one qreg is supported")
                declaration = statement[len("qreg") :].strip()
                name, _, rest = declaration.partition("[")
                if not rest.endswith("]") or not rest[:-1].isdigit():
                    raise ParseError(number, f"bad qreg declaration {statement!r}")
                register, size = name.strip(), int(rest[:-1])
                circuit = identity(size)
                continue
            if circuit is None or register is None:
                raise ParseError(number, "gate before qreg declaration")
            try:
                if head == "h":
                    wire = _parse_qasm_qubit(statement[1:], register, size, number)
                    circuit = add_h(circuit, wire)
                elif head.startswith(("u1(", "p(")):
                    args, _, operand = statement.partition(")")
                    angle = parse_angle(args.split("(", 1)[1], number)
                    wire = _parse_qasm_qubit(operand, register, size, number)
                    circuit = add_p(circuit, angle, wire)
                elif head == "cx":
                    operands = statement[2:].split(",")
                    if len(operands) != 2:
                        raise ParseError(number, f"cx expects two qubits: {statement!r}")
                    control = _parse_qasm_qubit(operands[0], register, size, number)
                    target = _parse_qasm_qubit(operands[1], register, size, number)
                    circuit = add_cnot(circuit, control, target)
                else:
                    raise ParseError(number, f"unsupported statement {statement!r}")
            except CircuitError as err:
                raise ParseError(number, str(err)) from None
    if circuit is None:
        raise ParseError(1, "no qreg declaration found")
    return circuit


def parse_graph(text: str) -> Graph:
    """Parse `vertices <n>` followed by `edge <u> <v>` lines."""
    lines = _significant_lines(text, "#")
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty file: expected `vertices <n>`") from None
    fields = header.split()
    if len(fields) != 2 or fields[0] != "vertices" or not fields[1].isdigit():
        raise ParseError(number, f"expected `vertices <n>`, got {header!r}")
    count = int(fields[1])
    edges = []
    for number, line in lines:
        fields = line.split()
        if len(fields) != 3 or fields[0] != "edge" or not (
            fields[1].isdigit() and fields[2].isdigit()
        ):
            raise ParseError(number, f"expected `edge <u> <v>`, got {line!r}")
        edges.append((int(fields[1]), int(fields[2])))
        try:
            Graph(count, tuple(edges))
        except ValueError as err:
            raise ParseError(number, str(err)) from None
    return Graph(count, tuple(edges))


def parse_hamiltonian(text: str) -> Hamiltonian:
    """Parse one `<coeff> <paulistring>` term per line."""
    terms = []
    for number, line in _significant_lines(text, "#"):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(number, f"expected `<coeff> <paulistring>`, got {line!r}")
        try:
            coeff = float(fields[0])
        except ValueError:
            raise ParseError(number, f"bad coefficient {fields[0]!r}") from None
        terms.append((coeff, fields[1].upper()))
        try:
            Hamiltonian(tuple(terms))
        except ValueError as err:
            raise ParseError(number, str(err)) from None
    if not terms:
        raise ParseError(1, "empty file: expected at least one term")
    return Hamiltonian(tuple(terms))
