"""Command-line front end.

Commands: simulate, stats, draw, export-qasm, optimise, qft, coin, rus, vqe,
qaoa. Circuit files may be in the native format or the OpenQASM subset
emitted by export-qasm (sniffed from the header). Exit codes: 0 success,
1 usage, 2 parse, 3 runtime; every error is a single stderr line starting
with E_USAGE, E_PARSE or E_RUNTIME.

Stochastic commands take --seed; with --format json a seed is required so
repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .algorithms import (
    best_cut,
    coin,
    cut_value,
    qaoa_trajectory,
    run_rus,
    vqe_trajectory,
)
from .circuit import (
    Circuit,
    Hadamard,
    Phase,
    depth,
    draw,
    export_qasm,
    format_angle,
    gate_counts,
    optimise,
)
from .device import apply_circuit, execute, measure, new_qubits, qprogram
from .errors import ParseError, QlinError
from .formats import format_circuit, parse_circuit, parse_graph, parse_hamiltonian, parse_qasm
from .simulator import RandomSource, StateVectorBackend, derive_seed
from .stdcircuits import qft

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RUNTIME = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="qlin", description="Quantum circuit toolkit and simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    def stochastic(p):
        p.add_argument("--seed", type=int, default=None, help="RNG seed (required with --format json)")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--backend", choices=["sim"], default="sim")

    def pure(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("simulate", help="run a circuit and print the outcome histogram")
    p.add_argument("circuit", help="circuit file (native or OpenQASM)")
    p.add_argument("--shots", type=int, default=1024)
    stochastic(p)

    for name, desc in [
        ("stats", "print depth and gate counts"),
        ("draw", "render a circuit as text"),
        ("export-qasm", "emit OpenQASM 2.0"),
        ("optimise", "peephole-optimise a circuit"),
    ]:
        p = sub.add_parser(name, help=desc)
        p.add_argument("circuit")
        pure(p)

    p = sub.add_parser("qft", help="emit the quantum Fourier transform circuit")
    p.add_argument("--n", type=int, required=True, help="wire count")
    pure(p)

    p = sub.add_parser("coin", help="toss the quantum coin")
    stochastic(p)

    p = sub.add_parser("rus", help="repeat-until-success demo, printing the final bit")
    p.add_argument("--max-iter", type=int, default=None)
    stochastic(p)

    p = sub.add_parser("vqe", help="variational eigensolver over a Pauli Hamiltonian")
    p.add_argument("--ham", required=True, help="Hamiltonian file")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--k", type=int, default=50)
    p.add_argument("--nsamples", type=int, default=1000)
    stochastic(p)

    p = sub.add_parser("qaoa", help="QAOA for MAXCUT on a graph file")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--k", type=int, default=50)
    stochastic(p)

    return parser


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise _UsageError(message)


def _load_circuit(path: str) -> Circuit:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith(("#", "//")):
            continue
        if stripped.startswith("OPENQASM"):
            return parse_qasm(text)
        break
    return parse_circuit(text)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _gate_list(circuit: Circuit) -> list[list]:
    encoded: list[list] = []
    for gate in circuit.gates:
        if isinstance(gate, Hadamard):
            encoded.append(["H", gate.wire])
        elif isinstance(gate, Phase):
            encoded.append(["P", gate.angle, gate.wire])
        else:
            encoded.append(["CNOT", gate.control, gate.target])
    return encoded


def _circuit_json(circuit: Circuit) -> dict:
    return {"qubits": circuit.arity, "gates": _gate_list(circuit)}


def _resolve_seed(args) -> int:
    if args.seed is not None:
        _check(args.seed >= 0, "--seed must be non-negative")
        return args.seed
    _check(args.format != "json", "--seed is required with --format json")
    return random.randrange(2**62)


@qprogram
def _measure_all(circuit: Circuit):
    qs = yield new_qubits(circuit.arity)
    qs = yield apply_circuit(qs, circuit)
    bits = yield measure(qs)
    return "".join(str(b) for b in bits)


def _cmd_simulate(args) -> None:
    _check(args.shots >= 1, "--shots must be at least 1")
    circuit = _load_circuit(args.circuit)
    seed = _resolve_seed(args)
    program = _measure_all(circuit)
    counts: dict[str, int] = {}
    for shot in range(args.shots):
        backend = StateVectorBackend(seed=derive_seed(seed, shot))
        outcome = execute(backend, program)
        counts[outcome] = counts.get(outcome, 0) + 1
    lines = [
        f"{bits} {count} {count / args.shots:.4f}" for bits, count in sorted(counts.items())
    ]
    _emit(args, lines, counts)


def _cmd_stats(args) -> None:
    circuit = _load_circuit(args.circuit)
    counts = gate_counts(circuit)
    lines = [
        f"qubits {circuit.arity}",
        f"gates {len(circuit.gates)}",
        f"depth {depth(circuit)}",
    ]
    lines += [f"{kind} {counts[kind]}" for kind in ("H", "P", "CNOT") if counts[kind]]
    _emit(args, lines, {
        "qubits": circuit.arity,
        "gates": len(circuit.gates),
        "depth": depth(circuit),
        "counts": dict(counts),
    })


def _cmd_draw(args) -> None:
    circuit = _load_circuit(args.circuit)
    rendered = draw(circuit)
    _emit(args, [rendered] if rendered else [], {"rows": rendered.splitlines()})


def _cmd_export_qasm(args) -> None:
    circuit = _load_circuit(args.circuit)
    qasm = export_qasm(circuit)
    _emit(args, [qasm.rstrip("\n")], {"qasm": qasm})


def _cmd_optimise(args) -> None:
    circuit = _load_circuit(args.circuit)
    slimmed = optimise(circuit)
    before, after = gate_counts(circuit), gate_counts(slimmed)
    lines = [
        f"# gates before {sum(before.values())} after {sum(after.values())}",
        format_circuit(slimmed).rstrip("\n"),
    ]
    _emit(args, lines, {
        "before": dict(before),
        "after": dict(after),
        "circuit": _circuit_json(slimmed),
    })


def _cmd_qft(args) -> None:
    _check(args.n >= 0, "--n must be non-negative")
    circuit = qft(args.n)
    _emit(args, [format_circuit(circuit).rstrip("\n")], _circuit_json(circuit))


def _cmd_coin(args) -> None:
    seed = _resolve_seed(args)
    bit = coin(StateVectorBackend(seed=seed))
    _emit(args, [str(bit)], {"bit": bit, "seed": seed})


def _cmd_rus(args) -> None:
    seed = _resolve_seed(args)
    _check(args.max_iter is None or args.max_iter >= 1, "--max-iter must be at least 1")
    bit = run_rus(StateVectorBackend(seed=seed), max_iterations=args.max_iter)
    _emit(args, [str(bit)], {"bit": bit, "seed": seed})


def _cmd_vqe(args) -> None:
    _check(args.k >= 1, "--k must be at least 1")
    _check(args.nsamples >= 1, "--nsamples must be at least 1")
    _check(args.depth >= 0, "--depth must be non-negative")
    hamiltonian = parse_hamiltonian(_read(args.ham))
    seed = _resolve_seed(args)
    backend = StateVectorBackend(seed=derive_seed(seed, 0))
    rand = RandomSource(derive_seed(seed, 1))
    history = vqe_trajectory(backend, hamiltonian, args.depth, args.k, args.nsamples, rand)
    best = min(history, key=lambda record: record.energy)
    lines = [
        f"best_energy {format_angle(best.energy)}",
        "params " + " ".join(format_angle(x) for x in best.params),
    ]
    _emit(args, lines, {
        "best_energy": best.energy,
        "best_params": list(best.params),
        "history": [{"params": list(r.params), "energy": r.energy} for r in history],
        "seed": seed,
    })


def _cmd_qaoa(args) -> None:
    _check(args.k >= 1, "--k must be at least 1")
    _check(args.p >= 0, "--p must be non-negative")
    graph = parse_graph(_read(args.graph))
    seed = _resolve_seed(args)
    backend = StateVectorBackend(seed=derive_seed(seed, 0))
    rand = RandomSource(derive_seed(seed, 1))
    history = qaoa_trajectory(backend, args.k, args.p, graph, rand)
    cut, value = best_cut(graph, [record.cut for record in history])
    bits = "".join(str(b) for b in cut)
    _emit(args, [f"cut {bits}", f"value {value}"], {
        "best_cut": bits,
        "best_value": value,
        "history": [
            {
                "betas": list(r.betas),
                "gammas": list(r.gammas),
                "cut": "".join(str(b) for b in r.cut),
                "value": cut_value(graph, r.cut),
            }
            for r in history
        ],
        "seed": seed,
    })


_COMMANDS = {
    "simulate": _cmd_simulate,
    "stats": _cmd_stats,
    "draw": _cmd_draw,
    "export-qasm": _cmd_export_qasm,
    "optimise": _cmd_optimise,
    "qft": _cmd_qft,
    "coin": _cmd_coin,
    "rus": _cmd_rus,
    "vqe": _cmd_vqe,
    "qaoa": _cmd_qaoa,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _COMMANDS[args.command](args)
        return EXIT_OK
    except _UsageError as err:
        print(f"E_USAGE: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as err:
        print(f"E_PARSE: {err}", file=sys.stderr)
        return EXIT_PARSE
    except QlinError as err:
        print(f"E_RUNTIME: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
