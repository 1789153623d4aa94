"""Exact amplitude evolution of an n-qubit register.

Amplitude index ``i`` encodes the basis state ``|q_{n-1} ... q_0>`` with
``q_j`` equal to bit ``j`` of ``i``; qubit 0 is the least significant bit.

Gates act in place on the amplitude array through strided views, so no
gate matrix is ever built on this path. Every kernel returns the state it
was given to allow chaining.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from grovercount.circuit import (
    MAX_QUBITS,
    Circuit,
    GateKind,
    SearchSpec,
    build_grover,
    build_iteration,
)
from grovercount.errors import ShapeError, SizeError

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(eq=False)
class State:
    """An n-qubit register held as ``2**n`` complex128 amplitudes."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        _check_size(self.n)
        self.amplitudes = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << self.n,):
            raise ShapeError(
                f"expected {1 << self.n} amplitudes for n={self.n}, "
                f"got shape {self.amplitudes.shape}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.n

    def copy(self) -> State:
        return State(self.n, self.amplitudes.copy())

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _check_size(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_QUBITS:
        raise SizeError(f"qubit count must be an integer in [1, {MAX_QUBITS}], got {n!r}")


def _check_qubit(state: State, qubit: int) -> None:
    if not 0 <= qubit < state.n:
        raise IndexError(f"qubit {qubit} out of range for a {state.n}-qubit register")


def _pairs(state: State, qubit: int) -> np.ndarray:
    # axis 1 selects bit `qubit`; the view shares memory with the amplitudes
    return state.amplitudes.reshape(-1, 2, 1 << qubit)


def basis_state(n: int, index: int) -> State:
    _check_size(n)
    if not 0 <= index < (1 << n):
        raise IndexError(f"basis index {index} out of range for n={n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return State(n, amps)


def zero_state(n: int) -> State:
    return basis_state(n, 0)


def uniform_state(n: int) -> State:
    """Equal superposition over all ``2**n`` basis states."""
    _check_size(n)
    dim = 1 << n
    return State(n, np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))


def apply_hadamard(state: State, qubit: int) -> State:
    _check_qubit(state, qubit)
    view = _pairs(state, qubit)
    a = view[:, 0, :] * _INV_SQRT2
    b = view[:, 1, :] * _INV_SQRT2
    np.add(a, b, out=view[:, 0, :])
    np.subtract(a, b, out=view[:, 1, :])
    return state


def apply_x(state: State, qubit: int) -> State:
    _check_qubit(state, qubit)
    view = _pairs(state, qubit)
    tmp = view[:, 0, :].copy()
    view[:, 0, :] = view[:, 1, :]
    view[:, 1, :] = tmp
    return state


def apply_mcz(state: State) -> State:
    """Negate the amplitude of ``|1...1>``; a plain Z when n == 1."""
    state.amplitudes[-1] = -state.amplitudes[-1]
    return state


def apply_circuit(state: State, circuit: Circuit) -> State:
    if circuit.n != state.n:
        raise ShapeError(
            f"circuit acts on {circuit.n} qubits but the state has {state.n}"
        )
    for gate in circuit.gates:
        if gate.kind is GateKind.H:
            apply_hadamard(state, gate.qubit)
        elif gate.kind is GateKind.X:
            apply_x(state, gate.qubit)
        else:
            apply_mcz(state)
    return state


def success_probability_of(state: State, targets: Iterable[int]) -> float:
    """Total probability of measuring any of the basis states in ``targets``."""
    idx = np.fromiter(targets, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= state.dim):
        raise IndexError(f"target index out of range for n={state.n}")
    amps = state.amplitudes[np.unique(idx)]
    return float(np.sum(amps.real**2 + amps.imag**2))


def run_grover(spec: SearchSpec, k: int) -> State:
    """Evolve ``|0...0>`` through the full Grover circuit with ``k`` iterations."""
    return apply_circuit(zero_state(spec.n), build_grover(spec, k))


def grover_success_curve(spec: SearchSpec, k_max: int) -> list[float]:
    """Simulated success probability after each of ``0..k_max`` iterations.

    One state is stepped through the iterations, so the cost is that of a
    single ``k_max`` run.
    """
    state = apply_circuit(zero_state(spec.n), build_grover(spec, 0))
    step = build_iteration(spec)
    out = [success_probability_of(state, spec.targets)]
    for _ in range(k_max):
        apply_circuit(state, step)
        out.append(success_probability_of(state, spec.targets))
    return out
