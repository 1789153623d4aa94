"""Gate-list construction of the oracle, diffusion and full Grover circuits.

Circuits are flat, immutable gate sequences over the vocabulary
``{H, X, MCZ}``. The multi-controlled Z is kept as a primitive acting on
every qubit; nothing is decomposed and no ancillae are used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from grovercount.errors import ShapeError, SizeError

MAX_QUBITS = 24
MAX_MATRIX_QUBITS = 10


class GateKind(enum.Enum):
    H = "H"
    X = "X"
    MCZ = "MCZ"


class Gate(NamedTuple):
    kind: GateKind
    qubit: Optional[int] = None

    def __str__(self) -> str:
        if self.kind is GateKind.MCZ:
            return "MCZ"
        return f"{self.kind.value} q{self.qubit}"


def H(qubit: int) -> Gate:
    return Gate(GateKind.H, qubit)


def X(qubit: int) -> Gate:
    return Gate(GateKind.X, qubit)


MCZ = Gate(GateKind.MCZ)


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if g.kind is not GateKind.MCZ and not 0 <= g.qubit < self.n:
                raise IndexError(f"gate {g} references a qubit outside 0..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if not isinstance(other, Circuit):
            return NotImplemented
        if other.n != self.n:
            raise ShapeError(f"cannot join circuits on {self.n} and {other.n} qubits")
        return Circuit(self.n, self.gates + other.gates)

    def __mul__(self, times: int) -> Circuit:
        return Circuit(self.n, self.gates * times)

    def dump(self) -> str:
        """One gate per line: ``H q<i>``, ``X q<i>`` or ``MCZ``."""
        return "".join(f"{g}\n" for g in self.gates)

    @classmethod
    def parse(cls, n: int, text: str) -> Circuit:
        gates = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            if line == "MCZ":
                gates.append(MCZ)
                continue
            parts = line.split()
            if len(parts) != 2 or parts[0] not in ("H", "X") or not parts[1].startswith("q"):
                raise ValueError(f"line {lineno}: cannot parse gate {line!r}")
            gates.append(Gate(GateKind(parts[0]), int(parts[1][1:])))
        return cls(n, gates)


def _bits(index: int, n: int) -> str:
    return format(index, f"0{n}b")


@dataclass(frozen=True)
class SearchSpec:
    """A search problem: ``n`` qubits and the set of marked basis indices.

    ``targets`` is stored sorted ascending; that order fixes the oracle layout.
    """

    n: int
    targets: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or not 1 <= self.n <= MAX_QUBITS:
            raise SizeError(f"qubit count must be in [1, {MAX_QUBITS}], got {self.n!r}")
        targets = tuple(int(t) for t in self.targets)
        if not targets:
            raise ValueError("at least one target is required")
        if len(set(targets)) != len(targets):
            raise ValueError("duplicate targets")
        for t in targets:
            if not 0 <= t < (1 << self.n):
                raise IndexError(f"target {t} out of range for n={self.n}")
        object.__setattr__(self, "targets", tuple(sorted(targets)))

    @property
    def N(self) -> int:
        return 1 << self.n

    @property
    def M(self) -> int:
        return len(self.targets)

    @property
    def bitstrings(self) -> list[str]:
        return [_bits(t, self.n) for t in self.targets]

    @classmethod
    def from_bitstrings(cls, bitstrings: Sequence[str]) -> SearchSpec:
        """Targets written ket-style, leftmost character is qubit n-1."""
        if not bitstrings:
            raise ValueError("at least one target is required")
        n = len(bitstrings[0])
        for b in bitstrings:
            if len(b) != n or set(b) - {"0", "1"}:
                raise ValueError(f"bad bitstring {b!r}: need {n} characters of 0/1")
        return cls(n, tuple(int(b, 2) for b in bitstrings))

    @classmethod
    def random(cls, n: int, m: int, seed: int = 0) -> SearchSpec:
        """Draw ``m`` distinct targets without replacement from a seeded generator."""
        N = 1 << n
        if not 1 <= m <= N:
            raise ValueError(f"target count must be in [1, {N}], got {m}")
        rng = np.random.default_rng(seed)
        return cls(n, tuple(int(t) for t in rng.choice(N, size=m, replace=False)))


def build_single_oracle(n: int, target: int) -> Circuit:
    """Phase flip on one basis state: X-conjugated MCZ.

    X gates go on every qubit whose bit in ``target`` is 0, mapping the
    target onto ``|1...1>`` for the MCZ and back afterwards.
    """
    if not 0 <= target < (1 << n):
        raise IndexError(f"target {target} out of range for n={n}")
    flips = [X(q) for q in range(n) if not (target >> q) & 1]
    return Circuit(n, flips + [MCZ] + flips)


def build_oracle(spec: SearchSpec) -> Circuit:
    gates: list[Gate] = []
    for t in spec.targets:
        gates.extend(build_single_oracle(spec.n, t).gates)
    return Circuit(spec.n, gates)


def hadamard_layer(n: int) -> Circuit:
    return Circuit(n, [H(q) for q in range(n)])


def build_diffusion(n: int) -> Circuit:
    """Reflection ``1 - 2|s><s|``, i.e. the usual diffusion up to a global sign."""
    layer = hadamard_layer(n)
    return layer + build_single_oracle(n, 0) + layer


def build_iteration(spec: SearchSpec) -> Circuit:
    return build_oracle(spec) + build_diffusion(spec.n)


def build_grover(spec: SearchSpec, k: int) -> Circuit:
    if k < 0:
        raise ValueError(f"iteration count must be non-negative, got {k}")
    return hadamard_layer(spec.n) + build_iteration(spec) * k


_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def gate_matrix(gate: Gate, n: int) -> np.ndarray:
    """Dense ``2**n`` unitary of a single gate."""
    if gate.kind is GateKind.MCZ:
        diag = np.ones(1 << n, dtype=np.complex128)
        diag[-1] = -1.0
        return np.diag(diag)
    local = _H if gate.kind is GateKind.H else _X
    out = np.ones((1, 1), dtype=np.complex128)
    # kron order runs from the most significant qubit down to qubit 0
    for q in reversed(range(n)):
        out = np.kron(out, local if q == gate.qubit else np.eye(2))
    return out


def to_matrix(circuit: Circuit | Iterable[Gate], n: Optional[int] = None) -> np.ndarray:
    """Product of the gate matrices in application order."""
    if isinstance(circuit, Circuit):
        n = circuit.n
    elif n is None:
        raise ValueError("n is required when passing a bare gate list")
    if n > MAX_MATRIX_QUBITS:
        raise SizeError(f"dense matrices are limited to n <= {MAX_MATRIX_QUBITS}, got {n}")
    u = np.eye(1 << n, dtype=np.complex128)
    for gate in circuit:
        u = gate_matrix(gate, n) @ u
    return u
