"""Statevector simulation and exact iteration planning for Grover's search."""

from grovercount.circuit import (
    Circuit,
    Gate,
    GateKind,
    SearchSpec,
    build_diffusion,
    build_grover,
    build_oracle,
    build_single_oracle,
    to_matrix,
)
from grovercount.errors import DomainError, ShapeError, SizeError
from grovercount.planner import (
    AnalyticState,
    BoundReport,
    Plan,
    achievable_bound,
    analytic_state,
    baseline_k,
    k_p,
    plan,
    success_probability,
    theta,
)
from grovercount.statevector import (
    MAX_QUBITS,
    State,
    apply_circuit,
    apply_hadamard,
    apply_mcz,
    apply_x,
    success_probability_of,
    uniform_state,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticState",
    "BoundReport",
    "Circuit",
    "DomainError",
    "Gate",
    "GateKind",
    "MAX_QUBITS",
    "Plan",
    "SearchSpec",
    "ShapeError",
    "SizeError",
    "State",
    "achievable_bound",
    "analytic_state",
    "apply_circuit",
    "apply_hadamard",
    "apply_mcz",
    "apply_x",
    "baseline_k",
    "build_diffusion",
    "build_grover",
    "build_oracle",
    "build_single_oracle",
    "k_p",
    "plan",
    "success_probability",
    "success_probability_of",
    "theta",
    "to_matrix",
    "uniform_state",
]
