"""Closed-form analysis of Grover iteration counts.

After ``k`` iterations the register sits at angle ``theta * (1 + 2k)`` from
the uniform superposition of non-targets, so the success probability is
``sin^2(theta * (1 + 2k))`` with ``sin(theta) = sqrt(M / N)``. The planner
picks the smallest iteration count that clears a threshold ``delta`` by
scanning the maxima of that curve in order, and reports when no iteration
count can clear it at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from grovercount.errors import DomainError

P_SCAN_CAP = 10**6
SET_TOL = 1e-12

# M/N ratios for which theta/pi is rational, with theta = a*pi/b.
# cos(2 theta) = 1 - 2M/N is rational, and by Niven's theorem a rational
# multiple of pi has rational cosine only at cosine 0, +-1/2, +-1.
_RATIONAL_ANGLES = {
    Fraction(1, 4): (1, 6),
    Fraction(1, 2): (1, 4),
    Fraction(3, 4): (1, 3),
    Fraction(1, 1): (1, 2),
}


def _check_problem(N: int, M: int) -> None:
    if not isinstance(N, int) or N < 2 or N & (N - 1):
        raise DomainError(f"database size must be a power of two >= 2, got {N!r}")
    if not isinstance(M, int) or not 1 <= M <= N:
        raise DomainError(f"target count must be in [1, {N}], got {M!r}")


def theta(N: int, M: int) -> float:
    """Initial angle ``arcsin(sqrt(M / N))`` in radians."""
    _check_problem(N, M)
    return math.asin(math.sqrt(M / N))


def success_probability(theta: float, k: int) -> float:
    return math.sin(theta * (1 + 2 * k)) ** 2


def k_p(theta: float, p: int) -> float:
    """Real-valued iteration count at the p-th maximum of the success curve."""
    return (2 * p + 1) * math.pi / (4 * theta) - 0.5


def baseline_k(N: int, M: int) -> int:
    """Textbook count ``round(pi/4 * sqrt(N/M) - 1/2)``, halves rounded away from zero."""
    _check_problem(N, M)
    x = math.pi / 4 * math.sqrt(N / M) - 0.5
    return max(0, math.floor(x + 0.5))


@dataclass(frozen=True)
class AnalyticState:
    theta_k: float
    target_weight: float
    nontarget_weight: float


def analytic_state(theta: float, k: int) -> AnalyticState:
    if k < 0:
        raise DomainError(f"iteration count must be non-negative, got {k}")
    angle = theta * (1 + 2 * k)
    s, c = math.sin(angle), math.cos(angle)
    return AnalyticState(angle, s * s, c * c)


@dataclass(frozen=True)
class BoundReport:
    """What success probabilities a given (N, M) can reach at all.

    For rational ``theta / pi = a / b`` only finitely many values occur;
    ``achievable_set`` lists them in descending order. Otherwise the values
    are dense in [0, 1] and the supremum 1 is approached but not reached.
    """

    N: int
    M: int
    rational: bool
    a_over_b: Optional[tuple[int, int]]
    achievable_set: Optional[tuple[float, ...]]
    supremum: float
    supremum_attained: bool


def rational_angle(N: int, M: int) -> Optional[tuple[int, int]]:
    """``(a, b)`` with ``theta = a*pi/b`` in lowest terms, or None if irrational."""
    _check_problem(N, M)
    return _RATIONAL_ANGLES.get(Fraction(M, N))


# cos(2x) for 2x = q*pi, q in [0, 2); only these occur for the angles above
_COS_PI_MULTIPLE = {
    Fraction(0): 1.0,
    Fraction(1, 3): 0.5,
    Fraction(1, 2): 0.0,
    Fraction(2, 3): -0.5,
    Fraction(1): -1.0,
    Fraction(4, 3): -0.5,
    Fraction(3, 2): 0.0,
    Fraction(5, 3): 0.5,
}


def _sin2_rational(a: int, b: int, k: int) -> float:
    """Exact ``sin^2(a(1+2k)pi/b)`` via ``(1 - cos 2x) / 2``, reduced in integers."""
    q = Fraction(2 * a * (1 + 2 * k), b) % 2
    return (1.0 - _COS_PI_MULTIPLE[q]) / 2


def achievable_bound(N: int, M: int) -> BoundReport:
    ab = rational_angle(N, M)
    if ab is None:
        return BoundReport(N, M, False, None, None, 1.0, False)
    a, b = ab
    values: list[float] = []
    for k in range(b):
        v = _sin2_rational(a, b, k)
        if all(abs(v - w) > SET_TOL for w in values):
            values.append(v)
    values.sort(reverse=True)
    return BoundReport(N, M, True, ab, tuple(values), values[0], True)


@dataclass(frozen=True)
class Plan:
    """Planner output.

    When ``attainable`` is false, ``k_opt`` and ``predicted_success`` hold the
    best iteration count found and ``p_opt`` is None; ``bound`` and
    ``reason`` explain why the threshold cannot be met.
    """

    N: int
    M: int
    theta: float
    delta: float
    p_opt: Optional[int]
    k_opt: int
    predicted_success: float
    attainable: bool
    degenerate_half: bool
    bound: Optional[BoundReport] = None
    reason: str = field(default="")


def _candidates(th: float, p: int) -> tuple[int, int]:
    kp = k_p(th, p)
    return max(0, math.floor(kp)), max(0, math.ceil(kp))


def plan(N: int, M: int, delta: float, p_cap: int = P_SCAN_CAP) -> Plan:
    """Smallest iteration count whose success probability reaches ``delta``.

    Maxima ``p = 0, 1, 2, ...`` are visited in order; at each, the floor and
    ceiling of the real-valued optimum are tried and the first maximum with a
    passing candidate wins, preferring the floor.

    >>> plan(16, 9, 0.95).k_opt
    4
    """
    if not isinstance(delta, (int, float)) or not 0.0 < delta <= 1.0:
        raise DomainError(f"threshold must lie in (0, 1], got {delta!r}")
    th = theta(N, M)

    if 2 * M == N:
        ok = delta <= 0.5
        return Plan(
            N, M, th, delta,
            p_opt=0 if ok else None,
            k_opt=0,
            predicted_success=0.5,
            attainable=ok,
            degenerate_half=True,
            bound=None if ok else achievable_bound(N, M),
            reason="" if ok else "success probability is 1/2 for every iteration count",
        )

    bound = achievable_bound(N, M)
    if bound.rational:
        a, b = bound.a_over_b

        def succ(k: int) -> float:
            return _sin2_rational(a, b, k)

        # success values repeat with period b in k, so maxima repeat too
        p_cap = min(p_cap, 4 * b)
        if delta > bound.supremum + SET_TOL:
            k_best = next(k for k in range(b) if succ(k) == bound.supremum)
            return Plan(
                N, M, th, delta, None, k_best, succ(k_best),
                attainable=False, degenerate_half=False, bound=bound,
                reason=f"threshold exceeds the achievable supremum {bound.supremum:.12g}",
            )
    else:

        def succ(k: int) -> float:
            return success_probability(th, k)

        if delta >= 1.0:
            p_cap = min(p_cap, 1000)

    best_k, best_s = 0, succ(0)
    for p in range(p_cap + 1):
        lo, hi = _candidates(th, p)
        s_lo, s_hi = succ(lo), succ(hi)
        if s_lo >= delta:
            return Plan(N, M, th, delta, p, lo, s_lo, True, False)
        if s_hi >= delta:
            return Plan(N, M, th, delta, p, hi, s_hi, True, False)
        for k, s in ((lo, s_lo), (hi, s_hi)):
            if s > best_s:
                best_k, best_s = k, s
    if not bound.rational and delta >= 1.0:
        reason = "success probability 1 is approached but never reached for this (N, M)"
    else:
        reason = f"no maximum up to p={p_cap} reaches the threshold"
    return Plan(
        N, M, th, delta, None, best_k, best_s,
        attainable=False, degenerate_half=False, bound=bound, reason=reason,
    )
