"""Linear-programming certification of the closed-form envelopes.

Checkerboard copulas of order n form a polytope (nonnegative mass,
uniform margins), and both Gini's gamma and the CDF value at a fixed
point are affine in the mass matrix.  Extremizing C(u, v) subject to
gamma = t is therefore an exact LP whose optimum is the discrete
counterpart of the pointwise envelope: a sound inner bound (checkerboards
are copulas) that converges as n grows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .checkerboard import Checkerboard, gamma_checkerboard_exact, gamma_coefficients
from .errors import DomainError, InternalError
from .simplex import solve_equality_lp

_GAMMA_RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class LpOutcome:
    direction: str  # "min" | "max"
    optimum: Optional[float]
    argument: Optional[Checkerboard]
    status: str  # "optimal" | "infeasible"


def _margin_rows(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Equality rows forcing uniform 1/n row and column sums."""
    rows = np.zeros((2 * n, n * n))
    for i in range(n):
        rows[i, i * n : (i + 1) * n] = 1.0  # row i of the mass matrix
        rows[n + i, i::n] = 1.0  # column i
    rhs = np.full(2 * n, 1.0 / n)
    return rows, rhs


def _point_coefficients(n: int, u: float, v: float) -> np.ndarray:
    idx = np.arange(n, dtype=float)
    ramp_u = np.clip(n * u - idx, 0.0, 1.0)
    ramp_v = np.clip(n * v - idx, 0.0, 1.0)
    return np.outer(ramp_u, ramp_v).ravel()


def lp_extreme(n: int, u: float, v: float, t: float, direction: str) -> LpOutcome:
    """Extreme value of C(u, v) over order-n checkerboards with gamma = t.

    Infeasibility (t unreachable at order n) is a legitimate outcome and is
    reported through ``status``; small orders cannot reach gamma near +-1.
    """
    if n < 2:
        raise DomainError(f"oracle order must be >= 2, got {n}")
    if direction not in ("min", "max"):
        raise DomainError(f"direction must be 'min' or 'max', got {direction!r}")
    if not (0.0 <= u <= 1.0 and 0.0 <= v <= 1.0):
        raise DomainError(f"point ({u}, {v}) is outside the unit square")
    if not -1.0 <= t <= 1.0:
        raise DomainError(f"gamma target t={t} outside [-1, 1]")

    margin_a, margin_b = _margin_rows(n)
    gamma_row = gamma_coefficients(n).ravel()
    A = np.vstack([margin_a, gamma_row])
    b = np.concatenate([margin_b, [t + 2.0]])
    c = _point_coefficients(n, u, v)

    result = solve_equality_lp(
        c, A, b, maximize=(direction == "max"), max_iterations=10 * n**4
    )
    if result.status == "infeasible":
        return LpOutcome(direction, None, None, "infeasible")

    board = Checkerboard(n, result.x.reshape(n, n))
    residual = abs(gamma_checkerboard_exact(board) - t)
    if residual > _GAMMA_RESIDUAL_TOL:
        raise InternalError(
            f"optimal checkerboard misses the gamma target by {residual:.3e}"
        )
    return LpOutcome(direction, result.objective, board, "optimal")


def gamma_feasible_range(n: int) -> tuple[float, float]:
    """Attainable gamma range over order-n checkerboards (an exact LP pair)."""
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    margin_a, margin_b = _margin_rows(n)
    gamma_row = gamma_coefficients(n).ravel()
    lo = solve_equality_lp(gamma_row, margin_a, margin_b, maximize=False)
    hi = solve_equality_lp(gamma_row, margin_a, margin_b, maximize=True)
    if lo.status != "optimal" or hi.status != "optimal":
        raise InternalError("margin polytope should always be feasible")
    return lo.objective - 2.0, hi.objective - 2.0
