"""Closed-form Gini's gamma of the lower point-bound copula.

The gamma of the copula max(0, u+v-1, theta - (a-u)^+ - (b-v)^+) splits
into an anti-diagonal integral I1 (a single expression) and a diagonal
integral I2 (five cases, after reducing to b <= a by symmetry); the
resulting gamma is a five-branch piecewise quadratic in (a, b, theta).
Branch conditions compare the larger coordinate with theta + 1/2,
theta + smaller coordinate and (1 + theta)/2; adjacent branches agree on
shared boundaries, and branch selection takes the first condition that
holds, in the listed order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PointBoundSpec
from .errors import InternalError


@dataclass(frozen=True)
class GammaBranchValue:
    """Gamma value of a lower point-bound copula plus the branch that produced it."""

    branch: int  # 1..5
    value: float


def i1_closed(spec: PointBoundSpec) -> float:
    """Anti-diagonal integral of the lower point-bound copula: theta*(1-a-b+theta)."""
    return spec.theta * (1.0 - spec.a - spec.b + spec.theta)


def _i2_cases(x: float, m: float, theta: float) -> tuple[int, float]:
    # x = larger coordinate, m = smaller; conditions in listed order.
    if x >= 0.5 + theta:
        return 1, 0.25
    if x >= max(m + theta, (1.0 + theta) / 2.0):
        return 2, 0.25 + (x - theta - 0.5) ** 2
    if m + theta <= x <= (1.0 + theta) / 2.0:
        return 3, (1.0 + 2.0 * theta - 4.0 * x * theta + 3.0 * theta**2) / 4.0
    if (1.0 + theta) / 2.0 <= x <= m + theta:
        return 4, ((theta + 1.0 - x - m) * (3.0 * theta - 3.0 * x + m + 1.0) + 1.0) / 4.0
    if x <= min(m + theta, (1.0 + theta) / 2.0):
        return (
            5,
            (1.0 - (x - m) ** 2) / 4.0
            + (1.0 - x - m) * theta / 2.0
            + theta**2 / 2.0,
        )
    raise InternalError(
        f"no diagonal-integral case matches (x={x}, m={m}, theta={theta}); "
        "the case conditions should be exhaustive for admissible theta"
    )


def i2_closed(spec: PointBoundSpec) -> float:
    """Diagonal integral of the lower point-bound copula (five-case closed form)."""
    x, m = max(spec.a, spec.b), min(spec.a, spec.b)
    return _i2_cases(x, m, spec.theta)[1]


def branch_value(branch: int, x: float, m: float, theta: float) -> float:
    """Gamma expression of one branch, evaluated without checking its condition.

    x and m are the larger and smaller of (a, b).
    """
    s = x + m
    base = 4.0 * theta**2 + 4.0 * theta * (1.0 - s) - 1.0
    if branch == 1:
        return base
    if branch == 2:
        return (2.0 * x - 2.0 * theta - 1.0) ** 2 + base
    if branch == 3:
        return 2.0 * theta - 4.0 * x * theta + 7.0 * theta**2 + 4.0 * theta * (1.0 - s) - 1.0
    if branch == 4:
        return (
            (s - 1.0 - 4.0 * theta) ** 2
            + 2.0 * (s - 1.0 - theta) * (x - m)
            - 9.0 * theta**2
            - 1.0
        )
    if branch == 5:
        return 6.0 * theta**2 + 6.0 * theta * (1.0 - s) - (x - m) ** 2 - 1.0
    raise InternalError(f"branch index {branch} not in 1..5")


def branch_condition(branch: int, x: float, m: float, theta: float) -> bool:
    """Whether the stated condition of ``branch`` holds at (x, m, theta)."""
    if branch == 1:
        return 0.5 + theta <= x
    if branch == 2:
        return max(m + theta, (1.0 + theta) / 2.0) <= x <= 0.5 + theta
    if branch == 3:
        return m + theta <= x <= (1.0 + theta) / 2.0
    if branch == 4:
        return (1.0 + theta) / 2.0 <= x <= m + theta
    if branch == 5:
        return x <= min(m + theta, (1.0 + theta) / 2.0)
    raise InternalError(f"branch index {branch} not in 1..5")


def lower_point_bound_gamma(spec: PointBoundSpec) -> GammaBranchValue:
    """Gini's gamma of the lower point-bound copula, with the selected branch.

    Equals 4*(i1_closed + i2_closed) - 2; branch conditions overlap only on
    boundaries where adjacent expressions agree.
    """
    x, m = max(spec.a, spec.b), min(spec.a, spec.b)
    theta = spec.theta
    for branch in (1, 2, 3, 4, 5):
        if branch_condition(branch, x, m, theta):
            return GammaBranchValue(branch, branch_value(branch, x, m, theta))
    raise InternalError(
        f"no gamma branch matches spec (a={spec.a}, b={spec.b}, theta={theta}); "
        "conditions should be exhaustive for admissible theta"
    )
