"""Uniform-lattice samples of bivariate functions and axiom checking.

A LatticeFunction stores node values f(i/N, j/N) on the (N+1) x (N+1)
uniform lattice.  Node values (not cell masses) are stored because the
bounds in this package are defined pointwise; conversions are explicit.

check_properties audits the boundary conditions, coordinatewise
monotonicity, the 1-Lipschitz condition in each coordinate, and
2-increasingness.  Single-cell volumes suffice for the latter: every
rectangle volume of the bilinear interpolant is a sum of cell volumes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .core import Evaluator
from .errors import DomainError

# 12 significant digits: below verdict tolerances, above float noise.
_CSV_FORMAT = "{:.11e}"


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of auditing a lattice function against the (quasi-)copula axioms.

    boundary_max_err      worst absolute deviation from C(t,0)=C(0,t)=0,
                          C(t,1)=C(1,t)=t over edge nodes
    monotonicity_min_step most negative forward difference along either axis
    lipschitz_max_excess  max of |df| - du - dv over single-step lattice moves
                          (positive means a violation)
    min_volume            smallest single-cell volume
    min_volume_rect       (i1, j1, i2, j2) node indices of the minimizing cell
    """

    boundary_max_err: float
    monotonicity_min_step: float
    lipschitz_max_excess: float
    min_volume: float
    min_volume_rect: tuple[int, int, int, int]
    is_quasicopula: bool
    is_copula: bool


@dataclass(frozen=True)
class LatticeFunction:
    """Values of a bivariate function on the uniform (N+1) x (N+1) lattice."""

    N: int
    values: np.ndarray  # shape (N+1, N+1); values[i][j] = f(i/N, j/N)

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"lattice order must be >= 1, got {self.N}")
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (self.N + 1, self.N + 1):
            raise DomainError(
                f"values shape {vals.shape} does not match order N={self.N}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_evaluator(cls, f: Evaluator, N: int) -> "LatticeFunction":
        nodes = np.arange(N + 1, dtype=float) / N
        uu, vv = np.meshgrid(nodes, nodes, indexing="ij")
        return cls(N, np.asarray(f(uu, vv), dtype=float))

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.N + 1, dtype=float) / self.N

    def cell_volumes(self) -> np.ndarray:
        """Volumes of all N x N single cells of the bilinear interpolant."""
        v = self.values
        return v[1:, 1:] - v[1:, :-1] - v[:-1, 1:] + v[:-1, :-1]

    def to_csv(self, path) -> None:
        """Write `u,v,value` rows in row-major node order, 12 significant digits."""
        with open(path, "w", newline="\n") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["u", "v", "value"])
            nodes = self.nodes
            for i in range(self.N + 1):
                for j in range(self.N + 1):
                    writer.writerow(
                        [
                            _CSV_FORMAT.format(nodes[i]),
                            _CSV_FORMAT.format(nodes[j]),
                            _CSV_FORMAT.format(self.values[i, j]),
                        ]
                    )

    @classmethod
    def from_csv(cls, path) -> "LatticeFunction":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["u", "v", "value"]:
                raise DomainError(f"unexpected lattice CSV header: {header}")
            rows = [(float(r[0]), float(r[1]), float(r[2])) for r in reader]
        side = round(len(rows) ** 0.5)
        if side * side != len(rows) or side < 2:
            raise DomainError(
                f"lattice CSV has {len(rows)} rows, not a square node count"
            )
        n = side - 1
        values = np.empty((side, side))
        for k, (u, v, val) in enumerate(rows):
            i, j = divmod(k, side)
            if abs(u - i / n) > 1e-9 or abs(v - j / n) > 1e-9:
                raise DomainError(
                    f"row {k}: node ({u}, {v}) does not match row-major "
                    f"position ({i / n}, {j / n})"
                )
            values[i, j] = val
        return cls(n, values)


def check_properties(g: LatticeFunction, tol: float = 1e-9) -> PropertyReport:
    """Audit a lattice function against the quasi-copula and copula axioms.

    Verdicts use the single tolerance ``tol``: the function is a
    quasi-copula if boundary error, monotonicity and Lipschitz excess pass
    at tol, and a copula if additionally min_volume >= -tol.
    """
    v = g.values
    n = g.N
    nodes = g.nodes

    boundary = max(
        float(np.max(np.abs(v[:, 0]))),
        float(np.max(np.abs(v[0, :]))),
        float(np.max(np.abs(v[:, n] - nodes))),
        float(np.max(np.abs(v[n, :] - nodes))),
    )

    du = v[1:, :] - v[:-1, :]
    dv = v[:, 1:] - v[:, :-1]
    mono = min(float(du.min()), float(dv.min()))

    step = 1.0 / n
    lip = max(float(np.abs(du).max()), float(np.abs(dv).max())) - step

    vols = g.cell_volumes()
    flat = int(np.argmin(vols))
    i, j = divmod(flat, n)
    min_vol = float(vols[i, j])

    is_quasi = boundary <= tol and mono >= -tol and lip <= tol
    is_cop = is_quasi and min_vol >= -tol

    return PropertyReport(
        boundary_max_err=boundary,
        monotonicity_min_step=mono,
        lipschitz_max_excess=lip,
        min_volume=min_vol,
        min_volume_rect=(i, j, i + 1, j + 1),
        is_quasicopula=is_quasi,
        is_copula=is_cop,
    )
