"""Uniform 1-D mesh and the finite-difference operators acting on it.

Discrete fields are plain complex ndarrays of length ``grid.n_points``.
A *state* field additionally carries the boundary zeros

    f[0] = f[n-2] = f[n-1] = 0,

which emulate a homogeneous Dirichlet condition at both endpoints plus a
vanishing one-sided derivative at the right endpoint.  The one-sided
operators use ghost zeros beyond both ends of the array, so summation by
parts holds exactly: sum(D+f * conj(g)) == -sum(f * conj(D-g)) for all f, g.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Grid",
    "make_grid",
    "zero_field",
    "as_state",
    "check_state",
    "d_plus",
    "d_minus",
    "d_center",
    "d_xx",
]

MIN_POINTS = 8


@dataclass(frozen=True)
class Grid:
    """Uniform mesh on [x0, xf] with nodes x_j = x0 + j*dx."""

    x0: float
    xf: float
    n_points: int
    dx: float = field(init=False)

    def __post_init__(self):
        if not self.xf > self.x0:
            raise ValueError(f"degenerate domain: xf={self.xf} must exceed x0={self.x0}")
        if self.n_points < MIN_POINTS:
            raise ValueError(
                f"n_points={self.n_points} too small, need at least {MIN_POINTS}"
            )
        object.__setattr__(self, "dx", (self.xf - self.x0) / (self.n_points - 1))

    @property
    def nodes(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n_points)


def make_grid(x0: float, xf: float, n_points: int) -> Grid:
    return Grid(float(x0), float(xf), int(n_points))


def zero_field(grid: Grid) -> np.ndarray:
    return np.zeros(grid.n_points, dtype=np.complex128)


def as_state(values: np.ndarray) -> np.ndarray:
    """Copy of ``values`` with the three boundary nodes zeroed."""
    out = np.asarray(values, dtype=np.complex128).copy()
    out[0] = 0.0
    out[-2] = 0.0
    out[-1] = 0.0
    return out


def check_state(f: np.ndarray) -> bool:
    return f[0] == 0.0 and f[-2] == 0.0 and f[-1] == 0.0


def _check_length(f: np.ndarray, grid: Grid) -> np.ndarray:
    f = np.asarray(f, dtype=np.complex128)
    if f.shape != (grid.n_points,):
        raise ValueError(
            f"field length {f.shape} does not match grid n_points={grid.n_points}"
        )
    return f


def d_plus(f: np.ndarray, grid: Grid) -> np.ndarray:
    """Forward difference (f[j+1] - f[j]) / dx, ghost zero beyond the right end."""
    f = _check_length(f, grid)
    out = np.empty_like(f)
    out[:-1] = (f[1:] - f[:-1]) / grid.dx
    out[-1] = (0.0 - f[-1]) / grid.dx
    return out


def d_minus(f: np.ndarray, grid: Grid) -> np.ndarray:
    """Backward difference (f[j] - f[j-1]) / dx, ghost zero beyond the left end."""
    f = _check_length(f, grid)
    out = np.empty_like(f)
    out[1:] = (f[1:] - f[:-1]) / grid.dx
    out[0] = (f[0] - 0.0) / grid.dx
    return out


def d_center(f: np.ndarray, grid: Grid) -> np.ndarray:
    """Centered difference, the mean of the one-sided operators."""
    return (d_plus(f, grid) + d_minus(f, grid)) / 2.0


def d_xx(f: np.ndarray, grid: Grid) -> np.ndarray:
    """Second difference, defined as the composition D+ (D- f).

    Matches (f[j+1] - 2 f[j] + f[j-1]) / dx**2 at interior nodes and is exact
    there on cubics.
    """
    return d_plus(d_minus(f, grid), grid)
