"""Catalog of initial conditions.

Kinds:

* ``example1``   -- the bundled p=3 soliton-collision profile,
                    u = 1.2*sqrt(2) e^{1.3ix/4} sech(1.2x + 10),
                    v = sqrt(2) e^{-1.3ix/4} sech(x - 10).
* ``menyuk``     -- two-parameter collision family
                    u = A1 sech(A1 (x - s1)) e^{i delta x / 2},
                    v = A2 sech(A2 (x - s2)) e^{-i delta x / 2}.
                    A documented stand-in family covering the usual
                    (A1, A2, s1, s2, delta) parameters; outputs are labeled
                    "menyuk-family" without claiming fidelity to any external
                    formula set.
* ``sech_pair``  -- a1 sech((x - s1)/w1) e^{i delta x/2} and the mirrored v.
* ``gaussian``   -- a1 exp(-(x - s1)^2 / (2 w1^2)) e^{i delta x/2}, mirrored v.
* ``zero``       -- both fields identically zero.
* ``from_file``  -- restart from a snapshot file (bit-exact).

Profiles are sampled at the grid nodes and must already be negligible at the
boundary: a boundary modulus above 1e-10 of the field's peak raises
:class:`DomainTooSmallError` rather than silently contaminating the run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .grid import Grid, as_state, zero_field
from .snapshots import read_snapshot
from .stepper import FieldPair

__all__ = ["InitialSpec", "DomainTooSmallError", "build", "KINDS"]

KINDS = ("example1", "menyuk", "sech_pair", "gaussian", "zero", "from_file")

BOUNDARY_TOL = 1e-10

_REQUIRED = {
    "example1": (),
    "menyuk": ("a1", "a2", "s1", "s2", "delta"),
    "sech_pair": ("a1", "a2", "w1", "w2", "s1", "s2", "delta"),
    "gaussian": ("a1", "a2", "w1", "w2", "s1", "s2", "delta"),
    "zero": (),
    "from_file": (),
}


class DomainTooSmallError(ValueError):
    """Profile is not negligible at the boundary of the requested domain."""


@dataclass(frozen=True)
class InitialSpec:
    kind: str
    params: Mapping[str, float] = field(default_factory=dict)
    path: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown initial-condition kind {self.kind!r}, know {KINDS}")
        missing = [k for k in _REQUIRED[self.kind] if k not in self.params]
        if missing:
            raise ValueError(
                f"initial condition {self.kind!r} missing parameters: {', '.join(missing)}"
            )
        if self.kind == "from_file" and not self.path:
            raise ValueError("initial condition 'from_file' requires a path")


def _sech(a: np.ndarray) -> np.ndarray:
    # 2 e^{-|a|} / (1 + e^{-2|a|}): no overflow for large |a|
    e = np.exp(-np.abs(a))
    return 2.0 * e / (1.0 + e * e)


def _guard_boundary(f: np.ndarray, name: str, grid: Grid) -> None:
    peak = float(np.max(np.abs(f)))
    edge = float(max(abs(f[0]), abs(f[-2]), abs(f[-1])))
    if edge > BOUNDARY_TOL * peak:
        raise DomainTooSmallError(
            f"{name} has boundary modulus {edge:.3e} > {BOUNDARY_TOL:g} * peak "
            f"{peak:.3e} on [{grid.x0}, {grid.xf}]; enlarge the domain"
        )


def build(spec: InitialSpec, grid: Grid) -> FieldPair:
    """Sample the requested profile on the grid and return the t = 0 state."""
    if spec.kind == "zero":
        return FieldPair(u=zero_field(grid), v=zero_field(grid), t=0.0)

    if spec.kind == "from_file":
        pair, snap_grid = read_snapshot(spec.path)
        if (
            snap_grid.n_points != grid.n_points
            or snap_grid.x0 != grid.x0
            or snap_grid.dx != grid.dx
        ):
            raise ValueError(
                f"snapshot grid (x0={snap_grid.x0}, dx={snap_grid.dx}, "
                f"n={snap_grid.n_points}) does not match the configured grid"
            )
        return pair

    x = grid.nodes
    q = spec.params
    if spec.kind == "example1":
        u = 1.2 * np.sqrt(2.0) * np.exp(1.3j * x / 4.0) * _sech(1.2 * x + 10.0)
        v = np.sqrt(2.0) * np.exp(-1.3j * x / 4.0) * _sech(x - 10.0)
    elif spec.kind == "menyuk":
        u = q["a1"] * _sech(q["a1"] * (x - q["s1"])) * np.exp(0.5j * q["delta"] * x)
        v = q["a2"] * _sech(q["a2"] * (x - q["s2"])) * np.exp(-0.5j * q["delta"] * x)
    elif spec.kind == "sech_pair":
        u = q["a1"] * _sech((x - q["s1"]) / q["w1"]) * np.exp(0.5j * q["delta"] * x)
        v = q["a2"] * _sech((x - q["s2"]) / q["w2"]) * np.exp(-0.5j * q["delta"] * x)
    elif spec.kind == "gaussian":
        u = q["a1"] * np.exp(-((x - q["s1"]) ** 2) / (2.0 * q["w1"] ** 2)) * np.exp(
            0.5j * q["delta"] * x
        )
        v = q["a2"] * np.exp(-((x - q["s2"]) ** 2) / (2.0 * q["w2"] ** 2)) * np.exp(
            -0.5j * q["delta"] * x
        )
    else:  # unreachable, kinds validated in InitialSpec
        raise AssertionError(spec.kind)

    u = u.astype(np.complex128)
    v = v.astype(np.complex128)
    _guard_boundary(u, "u(x,0)", grid)
    _guard_boundary(v, "v(x,0)", grid)
    return FieldPair(u=as_state(u), v=as_state(v), t=0.0)
