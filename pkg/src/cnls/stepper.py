"""Implicit midpoint time stepping for the coupled defocusing NLS system

    i u_t + u_xx = (|u|^(2p) + beta |u|^(p-1) |v|^(p+1)) u
    i v_t + v_xx = (|v|^(2p) + beta |v|^(p-1) |u|^(p+1)) v

One step advances both fields through the nonlinear implicit equations

    i (u' - u)/dt + Dxx (u' + u)/2 = W(u, u', v, v') (u' + u)/2     (u <-> v)

where W is the real coefficient array from :mod:`cnls.nonlinear`.  Because W
is a difference quotient of the potential, the converged step conserves the
discrete mass dx*sum|u|^2 of each field and the discrete energy exactly (up
to roundoff and the Picard tolerance).

The nonlinearity is resolved by Picard fixed-point iteration.  Each sweep
freezes W for both fields at the current iterate (Jacobi style, preserving
the u<->v symmetry), then solves one complex tridiagonal system per field:

    [i/dt + Dxx/2 - W/2] u' = [i/dt - Dxx/2 + W/2] u

Rows 0, n-2, n-1 are identity rows pinning the boundary zeros.  Iteration
stops when the max-norm of the increment over both fields drops below
``picard_tol``; the initial guess is the previous time level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .diagnostics import DiagnosticsRecord, collect_record
from .grid import Grid, check_state
from .nonlinear import assemble_coeffs
from .tridiag import TridiagonalSystem, residual, solve

__all__ = [
    "SchemeParams",
    "FieldPair",
    "StepReport",
    "PicardDivergedError",
    "step",
    "evolve",
]

_EPS = float(np.finfo(np.float64).eps)


class PicardDivergedError(ArithmeticError):
    """Fixed-point iteration failed to reach tolerance within the sweep limit."""

    def __init__(self, message: str, increment: float, iters: int):
        super().__init__(message)
        self.increment = increment
        self.iters = iters


@dataclass(frozen=True)
class SchemeParams:
    """Everything governing one time step.

    dt may be negated to run the scheme backward (time-reversal checks);
    configuration files only accept 0 < dt < 1.
    """

    p: int
    beta: float
    dt: float
    t_final: float
    picard_tol: float = 1e-12
    picard_max_iters: int = 100

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or self.p < 1 or self.p % 2 == 0:
            raise ValueError(f"p must be an odd integer >= 1, got {self.p!r}")
        if not 0.0 < abs(self.dt) < 1.0:
            raise ValueError(f"time step must satisfy 0 < |dt| < 1, got dt={self.dt}")
        if self.picard_tol < 10.0 * _EPS:
            raise ValueError(
                f"picard_tol={self.picard_tol:g} below 10*machine epsilon {10 * _EPS:g}"
            )
        if self.picard_max_iters < 1:
            raise ValueError("picard_max_iters must be positive")
        if not self.t_final > 0.0:
            raise ValueError(f"t_final must be positive, got {self.t_final}")


@dataclass(frozen=True)
class FieldPair:
    """The two complex fields at one time level."""

    u: np.ndarray
    v: np.ndarray
    t: float

    def __post_init__(self):
        if self.u.shape != self.v.shape:
            raise ValueError("u and v must share one grid length")
        if not (check_state(self.u) and check_state(self.v)):
            raise ValueError("fields must carry the boundary zeros f[0]=f[-2]=f[-1]=0")


@dataclass(frozen=True)
class StepReport:
    picard_iters: int
    final_increment: float
    linear_residual: float


def _field_system(
    f_old: np.ndarray, w: np.ndarray, grid: Grid, dt: float
) -> TridiagonalSystem:
    """Tridiagonal system for one field with frozen coefficient array w."""
    n = grid.n_points
    inv_dx2 = 1.0 / grid.dx**2
    main = np.full(n, 1j / dt - inv_dx2, dtype=np.complex128)
    main -= w / 2.0
    sub = np.full(n - 1, inv_dx2 / 2.0, dtype=np.complex128)
    sup = sub.copy()

    lap = np.zeros(n, dtype=np.complex128)
    lap[1:-1] = (f_old[2:] - 2.0 * f_old[1:-1] + f_old[:-2]) * inv_dx2
    rhs = (1j / dt) * f_old - lap / 2.0 + (w / 2.0) * f_old

    # identity rows pin the boundary zeros
    for j in (0, n - 2, n - 1):
        main[j] = 1.0
        rhs[j] = 0.0
    sup[0] = 0.0
    sup[n - 2] = 0.0
    sub[n - 3] = 0.0
    sub[n - 2] = 0.0
    return TridiagonalSystem(sub=sub, main=main, sup=sup, rhs=rhs)


def step(state: FieldPair, params: SchemeParams, grid: Grid) -> tuple[FieldPair, StepReport]:
    """Advance (u, v) from state.t to state.t + dt."""
    u_old, v_old = state.u, state.v
    u_new, v_new = u_old.copy(), v_old.copy()
    worst_residual = 0.0
    increment = np.inf
    for it in range(1, params.picard_max_iters + 1):
        wu = assemble_coeffs(u_old, u_new, v_old, v_new, params.p, params.beta).total
        wv = assemble_coeffs(v_old, v_new, u_old, u_new, params.p, params.beta).total
        sys_u = _field_system(u_old, wu, grid, params.dt)
        sys_v = _field_system(v_old, wv, grid, params.dt)
        u_next = solve(sys_u)
        v_next = solve(sys_v)
        worst_residual = max(
            worst_residual, residual(sys_u, u_next), residual(sys_v, v_next)
        )
        increment = max(
            float(np.max(np.abs(u_next - u_new))), float(np.max(np.abs(v_next - v_new)))
        )
        u_new, v_new = u_next, v_next
        if increment < params.picard_tol:
            report = StepReport(
                picard_iters=it, final_increment=increment, linear_residual=worst_residual
            )
            return FieldPair(u=u_new, v=v_new, t=state.t + params.dt), report
    raise PicardDivergedError(
        f"no convergence after {params.picard_max_iters} sweeps, "
        f"increment={increment:.3e} >= tol={params.picard_tol:g}",
        increment=float(increment),
        iters=params.picard_max_iters,
    )


SinkFn = Callable[[int, DiagnosticsRecord, FieldPair], None]


def evolve(
    initial: FieldPair,
    params: SchemeParams,
    grid: Grid,
    sample_every: int = 1,
    sink: Optional[SinkFn] = None,
    j_norm_m: Optional[int] = None,
) -> FieldPair:
    """Run the stepper until t >= t_final, sampling diagnostics along the way.

    The sink is called as sink(step_index, record, state) after every
    ``sample_every``-th step and after the final step.  All sampled records
    have t > initial.t, so the weighted-derivative norms are well defined
    whenever ``j_norm_m`` is set.  Raises step errors annotated with the step
    index and time.
    """
    if sample_every < 1:
        raise ValueError("sample_every must be a positive integer")
    span = params.t_final - initial.t
    if span < 0.0:
        raise ValueError(f"t_final={params.t_final} precedes initial time {initial.t}")
    n_steps = int(np.ceil(span / params.dt - 1e-9)) if span > 0.0 else 0

    state = initial
    for n in range(1, n_steps + 1):
        try:
            state, report = step(state, params, grid)
        except PicardDivergedError as exc:
            raise PicardDivergedError(
                f"step {n} (t={initial.t + n * params.dt:.6g}): {exc}",
                increment=exc.increment,
                iters=exc.iters,
            ) from exc
        except ArithmeticError as exc:
            raise type(exc)(
                f"step {n} (t={initial.t + n * params.dt:.6g}): {exc}"
            ) from exc
        state = FieldPair(u=state.u, v=state.v, t=initial.t + n * params.dt)
        if sink is not None and (n % sample_every == 0 or n == n_steps):
            record = collect_record(
                state, grid, params.p, params.beta, report.picard_iters, j_norm_m
            )
            sink(n, record, state)
    return state
