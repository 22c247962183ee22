"""Discrete norms, conserved quantities, weighted-derivative norms, decay fits.

All quantities use the discrete L^q norm ||f||_q^q = dx * sum_j |f_j|^q.  The
energy functional whose exact step-to-step preservation the scheme is built
around is

    E(u, v) = ||D+ u||_2^2 + ||D+ v||_2^2
              + (||u||_{2p+2}^{2p+2} + ||v||_{2p+2}^{2p+2}) / (p+1)
              + (2 beta / (p+1)) * dx * sum_j |u_j|^(p+1) |v_j|^(p+1)

with the one-sided forward difference in the gradient terms.

The weighted norm ||(x + 2it d/dx)^m f||_2 tracks the growth of weighted
regularity; it is undefined at t = 0, where the limit ||x^m f||_2 applies
(see :func:`j_norm_initial`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .grid import Grid, d_center, d_plus

__all__ = [
    "DiagnosticsRecord",
    "DecayFit",
    "lp_norm",
    "linf_norm",
    "mass",
    "energy",
    "j_norm",
    "j_norm_initial",
    "fit_decay",
    "collect_record",
]

J_NORM_MAX_ORDER = 3  # repeated centered differencing degrades beyond this


@dataclass(frozen=True)
class DiagnosticsRecord:
    """Per-sample-time norms and conserved quantities."""

    t: float
    mass_u: float
    mass_v: float
    energy: float
    linf_u: float
    linf_v: float
    l2p2_u: float
    l2p2_v: float
    j_norm_u: Optional[float]
    j_norm_v: Optional[float]
    picard_iters: int


@dataclass(frozen=True)
class DecayFit:
    """Least-squares power-law fit value ~ C * t^slope over a time window."""

    slope: float
    intercept: float
    r_squared: float
    window: tuple[float, float]


def lp_norm(f: np.ndarray, dx: float, q: float) -> float:
    """Discrete L^q norm (dx * sum |f_j|^q)^(1/q)."""
    if q < 1:
        raise ValueError(f"norm exponent must satisfy q >= 1, got {q}")
    return float((dx * np.sum(np.abs(f) ** q)) ** (1.0 / q))


def linf_norm(f: np.ndarray) -> float:
    if len(f) == 0:
        raise ValueError("empty field")
    return float(np.max(np.abs(f)))


def mass(f: np.ndarray, dx: float) -> float:
    """dx * sum |f_j|^2, the squared discrete L^2 norm."""
    return float(dx * np.sum(f.real**2 + f.imag**2))


def energy(pair, grid: Grid, p: int, beta: float) -> float:
    """Discrete energy E(u, v); exactly symmetric under (u, v) swap.

    The per-field subtotals are formed first so that beta = 0 splits exactly
    into the sum of two single-field energies.
    """
    dx = grid.dx
    half = (p + 1) // 2

    def single(f: np.ndarray) -> float:
        grad = d_plus(f, grid)
        a2 = f.real**2 + f.imag**2
        return float(
            dx * np.sum(grad.real**2 + grad.imag**2) + dx * np.sum(a2 ** (p + 1)) / (p + 1)
        )

    au = pair.u.real**2 + pair.u.imag**2
    av = pair.v.real**2 + pair.v.imag**2
    cross = (2.0 * beta / (p + 1)) * dx * float(np.sum(au**half * av**half))
    return (single(pair.u) + single(pair.v)) + cross


def j_norm(f: np.ndarray, grid: Grid, t: float, m: int = 1) -> float:
    """Discrete L^2 norm of (x + 2it D_c)^m f, the weighted-derivative diagnostic.

    Supported for 1 <= m <= 3; accuracy of the repeated centered difference
    degrades with m.  Undefined at t = 0 (use :func:`j_norm_initial`).
    """
    if t == 0.0:
        raise ValueError("weighted norm undefined at t = 0; use j_norm_initial")
    if not 1 <= m <= J_NORM_MAX_ORDER:
        raise ValueError(f"m must be in 1..{J_NORM_MAX_ORDER}, got {m}")
    x = grid.nodes
    g = np.asarray(f, dtype=np.complex128)
    for _ in range(m):
        g = x * g + 2j * t * d_center(g, grid)
    return lp_norm(g, grid.dx, 2)


def j_norm_initial(f: np.ndarray, grid: Grid, m: int = 1) -> float:
    """The t -> 0 limit ||x^m f||_2 of the weighted norm."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return lp_norm(grid.nodes**m * np.asarray(f), grid.dx, 2)


def fit_decay(samples: Sequence[tuple[float, float]], t_min: float) -> DecayFit:
    """Ordinary least squares of log(value) on log(t) over samples with t > t_min."""
    if not t_min > 0.0:
        raise ValueError(f"t_min must be positive, got {t_min}")
    window = [(t, v) for t, v in samples if t > t_min]
    if len(window) < 5:
        raise ValueError(
            f"need at least 5 samples with t > {t_min}, got {len(window)}"
        )
    ts = np.array([t for t, _ in window])
    vals = np.array([v for _, v in window])
    if np.any(vals <= 0.0):
        raise ValueError("nonpositive values in fit window")
    if np.unique(ts).size < 2:
        raise ValueError("fit window must contain at least two distinct times")
    lt = np.log(ts)
    lv = np.log(vals)
    design = np.column_stack([lt, np.ones_like(lt)])
    (slope, intercept), *_ = np.linalg.lstsq(design, lv, rcond=None)
    pred = design @ np.array([slope, intercept])
    ss_res = float(np.sum((lv - pred) ** 2))
    ss_tot = float(np.sum((lv - np.mean(lv)) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return DecayFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r2,
        window=(float(t_min), float(np.max(ts))),
    )


def collect_record(
    state, grid: Grid, p: int, beta: float, picard_iters: int, j_norm_m: Optional[int] = None
) -> DiagnosticsRecord:
    """Assemble the full diagnostics row for one sampled state."""
    dx = grid.dx
    q = 2 * p + 2
    with_j = j_norm_m is not None and state.t != 0.0
    return DiagnosticsRecord(
        t=state.t,
        mass_u=mass(state.u, dx),
        mass_v=mass(state.v, dx),
        energy=energy(state, grid, p, beta),
        linf_u=linf_norm(state.u),
        linf_v=linf_norm(state.v),
        l2p2_u=lp_norm(state.u, dx, q),
        l2p2_v=lp_norm(state.v, dx, q),
        j_norm_u=j_norm(state.u, grid, state.t, j_norm_m) if with_j else None,
        j_norm_v=j_norm(state.v, grid, state.t, j_norm_m) if with_j else None,
        picard_iters=picard_iters,
    )
