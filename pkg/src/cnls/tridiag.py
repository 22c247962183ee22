"""Complex tridiagonal systems and their direct solution.

Thomas elimination without pivoting: the time-stepping matrices carry i/dt on
the diagonal and are strictly diagonally dominant for small dt, so pivoting is
unnecessary.  A pivot magnitude below ``PIVOT_FLOOR`` aborts with
:class:`SingularPivotError` instead of propagating NaNs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

__all__ = ["TridiagonalSystem", "SingularPivotError", "solve", "residual", "PIVOT_FLOOR"]

PIVOT_FLOOR = 1e-300


class SingularPivotError(ArithmeticError):
    """Forward elimination hit a pivot below the floor; the step is ill-posed."""


def _as_c128(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.complex128)


@dataclass
class TridiagonalSystem:
    """Sub/main/super diagonals and right-hand side of T x = rhs."""

    sub: np.ndarray
    main: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        self.sub = _as_c128(self.sub)
        self.main = _as_c128(self.main)
        self.sup = _as_c128(self.sup)
        self.rhs = _as_c128(self.rhs)
        n = self.main.size
        if n < 1:
            raise ValueError("system size must be at least 1")
        if self.sub.size != n - 1 or self.sup.size != n - 1 or self.rhs.size != n:
            raise ValueError(
                f"inconsistent lengths: main={n}, sub={self.sub.size}, "
                f"sup={self.sup.size}, rhs={self.rhs.size}"
            )

    @property
    def n(self) -> int:
        return self.main.size


@njit(cache=True)
def _thomas(sub, main, sup, rhs, pivot_floor):  # pragma: no cover - jitted
    n = main.size
    x = np.empty(n, dtype=np.complex128)
    if abs(main[0]) < pivot_floor:
        return x, 0
    if n == 1:
        x[0] = rhs[0] / main[0]
        return x, -1
    c = np.empty(n - 1, dtype=np.complex128)
    d = np.empty(n, dtype=np.complex128)
    c[0] = sup[0] / main[0]
    d[0] = rhs[0] / main[0]
    for j in range(1, n):
        piv = main[j] - sub[j - 1] * c[j - 1]
        if abs(piv) < pivot_floor:
            return x, j
        if j < n - 1:
            c[j] = sup[j] / piv
        d[j] = (rhs[j] - sub[j - 1] * d[j - 1]) / piv
    x[n - 1] = d[n - 1]
    for j in range(n - 2, -1, -1):
        x[j] = d[j] - c[j] * x[j + 1]
    return x, -1


def solve(sys: TridiagonalSystem) -> np.ndarray:
    """Solve T x = rhs by forward elimination and back substitution."""
    x, bad = _thomas(sys.sub, sys.main, sys.sup, sys.rhs, PIVOT_FLOOR)
    if bad >= 0:
        raise SingularPivotError(
            f"pivot magnitude below {PIVOT_FLOOR:g} at row {bad} of {sys.n}"
        )
    return x


def residual(sys: TridiagonalSystem, x: np.ndarray) -> float:
    """Max-norm of T x - rhs."""
    x = _as_c128(x)
    if x.size != sys.n:
        raise ValueError(f"solution length {x.size} does not match system size {sys.n}")
    tx = sys.main * x
    if sys.n > 1:
        tx[:-1] += sys.sup * x[1:]
        tx[1:] += sys.sub * x[:-1]
    return float(np.max(np.abs(tx - sys.rhs)))
