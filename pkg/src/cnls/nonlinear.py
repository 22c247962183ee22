"""Discrete nonlinear coefficients for the conservative scheme.

The implicit nonlinearity is a difference quotient of the potential between
two time levels.  Written literally it is 0/0 whenever |u_new| == |u_old|, so
both quotients are evaluated through their polynomial-sum factorizations,
which are total, never divide, and agree with the quotient wherever it is
defined:

    ratio_even(A, B) = (A**(p+1) - B**(p+1)) / (A - B) = sum_k A**k B**(p-k)
    ratio_half(A, B) = (A**((p+1)/2) - B**((p+1)/2)) / (A - B)
                     = sum_k A**k B**((p-1)/2 - k)

with A = |u_new|**2 and B = |u_old|**2.  Literal per-exponent factorizations
exist for each odd p; the Horner sums below generalize them to all odd p
without overflow-prone cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["NonlinCoeffs", "ratio_even", "ratio_half", "assemble_coeffs"]


def _check_p(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or p < 1 or p % 2 == 0:
        raise ValueError(f"nonlinearity exponent p must be an odd integer >= 1, got {p!r}")
    return int(p)


def _horner_sum(A, B, m: int):
    # sum_{k=0..m} A^k B^(m-k), accumulated as (((1)*A + B^1)*A + B^2)...
    r = np.ones_like(np.asarray(A, dtype=np.float64))
    bp = np.ones_like(r)
    for _ in range(m):
        bp = bp * B
        r = r * A + bp
    return r


def ratio_even(A, B, p: int):
    """(A^(p+1) - B^(p+1)) / (A - B) as a polynomial sum; (p+1) A^p at A == B."""
    p = _check_p(p)
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    out = np.where(A == B, (p + 1) * A**p, _horner_sum(A, B, p))
    return out if out.ndim else float(out)


def ratio_half(A, B, p: int):
    """(A^((p+1)/2) - B^((p+1)/2)) / (A - B); ((p+1)/2) A^((p-1)/2) at A == B."""
    p = _check_p(p)
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    m = (p - 1) // 2
    out = np.where(A == B, ((p + 1) // 2) * A**m, _horner_sum(A, B, m))
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class NonlinCoeffs:
    """Real scheme multipliers: rhs_j = (self_coeff + cross_coeff)_j * (u_new + u_old)_j / 2."""

    self_coeff: np.ndarray
    cross_coeff: np.ndarray

    @property
    def total(self) -> np.ndarray:
        return self.self_coeff + self.cross_coeff


def _abs2(f: np.ndarray) -> np.ndarray:
    return f.real**2 + f.imag**2


def assemble_coeffs(
    u_old: np.ndarray,
    u_new: np.ndarray,
    v_old: np.ndarray,
    v_new: np.ndarray,
    p: int,
    beta: float,
) -> NonlinCoeffs:
    """Coefficients of the equation for the first field pair (u_old, u_new).

    The equation for the second field is the same call with roles swapped.
    Divisors are already applied: the scheme's right-hand side is exactly
    (self_coeff + cross_coeff) * (u_new + u_old) / 2, where

        self_coeff  = ratio_even(|u_new|^2, |u_old|^2, p) / (p + 1)
        cross_coeff = beta * (|v_new|^(p+1) + |v_old|^(p+1))
                      * ratio_half(|u_new|^2, |u_old|^2, p) / (p + 1)
    """
    p = _check_p(p)
    n = len(u_old)
    for f in (u_new, v_old, v_new):
        if len(f) != n:
            raise ValueError("all four fields must share one length")
    au_old = _abs2(np.asarray(u_old))
    au_new = _abs2(np.asarray(u_new))
    av_old = _abs2(np.asarray(v_old))
    av_new = _abs2(np.asarray(v_new))
    half = (p + 1) // 2
    self_coeff = ratio_even(au_new, au_old, p) / (p + 1)
    cross_coeff = (
        beta * (av_new**half + av_old**half) * ratio_half(au_new, au_old, p) / (p + 1)
    )
    return NonlinCoeffs(self_coeff=self_coeff, cross_coeff=cross_coeff)
