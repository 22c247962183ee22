"""Field snapshot files: a metadata header plus five CSV columns.

Format:

    # t=<t> x0=<x0> dx=<dx> n=<n>
    x,re_u,im_u,re_v,im_v
    <x_0>,<re>,<im>,<re>,<im>
    ...

All reals are written with shortest round-trip decimal representation, so
write followed by read is bit-exact on the fields and the time.
"""

from __future__ import annotations

import numpy as np

from .grid import Grid
from .stepper import FieldPair

__all__ = ["SnapshotFormatError", "write_snapshot", "read_snapshot", "COLUMNS"]

COLUMNS = "x,re_u,im_u,re_v,im_v"


class SnapshotFormatError(ValueError):
    """Snapshot file is malformed or inconsistent."""


def _fmt(x: float) -> str:
    return repr(float(x))


def write_snapshot(pair: FieldPair, grid: Grid, path: str) -> None:
    x = grid.nodes
    lines = [f"# t={_fmt(pair.t)} x0={_fmt(grid.x0)} dx={_fmt(grid.dx)} n={grid.n_points}"]
    lines.append(COLUMNS)
    for j in range(grid.n_points):
        u, v = pair.u[j], pair.v[j]
        lines.append(
            f"{_fmt(x[j])},{_fmt(u.real)},{_fmt(u.imag)},{_fmt(v.real)},{_fmt(v.imag)}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_meta(line: str) -> dict[str, str]:
    if not line.startswith("# "):
        raise SnapshotFormatError("missing metadata header line")
    out = {}
    for token in line[2:].split():
        key, _, value = token.partition("=")
        if not value:
            raise SnapshotFormatError(f"malformed metadata token {token!r}")
        out[key] = value
    return out


def read_snapshot(path: str) -> tuple[FieldPair, Grid]:
    """Inverse of :func:`write_snapshot`; returns the pair and its grid."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if len(lines) < 2:
        raise SnapshotFormatError("snapshot too short")
    meta = _parse_meta(lines[0])
    try:
        t = float(meta["t"])
        x0 = float(meta["x0"])
        dx = float(meta["dx"])
        n = int(meta["n"])
    except (KeyError, ValueError) as exc:
        raise SnapshotFormatError(f"bad metadata: {exc}") from exc
    if lines[1] != COLUMNS:
        raise SnapshotFormatError(f"expected column header {COLUMNS!r}, got {lines[1]!r}")
    body = lines[2:]
    if len(body) != n:
        raise SnapshotFormatError(f"expected {n} rows, found {len(body)}")
    u = np.empty(n, dtype=np.complex128)
    v = np.empty(n, dtype=np.complex128)
    for j, row in enumerate(body):
        parts = row.split(",")
        if len(parts) != 5:
            raise SnapshotFormatError(f"row {j}: expected 5 columns, got {len(parts)}")
        try:
            vals = [float(s) for s in parts]
        except ValueError as exc:
            raise SnapshotFormatError(f"row {j}: {exc}") from exc
        u[j] = complex(vals[1], vals[2])
        v[j] = complex(vals[3], vals[4])
    grid = Grid(x0=x0, xf=x0 + (n - 1) * dx, n_points=n)
    # xf is reconstructed and may round; dx is authoritative, restore it exactly
    object.__setattr__(grid, "dx", dx)
    return FieldPair(u=u, v=v, t=t), grid
