"""End-to-end experiment runs: diagnostics CSV, snapshots, summary, decay fits.

All emitted reals use shortest round-trip decimal formatting, and nothing
time- or host-dependent is written, so rerunning a configuration produces
byte-identical outputs.  A lock file next to the diagnostics CSV keeps
concurrent runs from sharing output paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import diagnostics
from .config import RunConfig
from .diagnostics import DecayFit, DiagnosticsRecord, fit_decay
from .initial import DomainTooSmallError, build
from .snapshots import SnapshotFormatError, write_snapshot
from .stepper import FieldPair, PicardDivergedError, evolve
from .tridiag import SingularPivotError

__all__ = [
    "CSV_HEADER",
    "EXIT_OK",
    "EXIT_CONFIG",
    "EXIT_NUMERICAL",
    "EXIT_IO",
    "RunSummary",
    "run_experiment",
    "fit_report",
    "read_diagnostics_csv",
]

CSV_HEADER = "t,mass_u,mass_v,energy,linf_u,linf_v,l2p2_u,l2p2_v,j_norm_u,j_norm_v,picard_iters"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


def _fmt(x: float) -> str:
    return repr(float(x))


def _record_row(rec: DiagnosticsRecord) -> str:
    ju = "" if rec.j_norm_u is None else _fmt(rec.j_norm_u)
    jv = "" if rec.j_norm_v is None else _fmt(rec.j_norm_v)
    fields = [
        _fmt(rec.t),
        _fmt(rec.mass_u),
        _fmt(rec.mass_v),
        _fmt(rec.energy),
        _fmt(rec.linf_u),
        _fmt(rec.linf_v),
        _fmt(rec.l2p2_u),
        _fmt(rec.l2p2_v),
        ju,
        jv,
        str(rec.picard_iters),
    ]
    return ",".join(fields)


@dataclass
class RunSummary:
    initial_mass_u: float
    initial_mass_v: float
    initial_energy: float
    max_drift_mass_u: float
    max_drift_mass_v: float
    max_drift_energy: float
    max_picard_iters: int
    n_samples: int
    final_t: float
    fits: dict[str, "DecayFit | str"]


def _rel_drift(value: float, baseline: float) -> float:
    # absolute drift when the baseline vanishes (e.g. zero initial data)
    if baseline == 0.0:
        return abs(value)
    return abs(value - baseline) / abs(baseline)


def _echo_config(config: RunConfig) -> list[str]:
    g, s, o = config.grid, config.scheme, config.output
    lines = [
        f"grid: x0={_fmt(g.x0)} xf={_fmt(g.xf)} n_points={g.n_points} dx={_fmt(g.dx)}",
        f"scheme: p={s.p} beta={_fmt(s.beta)} dt={_fmt(s.dt)} t_final={_fmt(s.t_final)} "
        f"picard_tol={_fmt(s.picard_tol)} picard_max_iters={s.picard_max_iters}",
        f"initial: kind={config.initial.kind}"
        + ("" if not config.initial.params else f" params={dict(sorted(config.initial.params.items()))}")
        + ("" if config.initial.path is None else f" path={config.initial.path}"),
        f"output: diagnostics_path={o.diagnostics_path} sample_every={o.sample_every} "
        f"snapshot_dir={o.snapshot_dir} snapshot_every={o.snapshot_every} j_norm={o.j_norm}",
    ]
    if config.fit is not None:
        lines.append(
            f"fit: t_min={_fmt(config.fit.t_min)} targets={','.join(config.fit.targets)}"
        )
    return lines


def _summary_lines(summary: RunSummary) -> list[str]:
    lines = [
        f"samples = {summary.n_samples}",
        f"final_t = {_fmt(summary.final_t)}",
        f"initial_mass_u = {_fmt(summary.initial_mass_u)}",
        f"initial_mass_v = {_fmt(summary.initial_mass_v)}",
        f"initial_energy = {_fmt(summary.initial_energy)}",
        f"max_rel_drift_mass_u = {_fmt(summary.max_drift_mass_u)}",
        f"max_rel_drift_mass_v = {_fmt(summary.max_drift_mass_v)}",
        f"max_rel_drift_energy = {_fmt(summary.max_drift_energy)}",
        f"max_picard_iters = {summary.max_picard_iters}",
    ]
    for target in sorted(summary.fits):
        fit = summary.fits[target]
        if isinstance(fit, DecayFit):
            lines.append(
                f"fit {target} slope={_fmt(fit.slope)} intercept={_fmt(fit.intercept)} "
                f"r2={_fmt(fit.r_squared)} window=[{_fmt(fit.window[0])},{_fmt(fit.window[1])}]"
            )
        else:
            lines.append(f"fit {target} error={fit}")
    return lines


def _run(config: RunConfig, log) -> RunSummary:
    grid = config.grid
    out = config.output
    state0 = build(config.initial, grid)
    m0u = diagnostics.mass(state0.u, grid.dx)
    m0v = diagnostics.mass(state0.v, grid.dx)
    e0 = diagnostics.energy(state0, grid, config.scheme.p, config.scheme.beta)

    diag_path = Path(out.diagnostics_path)
    if diag_path.parent != Path(""):
        diag_path.parent.mkdir(parents=True, exist_ok=True)
    if out.snapshot_dir is not None:
        Path(out.snapshot_dir).mkdir(parents=True, exist_ok=True)

    records: list[DiagnosticsRecord] = []
    with open(diag_path, "w", encoding="utf-8", newline="\n") as csv:
        csv.write(CSV_HEADER + "\n")

        def sink(step_index: int, rec: DiagnosticsRecord, state: FieldPair) -> None:
            records.append(rec)
            csv.write(_record_row(rec) + "\n")
            if (
                out.snapshot_every is not None
                and step_index % out.snapshot_every == 0
            ):
                write_snapshot(
                    state, grid, os.path.join(out.snapshot_dir, f"snap_{step_index:08d}.csv")
                )

        final = evolve(
            state0,
            config.scheme,
            grid,
            sample_every=out.sample_every,
            sink=sink,
            j_norm_m=1 if out.j_norm else None,
        )

    summary = RunSummary(
        initial_mass_u=m0u,
        initial_mass_v=m0v,
        initial_energy=e0,
        max_drift_mass_u=max((_rel_drift(r.mass_u, m0u) for r in records), default=0.0),
        max_drift_mass_v=max((_rel_drift(r.mass_v, m0v) for r in records), default=0.0),
        max_drift_energy=max((_rel_drift(r.energy, e0) for r in records), default=0.0),
        max_picard_iters=max((r.picard_iters for r in records), default=0),
        n_samples=len(records),
        final_t=final.t,
        fits={},
    )
    if config.fit is not None:
        for target in config.fit.targets:
            samples = [(r.t, getattr(r, target)) for r in records]
            try:
                summary.fits[target] = fit_decay(samples, config.fit.t_min)
            except ValueError as exc:
                summary.fits[target] = str(exc)

    summary_path = diag_path.with_suffix(".summary.txt")
    body = _summary_lines(summary)
    with open(summary_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(body) + "\n")
    for line in body:
        log(line)
    return summary


def run_experiment(config: RunConfig, log=print) -> int:
    """Run one configured experiment; returns a process exit status.

    0 on success, 2 for configuration problems, 3 for numerical failure
    (Picard divergence or a singular pivot), 4 for I/O failures.  A
    machine-readable ``error: kind=... detail=...`` line is logged on failure.
    """
    for line in _echo_config(config):
        log(line)
    lock_path = config.output.diagnostics_path + ".lock"
    try:
        parent = Path(lock_path).parent
        if parent != Path(""):
            parent.mkdir(parents=True, exist_ok=True)
        lock_fd = os.open(lock_path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError:
        log(f"error: kind=io detail=lock file {lock_path} exists; another run owns this path")
        return EXIT_IO
    except OSError as exc:
        log(f"error: kind=io detail={exc}")
        return EXIT_IO
    try:
        _run(config, log)
        return EXIT_OK
    except (PicardDivergedError, SingularPivotError) as exc:
        log(f"error: kind=numerical detail={exc}")
        return EXIT_NUMERICAL
    except DomainTooSmallError as exc:
        log(f"error: kind=config detail={exc}")
        return EXIT_CONFIG
    except SnapshotFormatError as exc:
        log(f"error: kind=io detail={exc}")
        return EXIT_IO
    except ValueError as exc:
        log(f"error: kind=config detail={exc}")
        return EXIT_CONFIG
    except OSError as exc:
        log(f"error: kind=io detail={exc}")
        return EXIT_IO
    finally:
        os.close(lock_fd)
        os.unlink(lock_path)


def read_diagnostics_csv(path: str) -> dict[str, list[float]]:
    """Columns of a diagnostics CSV; empty cells are skipped per column."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: not a diagnostics CSV (bad header)")
    names = CSV_HEADER.split(",")
    columns: dict[str, list[float]] = {name: [] for name in names}
    for row in lines[1:]:
        parts = row.split(",")
        if len(parts) != len(names):
            raise ValueError(f"{path}: row with {len(parts)} fields, expected {len(names)}")
        for name, cell in zip(names, parts):
            if cell != "":
                columns[name].append(float(cell))
    return columns


def fit_report(csv_path: str, t_min: float, targets: list[str]) -> str:
    """Fit each target column against time and emit plot-ready series files.

    Returns the report text (one line per target); writes
    ``<csv stem>_<target>.dat`` two-column (t, value) files next to the CSV.
    """
    columns = read_diagnostics_csv(csv_path)
    ts = columns["t"]
    lines = []
    base = Path(csv_path)
    for target in targets:
        if target not in columns:
            raise ValueError(f"unknown target column {target!r}")
        vals = columns[target]
        if len(vals) != len(ts):
            raise ValueError(f"column {target!r} has gaps; cannot fit against t")
        data_path = base.with_name(f"{base.stem}_{target}.dat")
        with open(data_path, "w", encoding="utf-8", newline="\n") as fh:
            for t, v in zip(ts, vals):
                fh.write(f"{_fmt(t)} {_fmt(v)}\n")
        fit = fit_decay(list(zip(ts, vals)), t_min)
        lines.append(
            f"{target} slope={_fmt(fit.slope)} intercept={_fmt(fit.intercept)} "
            f"r2={_fmt(fit.r_squared)} window=[{_fmt(fit.window[0])},{_fmt(fit.window[1])}]"
        )
    return "\n".join(lines)
