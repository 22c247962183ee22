"""Conservative finite-difference solver for a coupled defocusing NLS system.

The scheme is an implicit midpoint discretization whose nonlinearity is
written as a difference quotient of the potential, so the discrete mass of
each field and the discrete energy are preserved step by step.  The package
also provides the diagnostics used to study dispersive decay: discrete norms,
weighted-derivative norms, and log-log power-law fits.
"""

from .config import ConfigError, FitConfig, OutputConfig, RunConfig, parse_config
from .diagnostics import (
    DecayFit,
    DiagnosticsRecord,
    energy,
    fit_decay,
    j_norm,
    j_norm_initial,
    linf_norm,
    lp_norm,
    mass,
)
from .grid import Grid, d_center, d_minus, d_plus, d_xx, make_grid, zero_field
from .initial import DomainTooSmallError, InitialSpec, build
from .nonlinear import NonlinCoeffs, assemble_coeffs, ratio_even, ratio_half
from .runner import fit_report, run_experiment
from .snapshots import SnapshotFormatError, read_snapshot, write_snapshot
from .stepper import (
    FieldPair,
    PicardDivergedError,
    SchemeParams,
    StepReport,
    evolve,
    step,
)
from .tridiag import SingularPivotError, TridiagonalSystem, residual, solve

__all__ = [
    "ConfigError",
    "DecayFit",
    "DiagnosticsRecord",
    "DomainTooSmallError",
    "FieldPair",
    "FitConfig",
    "Grid",
    "InitialSpec",
    "NonlinCoeffs",
    "OutputConfig",
    "PicardDivergedError",
    "RunConfig",
    "SchemeParams",
    "SingularPivotError",
    "SnapshotFormatError",
    "StepReport",
    "TridiagonalSystem",
    "assemble_coeffs",
    "build",
    "d_center",
    "d_minus",
    "d_plus",
    "d_xx",
    "energy",
    "evolve",
    "fit_decay",
    "fit_report",
    "j_norm",
    "j_norm_initial",
    "linf_norm",
    "lp_norm",
    "make_grid",
    "mass",
    "parse_config",
    "ratio_even",
    "ratio_half",
    "read_snapshot",
    "residual",
    "run_experiment",
    "solve",
    "step",
    "write_snapshot",
    "zero_field",
]

__version__ = "0.1.0"
