"""Run configuration: strict parsing of the flat `key = value` format.

Sections and keys (defaults in parentheses; `#` starts a comment):

    [grid]      x0, xf, n_points
    [scheme]    p, beta, dt, t_final, picard_tol (1e-12), picard_max_iters (100)
    [initial]   kind, plus the kind's parameters (a1, a2, w1, w2, s1, s2,
                delta) or path for kind = from_file
    [output]    diagnostics_path, sample_every (1), snapshot_dir,
                snapshot_every, j_norm (off)
    [fit]       t_min, targets          -- optional section

Unknown sections or keys are rejected.  snapshot_every counts steps and must
be a multiple of sample_every.  j_norm = on adds the weighted-derivative
norm columns (order m = 1) to the diagnostics CSV.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from typing import Optional

from .grid import Grid, make_grid
from .initial import KINDS, InitialSpec
from .stepper import SchemeParams

__all__ = ["ConfigError", "RunConfig", "OutputConfig", "FitConfig", "parse_config", "FIT_TARGETS"]

FIT_TARGETS = ("linf_u", "linf_v", "l2p2_u", "l2p2_v")

_KNOWN_KEYS = {
    "grid": {"x0", "xf", "n_points"},
    "scheme": {"p", "beta", "dt", "t_final", "picard_tol", "picard_max_iters"},
    "initial": {"kind", "path", "a1", "a2", "w1", "w2", "s1", "s2", "delta"},
    "output": {"diagnostics_path", "snapshot_dir", "sample_every", "snapshot_every", "j_norm"},
    "fit": {"t_min", "targets"},
}
_REQUIRED_SECTIONS = ("grid", "scheme", "initial", "output")

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ConfigError(ValueError):
    """Configuration text failed to parse or validate."""


@dataclass(frozen=True)
class OutputConfig:
    diagnostics_path: str
    sample_every: int = 1
    snapshot_dir: Optional[str] = None
    snapshot_every: Optional[int] = None
    j_norm: bool = False


@dataclass(frozen=True)
class FitConfig:
    t_min: float
    targets: tuple[str, ...]


@dataclass(frozen=True)
class RunConfig:
    grid: Grid
    scheme: SchemeParams
    initial: InitialSpec
    output: OutputConfig
    fit: Optional[FitConfig] = None


class _Section:
    """One parsed section with typed, error-annotated accessors."""

    def __init__(self, name: str, values: dict[str, str]):
        self.name = name
        self.values = values

    def _raw(self, key: str):
        return self.values.get(key)

    def get(self, key: str, cast, default=None, required: bool = False):
        raw = self._raw(key)
        if raw is None:
            if required:
                raise ConfigError(f"missing required key '{self.name}.{key}'")
            return default
        try:
            return cast(raw)
        except ValueError as exc:
            raise ConfigError(f"key '{self.name}.{key}': {exc}") from exc

    def get_bool(self, key: str, default: bool = False) -> bool:
        raw = self._raw(key)
        if raw is None:
            return default
        low = raw.strip().lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise ConfigError(f"key '{self.name}.{key}': not a boolean: {raw!r}")


def _read_sections(text: str) -> dict[str, _Section]:
    parser = configparser.ConfigParser(
        interpolation=None,
        inline_comment_prefixes=("#",),
        comment_prefixes=("#",),
        strict=True,
    )
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"parse error: {exc}") from exc
    sections: dict[str, _Section] = {}
    for name in parser.sections():
        if name not in _KNOWN_KEYS:
            raise ConfigError(f"unknown section [{name}]")
        for key in parser[name]:
            if key not in _KNOWN_KEYS[name]:
                raise ConfigError(f"unknown key '{name}.{key}'")
        sections[name] = _Section(name, dict(parser[name]))
    for name in _REQUIRED_SECTIONS:
        if name not in sections:
            raise ConfigError(f"missing required section [{name}]")
    return sections


def parse_config(text: str) -> RunConfig:
    """Parse and validate a configuration document into domain objects."""
    sections = _read_sections(text)

    g = sections["grid"]
    try:
        grid = make_grid(
            g.get("x0", float, required=True),
            g.get("xf", float, required=True),
            g.get("n_points", int, required=True),
        )
    except ValueError as exc:
        raise ConfigError(f"section [grid]: {exc}") from exc

    s = sections["scheme"]
    dt = s.get("dt", float, required=True)
    if not 0.0 < dt < 1.0:
        raise ConfigError(f"key 'scheme.dt': must satisfy 0 < dt < 1, got {dt}")
    try:
        scheme = SchemeParams(
            p=s.get("p", int, required=True),
            beta=s.get("beta", float, required=True),
            dt=dt,
            t_final=s.get("t_final", float, required=True),
            picard_tol=s.get("picard_tol", float, default=1e-12),
            picard_max_iters=s.get("picard_max_iters", int, default=100),
        )
    except ValueError as exc:
        raise ConfigError(f"section [scheme]: {exc}") from exc
    if scheme.beta < 0.0:
        raise ConfigError(f"key 'scheme.beta': coupling must be >= 0, got {scheme.beta}")

    i = sections["initial"]
    kind = i.get("kind", str, required=True)
    if kind not in KINDS:
        raise ConfigError(f"key 'initial.kind': unknown kind {kind!r}, know {KINDS}")
    params = {
        k: i.get(k, float)
        for k in ("a1", "a2", "w1", "w2", "s1", "s2", "delta")
        if i._raw(k) is not None
    }
    try:
        initial = InitialSpec(kind=kind, params=params, path=i.get("path", str))
    except ValueError as exc:
        raise ConfigError(f"section [initial]: {exc}") from exc

    o = sections["output"]
    output = OutputConfig(
        diagnostics_path=o.get("diagnostics_path", str, required=True),
        sample_every=o.get("sample_every", int, default=1),
        snapshot_dir=o.get("snapshot_dir", str),
        snapshot_every=o.get("snapshot_every", int),
        j_norm=o.get_bool("j_norm", default=False),
    )
    if output.sample_every < 1:
        raise ConfigError("key 'output.sample_every': must be >= 1")
    if output.snapshot_every is not None:
        if output.snapshot_dir is None:
            raise ConfigError("key 'output.snapshot_every': requires output.snapshot_dir")
        if output.snapshot_every < 1:
            raise ConfigError("key 'output.snapshot_every': must be >= 1")
        if output.snapshot_every % output.sample_every != 0:
            raise ConfigError(
                "key 'output.snapshot_every': must be a multiple of sample_every "
                f"({output.snapshot_every} % {output.sample_every} != 0)"
            )

    fit = None
    if "fit" in sections:
        f = sections["fit"]
        raw_targets = f.get("targets", str, required=True)
        targets = tuple(t.strip() for t in raw_targets.split(",") if t.strip())
        bad = [t for t in targets if t not in FIT_TARGETS]
        if bad:
            raise ConfigError(
                f"key 'fit.targets': unknown target(s) {bad}, know {FIT_TARGETS}"
            )
        if not targets:
            raise ConfigError("key 'fit.targets': empty target list")
        t_min = f.get("t_min", float, required=True)
        if not t_min > 0.0:
            raise ConfigError(f"key 'fit.t_min': must be positive, got {t_min}")
        fit = FitConfig(t_min=t_min, targets=targets)

    return RunConfig(grid=grid, scheme=scheme, initial=initial, output=output, fit=fit)
