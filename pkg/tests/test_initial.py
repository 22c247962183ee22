import numpy as np
import pytest
from scipy.integrate import quad

from cnls.diagnostics import mass
from cnls.grid import check_state, make_grid
from cnls.initial import DomainTooSmallError, InitialSpec, build
from cnls.snapshots import write_snapshot
from cnls.stepper import FieldPair


class TestInitialSpec:
    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown"):
            InitialSpec(kind="vortex")

    def test_missing_parameters(self):
        with pytest.raises(ValueError, match="missing parameters.*a2"):
            InitialSpec(kind="menyuk", params={"a1": 0.5, "s1": 0.0, "s2": 1.0, "delta": 0.0})

    def test_from_file_requires_path(self):
        with pytest.raises(ValueError, match="path"):
            InitialSpec(kind="from_file")


class TestBuild:
    def test_zero(self):
        grid = make_grid(-10, 10, 64)
        pair = build(InitialSpec(kind="zero"), grid)
        assert np.all(pair.u == 0.0)
        assert np.all(pair.v == 0.0)
        assert pair.t == 0.0

    def test_collision_profile_peaks(self):
        grid = make_grid(-100, 100, 8193)
        pair = build(InitialSpec(kind="example1"), grid)
        x = grid.nodes
        peak_u = x[np.argmax(np.abs(pair.u))]
        peak_v = x[np.argmax(np.abs(pair.v))]
        assert abs(peak_u - (-10.0 / 1.2)) <= grid.dx
        assert abs(peak_v - 10.0) <= grid.dx
        assert np.max(np.abs(pair.u)) == pytest.approx(1.2 * np.sqrt(2.0), abs=1e-3)
        assert np.max(np.abs(pair.v)) == pytest.approx(np.sqrt(2.0), abs=1e-3)

    def test_collision_profile_masses_against_quadrature(self):
        grid = make_grid(-100, 100, 8193)
        pair = build(InitialSpec(kind="example1"), grid)
        mass_u_oracle, _ = quad(
            lambda x: (1.2 * np.sqrt(2.0) / np.cosh(1.2 * x + 10.0)) ** 2, -100, 100
        )
        mass_v_oracle, _ = quad(
            lambda x: (np.sqrt(2.0) / np.cosh(x - 10.0)) ** 2, -100, 100
        )
        assert abs(mass(pair.u, grid.dx) - mass_u_oracle) <= grid.dx**2
        assert abs(mass(pair.v, grid.dx) - mass_v_oracle) <= grid.dx**2

    def test_two_pulse_family_shape(self):
        grid = make_grid(-150, 150, 4097)
        spec = InitialSpec(
            kind="menyuk", params=dict(a1=0.25, a2=0.5, s1=8.0, s2=-5.0, delta=0.0)
        )
        pair = build(spec, grid)
        x = grid.nodes
        assert np.max(np.abs(pair.u)) == pytest.approx(0.25, abs=1e-4)
        assert np.max(np.abs(pair.v)) == pytest.approx(0.5, abs=1e-4)
        assert abs(x[np.argmax(np.abs(pair.u))] - 8.0) <= grid.dx
        assert abs(x[np.argmax(np.abs(pair.v))] - (-5.0)) <= grid.dx
        # delta = 0 makes both pulses real
        assert np.max(np.abs(pair.u.imag)) == 0.0
        assert np.max(np.abs(pair.v.imag)) == 0.0

    def test_two_pulse_family_needs_room(self):
        # the 1/4-amplitude pulse at s1=8 still carries ~5e-11 of its peak
        # at x=100, above the 1e-10*peak boundary threshold
        grid = make_grid(-100, 100, 4097)
        spec = InitialSpec(
            kind="menyuk", params=dict(a1=0.25, a2=0.5, s1=8.0, s2=-5.0, delta=0.0)
        )
        with pytest.raises(DomainTooSmallError):
            build(spec, grid)

    def test_gaussian_pair(self):
        grid = make_grid(-60, 60, 1025)
        spec = InitialSpec(
            kind="gaussian",
            params=dict(a1=0.1, a2=0.2, w1=3.0, w2=4.0, s1=-2.0, s2=5.0, delta=0.5),
        )
        pair = build(spec, grid)
        x = grid.nodes
        assert np.max(np.abs(pair.u)) == pytest.approx(0.1, abs=1e-4)
        assert abs(x[np.argmax(np.abs(pair.v))] - 5.0) <= grid.dx
        k = np.argmax(np.abs(pair.u))
        expected_phase = np.exp(0.25j * x[k])
        assert pair.u[k] / abs(pair.u[k]) == pytest.approx(expected_phase, rel=1e-12)

    def test_sech_pair(self):
        grid = make_grid(-60, 60, 1025)
        spec = InitialSpec(
            kind="sech_pair",
            params=dict(a1=0.3, a2=0.4, w1=2.0, w2=1.0, s1=0.0, s2=3.0, delta=0.0),
        )
        pair = build(spec, grid)
        # nearest node can sit dx/2 from the crest; sech curvature bounds the gap
        assert np.max(np.abs(pair.u)) == pytest.approx(0.3, abs=1e-3)
        assert np.max(np.abs(pair.v)) == pytest.approx(0.4, abs=1e-3)

    def test_domain_too_small(self):
        grid = make_grid(-2, 2, 64)
        spec = InitialSpec(
            kind="sech_pair",
            params=dict(a1=1.0, a2=1.0, w1=1.0, w2=1.0, s1=0.0, s2=0.0, delta=0.0),
        )
        with pytest.raises(DomainTooSmallError, match="enlarge"):
            build(spec, grid)

    @pytest.mark.parametrize(
        "kind,params",
        [
            ("example1", {}),
            ("zero", {}),
            ("menyuk", dict(a1=0.3, a2=0.5, s1=4.0, s2=-4.0, delta=0.4)),
            ("gaussian", dict(a1=0.1, a2=0.1, w1=3.0, w2=3.0, s1=0.0, s2=0.0, delta=0.0)),
        ],
    )
    def test_states_satisfy_boundary_constraint(self, kind, params):
        grid = make_grid(-150, 150, 2049)
        pair = build(InitialSpec(kind=kind, params=params), grid)
        assert check_state(pair.u)
        assert check_state(pair.v)

    def test_from_file_round_trip(self, tmp_path):
        grid = make_grid(-20, 20, 256)
        rng = np.random.default_rng(5)
        u = rng.normal(size=256) + 1j * rng.normal(size=256)
        v = rng.normal(size=256) + 1j * rng.normal(size=256)
        for f in (u, v):
            f[0] = f[-2] = f[-1] = 0.0
        pair = FieldPair(u=u, v=v, t=3.25)
        path = tmp_path / "state.csv"
        write_snapshot(pair, grid, str(path))
        restored = build(InitialSpec(kind="from_file", path=str(path)), grid)
        assert np.array_equal(restored.u, pair.u)
        assert np.array_equal(restored.v, pair.v)
        assert restored.t == pair.t

    def test_from_file_grid_mismatch(self, tmp_path):
        grid = make_grid(-20, 20, 256)
        pair = build(InitialSpec(kind="zero"), grid)
        path = tmp_path / "state.csv"
        write_snapshot(pair, grid, str(path))
        other = make_grid(-20, 20, 128)
        with pytest.raises(ValueError, match="does not match"):
            build(InitialSpec(kind="from_file", path=str(path)), other)

    def test_from_file_missing(self, tmp_path):
        with pytest.raises(OSError):
            build(InitialSpec(kind="from_file", path=str(tmp_path / "nope.csv")), make_grid(0, 1, 8))
