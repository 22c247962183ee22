import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cnls.grid import make_grid
from cnls.snapshots import SnapshotFormatError, read_snapshot, write_snapshot
from cnls.stepper import FieldPair

tricky_floats = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e30, max_value=1e30
)


def make_pair(grid, rng):
    u = rng.normal(size=grid.n_points) + 1j * rng.normal(size=grid.n_points)
    v = rng.normal(size=grid.n_points) + 1j * rng.normal(size=grid.n_points)
    for f in (u, v):
        f[0] = f[-2] = f[-1] = 0.0
    return FieldPair(u=u, v=v, t=1.75)


class TestRoundTrip:
    def test_random_state(self, tmp_path):
        grid = make_grid(-20, 20, 128)
        pair = make_pair(grid, np.random.default_rng(0))
        path = str(tmp_path / "snap.csv")
        write_snapshot(pair, grid, path)
        restored, rgrid = read_snapshot(path)
        assert np.array_equal(restored.u, pair.u)
        assert np.array_equal(restored.v, pair.v)
        assert restored.t == pair.t
        assert rgrid.n_points == grid.n_points
        assert rgrid.x0 == grid.x0
        assert rgrid.dx == grid.dx

    def test_zero_state(self, tmp_path):
        grid = make_grid(-5, 5, 16)
        pair = FieldPair(
            u=np.zeros(16, dtype=complex), v=np.zeros(16, dtype=complex), t=0.0
        )
        path = str(tmp_path / "snap.csv")
        write_snapshot(pair, grid, path)
        text = open(path).read().splitlines()
        assert text[1] == "x,re_u,im_u,re_v,im_v"
        assert all(row.endswith(",0.0,0.0,0.0,0.0") for row in text[2:])

    def test_awkward_values(self, tmp_path):
        grid = make_grid(-5, 5, 16)
        u = np.zeros(16, dtype=complex)
        u[3] = complex(-0.0, 5e-324)
        u[4] = complex(1e308, -1e-308)
        u[5] = complex(0.1 + 0.2, -1 / 3)
        pair = FieldPair(u=u, v=np.zeros(16, dtype=complex), t=-2.5e-17)
        path = str(tmp_path / "snap.csv")
        write_snapshot(pair, grid, path)
        restored, _ = read_snapshot(path)
        assert np.array_equal(restored.u, pair.u)
        assert restored.t == pair.t
        assert np.signbit(restored.u[3].real)

    @given(tricky_floats, tricky_floats)
    def test_value_round_trip(self, re, im):
        import tempfile

        grid = make_grid(-5, 5, 8)
        u = np.zeros(8, dtype=complex)
        u[3] = complex(re, im)
        pair = FieldPair(u=u, v=np.zeros(8, dtype=complex), t=0.5)
        with tempfile.TemporaryDirectory() as tmp:
            path = f"{tmp}/s.csv"
            write_snapshot(pair, grid, path)
            restored, _ = read_snapshot(path)
        assert np.array_equal(restored.u, pair.u)

    def test_collision_profile_row_near_pulse_center(self, tmp_path):
        from cnls.initial import InitialSpec, build

        grid = make_grid(-100, 100, 8193)
        pair = build(InitialSpec(kind="example1"), grid)
        path = str(tmp_path / "snap.csv")
        write_snapshot(pair, grid, path)
        rows = open(path).read().splitlines()[2:]
        parsed = [[float(c) for c in row.split(",")] for row in rows]
        nearest = min(parsed, key=lambda r: abs(r[0] - 10.0))
        v_mod = abs(complex(nearest[3], nearest[4]))
        assert abs(nearest[0] - 10.0) <= grid.dx / 2
        assert v_mod == pytest.approx(np.sqrt(2.0), abs=1e-3)

    def test_non_dyadic_grid_round_trip(self, tmp_path):
        # dx = 100/2047 does not reconstruct xf exactly; dx must survive anyway
        grid = make_grid(-50, 50, 2048)
        pair = FieldPair(
            u=np.zeros(2048, dtype=complex), v=np.zeros(2048, dtype=complex), t=0.0
        )
        path = str(tmp_path / "snap.csv")
        write_snapshot(pair, grid, path)
        _, rgrid = read_snapshot(path)
        assert rgrid.dx == grid.dx
        assert rgrid.x0 == grid.x0


class TestMalformed:
    def test_missing_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,re_u,im_u,re_v,im_v\n0,0,0,0,0\n")
        with pytest.raises(SnapshotFormatError, match="metadata"):
            read_snapshot(str(path))

    def test_wrong_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("# t=0.0 x0=0.0 dx=1.0 n=1\nx,re_u\n0,0\n")
        with pytest.raises(SnapshotFormatError, match="column header"):
            read_snapshot(str(path))

    def test_row_count_mismatch(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("# t=0.0 x0=0.0 dx=1.0 n=3\nx,re_u,im_u,re_v,im_v\n0,0,0,0,0\n")
        with pytest.raises(SnapshotFormatError, match="rows"):
            read_snapshot(str(path))

    def test_bad_cell(self, tmp_path):
        rows = "\n".join(f"{j},0,0,0,0" for j in range(7))
        path = tmp_path / "bad.csv"
        path.write_text(
            "# t=0.0 x0=0.0 dx=1.0 n=8\nx,re_u,im_u,re_v,im_v\n" + rows + "\n0,zzz,0,0,0\n"
        )
        with pytest.raises(SnapshotFormatError, match="row 7"):
            read_snapshot(str(path))
