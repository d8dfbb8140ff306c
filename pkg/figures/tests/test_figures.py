import numpy as np
import pytest

from beliefnet_figures.io import (
    InputError,
    read_edges,
    read_nodes,
    read_sweep,
    read_trajectory,
)
from beliefnet_figures.render import (
    FigureJob,
    aggregate_sweep,
    compute_histogram,
    render,
    spring_positions,
)

TRAJECTORY = """step,agent,belief,self_reasoning,pressure
0,0,0.4,0.4,0
0,1,0.6,0.6,0
1,0,0.45,0.42,0.03
1,1,0.55,0.58,0.03
"""

NODES = """agent,group,degree
0,0,1
1,1,1
"""

EDGES = """src,dst,weight
0,0,0.5
0,1,0.5
1,1,0.5
"""

SWEEP = """parameter,value,c,seed,final_std,final_mean,mean_pressure,max_pressure
connectivity,10,0,0,0,0.5,0.001,0.01
connectivity,10,0,1,0,0.5,0.001,0.01
connectivity,10,0.5,0,0.02,0.5,0.002,0.02
connectivity,10,0.5,1,0.04,0.5,0.002,0.02
connectivity,20,0,0,0,0.5,0.001,0.01
connectivity,20,0,1,0,0.5,0.001,0.01
connectivity,20,0.5,0,0.01,0.5,0.002,0.02
connectivity,20,0.5,1,0.03,0.5,0.002,0.02
"""


@pytest.fixture
def run_dir(tmp_path):
    (tmp_path / "trajectory.csv").write_text(TRAJECTORY)
    (tmp_path / "nodes.csv").write_text(NODES)
    (tmp_path / "edges.csv").write_text(EDGES)
    (tmp_path / "sweep.csv").write_text(SWEEP)
    return tmp_path


class TestReaders:
    def test_trajectory_round_trip(self, run_dir):
        data = read_trajectory(run_dir / "trajectory.csv")
        assert data["step"] == [0, 0, 1, 1]
        assert data["belief"] == [0.4, 0.6, 0.45, 0.55]

    def test_nodes_and_edges(self, run_dir):
        nodes = read_nodes(run_dir / "nodes.csv")
        edges = read_edges(run_dir / "edges.csv")
        assert nodes["group"] == [0, 1]
        assert edges["weight"] == [0.5, 0.5, 0.5]

    def test_sweep_reader(self, run_dir):
        sweep = read_sweep(run_dir / "sweep.csv")
        assert len(sweep["value"]) == 8
        assert set(sweep["c"]) == {0.0, 0.5}

    def test_unknown_column_rejected(self, tmp_path):
        bad = tmp_path / "trajectory.csv"
        bad.write_text("step,agent,belief,self_reasoning,pressure,mood\n0,0,1,1,0,ok\n")
        with pytest.raises(InputError, match="line 1"):
            read_trajectory(bad)

    def test_malformed_row_names_file_and_line(self, tmp_path):
        bad = tmp_path / "trajectory.csv"
        bad.write_text("step,agent,belief,self_reasoning,pressure\n0,0,high,1,0\n")
        with pytest.raises(InputError, match=r"line 2"):
            read_trajectory(bad)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="not found"):
            read_trajectory(tmp_path / "absent.csv")


class TestComputeHistogram:
    def test_point_mass(self):
        assert compute_histogram([0.5] * 4, 2) == [(0.0, 0), (0.5, 4)]

    def test_value_one_in_last_bin(self):
        hist = compute_histogram([1.0], 10)
        assert hist[-1] == (0.9, 1)

    def test_zero_pressure_is_a_single_spike(self):
        hist = compute_histogram([0.0] * 100, 10)
        assert hist[0] == (0.0, 100)
        assert all(count == 0 for _, count in hist[1:])


class TestAggregateSweep:
    def test_seed_means_per_c(self, run_dir):
        curves = aggregate_sweep(read_sweep(run_dir / "sweep.csv"))
        values, means = curves[0.5]
        assert values == [10.0, 20.0]
        assert means == [pytest.approx(0.03), pytest.approx(0.02)]

    def test_zero_c_line_is_flat_at_zero(self, run_dir):
        curves = aggregate_sweep(read_sweep(run_dir / "sweep.csv"))
        _, means = curves[0.0]
        assert max(means) == 0.0


class TestSpringPositions:
    def test_layout_is_deterministic(self):
        edges = [(0, 1), (1, 2), (0, 2), (2, 3)]
        a = spring_positions(4, edges, seed=7)
        b = spring_positions(4, edges, seed=7)
        for node in range(4):
            assert np.allclose(a[node], b[node])

    def test_self_loops_ignored(self):
        pos = spring_positions(2, [(0, 0), (0, 1), (1, 1)], seed=3)
        assert set(pos) == {0, 1}


class TestRender:
    @pytest.mark.parametrize("ext", ["png", "svg"])
    def test_timeseries(self, run_dir, tmp_path, ext):
        out = render(FigureJob("timeseries", [run_dir / "trajectory.csv"],
                               tmp_path / f"ts.{ext}"))
        assert out.stat().st_size > 0

    def test_histogram_pressure_step_zero(self, run_dir, tmp_path):
        out = render(FigureJob("histogram", [run_dir / "trajectory.csv"],
                               tmp_path / "hist.png", column="pressure", steps=["0"]))
        assert out.stat().st_size > 0

    def test_sweep_curve(self, run_dir, tmp_path):
        out = render(FigureJob("sweep_curve", [run_dir / "sweep.csv"],
                               tmp_path / "curve.png"))
        assert out.stat().st_size > 0

    def test_network_snapshot(self, run_dir, tmp_path):
        out = render(FigureJob(
            "network_snapshot",
            [run_dir / "nodes.csv", run_dir / "edges.csv", run_dir / "trajectory.csv"],
            tmp_path / "net.png",
        ))
        assert out.stat().st_size > 0

    def test_unknown_kind_rejected(self, run_dir, tmp_path):
        with pytest.raises(InputError):
            render(FigureJob("pie", [run_dir / "trajectory.csv"], tmp_path / "x.png"))

    def test_inputs_not_modified(self, run_dir, tmp_path):
        before = (run_dir / "trajectory.csv").read_bytes()
        render(FigureJob("timeseries", [run_dir / "trajectory.csv"], tmp_path / "t.png"))
        assert (run_dir / "trajectory.csv").read_bytes() == before


class TestMain:
    def test_cli_renders(self, run_dir, tmp_path):
        from beliefnet_figures.render import main
        code = main(["--kind", "timeseries", "--input", str(run_dir / "trajectory.csv"),
                     "--out", str(tmp_path / "out.png")])
        assert code == 0
        assert (tmp_path / "out.png").exists()

    def test_cli_reports_missing_file(self, tmp_path, capsys):
        from beliefnet_figures.render import main
        code = main(["--kind", "timeseries", "--input", str(tmp_path / "nope.csv"),
                     "--out", str(tmp_path / "out.png")])
        assert code == 1
        assert "nope.csv" in capsys.readouterr().err
