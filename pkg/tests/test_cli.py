"""End-to-end CLI behavior: outputs, determinism, exit codes."""

import io
import json

import pytest

from distgraph.analysis import analyze
from distgraph.cli import main
from distgraph.edgelist import read_edge_list
from distgraph.lattice import LatticeSpace
from distgraph.models import InverseDistance
from distgraph.samplers import sample_lattice_graph_naive


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCountShell:
    def test_infinite(self, capsys):
        code, out, _ = run_cli(capsys, "count-shell", "--r", "2", "--d", "5")
        assert code == 0
        assert out == "20\n"

    def test_finite(self, capsys):
        code, out, _ = run_cli(
            capsys, "count-shell", "--r", "2", "--d", "3", "--n", "100", "--vertex", "0,0"
        )
        assert code == 0
        assert out == "4\n"

    def test_finite_needs_vertex(self, capsys):
        code, _, err = run_cli(capsys, "count-shell", "--r", "2", "--d", "3", "--n", "100")
        assert code == 1
        assert "vertex" in err


class TestDegree:
    def test_infinite(self, capsys):
        code, out, _ = run_cli(
            capsys, "degree", "--r", "2", "--n", "10", "--beta", "1", "--infinite"
        )
        assert code == 0
        assert out == "7.200000\n"

    def test_finite_vertex(self, capsys):
        code, out, _ = run_cli(
            capsys, "degree", "--r", "2", "--n", "5", "--beta", "0", "--vertex", "2,2"
        )
        assert code == 0
        value = float(out)
        assert value < 24.0  # beta=0 keeps f(d)=1/d below 1 beyond d=1


class TestPairTable:
    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "pair-table", "--n", "3", "--r", "1")
        assert code == 0
        assert out == "d,count\n1,2\n2,1\n"

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "pair-table", "--n", "2", "--r", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"1": 4, "2": 2}


class TestGenerate:
    def test_byte_identical_across_runs(self, capsys):
        argv = ["generate", "--family", "lattice", "--n", "10", "--r", "2",
                "--beta", "1", "--seed", "42"]
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second
        assert first.startswith("# vertices=100 model=inverse-distance(beta=1,n=10) seed=42\n")

    def test_header_and_sorted_edges(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "--family", "er", "--n", "30", "--p", "0.3", "--seed", "7"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "# vertices=30 model=constant(p=0.3) seed=7"
        pairs = [tuple(map(int, line.split())) for line in lines[1:]]
        assert all(u < v for u, v in pairs)
        assert pairs == sorted(pairs)

    def test_waxman_family(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "--family", "waxman", "--n", "20", "--r", "2",
            "--alpha", "1", "--beta", "1", "--seed", "3"
        )
        assert code == 0
        assert out.startswith("# vertices=20 model=waxman(alpha=1,beta=1) seed=3\n")

    def test_missing_seed_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--family", "er", "--n", "5", "--p", "0.5")
        assert code == 1
        assert err

    def test_capacity_is_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "generate", "--family", "lattice", "--n", "400", "--r", "2",
            "--beta", "1", "--seed", "1"
        )
        assert code == 2
        assert "capacity" in err

    def test_coupled_requires_naive(self, capsys):
        code, _, _ = run_cli(
            capsys, "generate", "--family", "lattice", "--n", "5", "--r", "2", "--beta", "1",
            "--seed", "1", "--sampler", "stratified", "--coupled"
        )
        assert code == 1


class TestAnalyze:
    def test_pipeline_matches_in_process(self, capsys, tmp_path, monkeypatch):
        argv = ["generate", "--family", "lattice", "--n", "10", "--r", "2",
                "--beta", "1", "--seed", "42"]
        _, edge_text, _ = run_cli(capsys, *argv)

        path = tmp_path / "graph.edges"
        path.write_text(edge_text)
        code, out, _ = run_cli(capsys, "analyze", str(path))
        assert code == 0
        summary = json.loads(out)
        assert sum(summary["degree_histogram"].values()) == 100

        space = LatticeSpace(10, 2)
        direct = analyze(sample_lattice_graph_naive(space, InverseDistance(1.0, 10), 42))
        assert summary == direct.to_dict()

        monkeypatch.setattr("sys.stdin", io.StringIO(edge_text))
        code, out_stdin, _ = run_cli(capsys, "analyze")
        assert code == 0
        assert out_stdin == out

    def test_round_trip_preserves_graph(self, capsys, tmp_path):
        _, edge_text, _ = run_cli(
            capsys, "generate", "--family", "er", "--n", "40", "--p", "0.2", "--seed", "11"
        )
        graph = read_edge_list(io.StringIO(edge_text))
        assert graph.vertex_count == 40
        assert graph.provenance.seed == 11

    def test_csv_format(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("# vertices=3 model=constant(p=1) seed=0\n0 1\n"))
        code, out, _ = run_cli(capsys, "analyze", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("vertex_count,")
        assert lines[1].split(",")[0] == "3"

    def test_garbage_input_is_an_error(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("not an edge list\n"))
        code, _, err = run_cli(capsys, "analyze")
        assert code == 1
        assert err


class TestSweep:
    def config(self, tmp_path, **overrides):
        data = dict(
            model_family="erdos-renyi",
            n_values=[16],
            p_values=[0.0, 1.0],
            trials=3,
            master_seed=14,
        )
        data.update(overrides)
        path = tmp_path / "config.json"
        path.write_text(json.dumps(data))
        return str(path)

    def test_runs_config(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "sweep", "--config", self.config(tmp_path))
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("family,")
        assert len(lines) == 3
        assert lines[1].split(",")[5] == "0.000000"
        assert lines[2].split(",")[5] == "1.000000"

    def test_threads_do_not_change_bytes(self, capsys, tmp_path):
        cfg = self.config(tmp_path, model_family="lattice-inverse-distance",
                          p_values=None, beta_values=[0.5, 1.5], n_values=[8],
                          sampler="stratified", r=2)
        _, single, _ = run_cli(capsys, "sweep", "--config", cfg, "--threads", "1")
        _, pooled, _ = run_cli(capsys, "sweep", "--config", cfg, "--threads", "8")
        assert single == pooled

    def test_bad_config_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"model_family": "nope"}))
        code, _, err = run_cli(capsys, "sweep", "--config", str(path))
        assert code == 1
        assert err

    def test_missing_config_file(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "sweep", "--config", str(tmp_path / "absent.json"))
        assert code == 1


class TestUsage:
    def test_unknown_flag(self, capsys):
        code, _, err = run_cli(capsys, "count-shell", "--r", "2", "--d", "1", "--bogus")
        assert code == 1
        assert err

    def test_unknown_command(self, capsys):
        code, _, _ = run_cli(capsys, "transmogrify")
        assert code == 1

    def test_invalid_numeric_range(self, capsys):
        code, _, _ = run_cli(capsys, "count-shell", "--r", "0", "--d", "1")
        assert code == 1

    def test_out_file(self, capsys, tmp_path):
        out_path = tmp_path / "shell.txt"
        code, out, _ = run_cli(capsys, "count-shell", "--r", "2", "--d", "5", "--out", str(out_path))
        assert code == 0
        assert out == ""
        assert out_path.read_text() == "20\n"
