"""Sweep harness: seed derivation, reproducibility, aggregation, capacity."""

import json

import pytest

from distgraph.harness import (
    CSV_HEADER,
    FAMILY_ER,
    FAMILY_LATTICE,
    FAMILY_WAXMAN,
    SweepConfig,
    rows_to_csv,
    rows_to_json,
    run_sweep,
)
from distgraph.seeding import derive_trial_seed


class TestDeriveTrialSeed:
    def test_deterministic(self):
        assert derive_trial_seed(99, 3, 7) == derive_trial_seed(99, 3, 7)

    def test_orthogonal_in_indices(self):
        assert derive_trial_seed(5, 0, 0) != derive_trial_seed(5, 0, 1)
        assert derive_trial_seed(5, 0, 0) != derive_trial_seed(5, 1, 0)

    def test_no_collisions_across_grid(self):
        seeds = {
            derive_trial_seed(123456789, g, t) for g in range(100) for t in range(100)
        }
        assert len(seeds) == 10_000

    def test_64_bit_range(self):
        for g in range(20):
            s = derive_trial_seed(2**63 + 17, g, g + 1)
            assert 0 <= s < 2**64


def lattice_config(**overrides):
    base = dict(
        model_family=FAMILY_LATTICE,
        r=2,
        n_values=[6, 8],
        beta_values=[0.5, 1.5],
        trials=4,
        master_seed=2024,
        sampler="stratified",
    )
    base.update(overrides)
    return SweepConfig(**base)


class TestSweepConfig:
    def test_grid_order(self):
        cfg = lattice_config()
        assert cfg.grid() == [(6, 0.5), (6, 1.5), (8, 0.5), (8, 1.5)]

    def test_validation(self):
        with pytest.raises(ValueError):
            lattice_config(trials=0)
        with pytest.raises(ValueError):
            lattice_config(n_values=[1])
        with pytest.raises(ValueError):
            lattice_config(model_family="mystery")
        with pytest.raises(ValueError):
            lattice_config(beta_values=None)
        with pytest.raises(ValueError):
            lattice_config(sampler="quantum")
        with pytest.raises(ValueError):
            lattice_config(coupled=True)  # stratified cannot couple

    def test_er_config_uses_p_values(self):
        cfg = SweepConfig(
            model_family=FAMILY_ER, n_values=[50], p_values=[0.1, 0.2], trials=2, master_seed=1
        )
        assert cfg.grid() == [(50, 0.1), (50, 0.2)]

    def test_round_trip_through_json(self, tmp_path):
        cfg = lattice_config()
        path = tmp_path / "sweep.json"
        path.write_text(json.dumps(cfg.to_dict()))
        assert SweepConfig.from_json_file(str(path)) == cfg

    def test_unknown_fields_rejected(self):
        with pytest.raises(ValueError):
            SweepConfig.from_dict({"model_family": FAMILY_ER, "n_values": [10], "trials": 1,
                                   "master_seed": 0, "p_values": [0.5], "bogus": 1})


class TestRunSweep:
    def test_er_extremes(self):
        cfg = SweepConfig(
            model_family=FAMILY_ER, n_values=[20], p_values=[0.0, 1.0], trials=3, master_seed=5
        )
        empty, complete = run_sweep(cfg)
        assert empty.fraction_connected == 0.0
        assert empty.mean_isolated_fraction == 1.0
        assert empty.mean_degree == 0.0
        assert complete.fraction_connected == 1.0
        assert complete.mean_isolated_fraction == 0.0
        assert complete.mean_largest_component_fraction == 1.0

    def test_rows_in_grid_order(self):
        rows = run_sweep(lattice_config())
        assert [(row.n, row.beta_or_p) for row in rows] == lattice_config().grid()
        assert all(row.status == "ok" for row in rows)

    def test_reproducible(self):
        a = run_sweep(lattice_config())
        b = run_sweep(lattice_config())
        assert rows_to_csv(a) == rows_to_csv(b)

    def test_thread_count_does_not_change_output(self):
        cfg = lattice_config(trials=6)
        single = rows_to_csv(run_sweep(cfg, threads=1))
        pooled = rows_to_csv(run_sweep(cfg, threads=8))
        assert single == pooled

    def test_coupled_monotone_in_beta(self):
        cfg = lattice_config(
            n_values=[8],
            beta_values=[0.2, 0.6, 1.0, 1.4, 1.8],
            sampler="naive",
            coupled=True,
            trials=5,
        )
        rows = run_sweep(cfg)
        fractions = [row.fraction_connected for row in rows]
        assert fractions == sorted(fractions, reverse=True)

    def test_capacity_failure_marks_row_and_continues(self):
        cfg = lattice_config(n_values=[6, 400], sampler="naive", trials=2)
        rows = run_sweep(cfg)
        by_n = {(row.n, row.beta_or_p): row for row in rows}
        assert by_n[(6, 0.5)].status == "ok"
        assert by_n[(400, 0.5)].status == "capacity-error"
        assert by_n[(400, 0.5)].fraction_connected != by_n[(400, 0.5)].fraction_connected  # nan

    def test_waxman_family(self):
        cfg = SweepConfig(
            model_family=FAMILY_WAXMAN,
            r=2,
            n_values=[40],
            alpha=1.0,
            beta_w_values=[1.0],
            trials=3,
            master_seed=9,
        )
        (row,) = run_sweep(cfg)
        assert row.status == "ok"
        assert row.fraction_connected == 1.0


class TestSerialization:
    def test_csv_schema(self):
        rows = run_sweep(lattice_config(trials=2))
        text = rows_to_csv(rows)
        lines = text.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + len(rows)
        first = lines[1].split(",")
        assert first[0] == FAMILY_LATTICE
        assert first[3] == "0.500000"
        assert first[-1] == "0"  # timing suppressed by default

    def test_csv_timing_opt_in(self):
        rows = run_sweep(lattice_config(trials=2))
        rows[0].wall_time_ms = 1234
        text = rows_to_csv(rows, include_timing=True)
        assert text.split("\n")[1].endswith(",1234")

    def test_json_round_trips(self):
        rows = run_sweep(lattice_config(trials=2))
        payload = json.loads(rows_to_json(rows))
        assert len(payload) == len(rows)
        assert payload[0]["family"] == FAMILY_LATTICE
        assert payload[0]["wall_time_ms"] == 0
