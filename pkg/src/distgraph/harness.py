"""Seeded Monte Carlo sweeps over (n, parameter) grids.

A sweep walks a grid of graph sizes and model parameters, samples ``trials``
independent graphs per grid point, and aggregates connectivity statistics
into one row per point.  Every trial's seed is derived from (master seed,
grid index, trial index), so results are identical no matter how many worker
threads run the trials, and a whole sweep is reproducible from its config.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .analysis import analyze
from .errors import CapacityError
from .lattice import LatticeSpace
from .models import InverseDistance, WaxmanExponential
from .samplers import (
    sample_er_graph,
    sample_lattice_graph_naive,
    sample_lattice_graph_stratified,
    sample_waxman_graph,
)
from .seeding import derive_trial_seed

FAMILY_LATTICE = "lattice-inverse-distance"
FAMILY_WAXMAN = "waxman"
FAMILY_ER = "erdos-renyi"
FAMILIES = (FAMILY_LATTICE, FAMILY_WAXMAN, FAMILY_ER)

CSV_HEADER = (
    "family,r,n,beta_or_p,trials,fraction_connected,mean_isolated_fraction,"
    "mean_largest_component_fraction,mean_degree,status,wall_time_ms"
)


@dataclass
class SweepConfig:
    """Grid description for one sweep.

    ``n_values`` means lattice side length, Waxman point count, or ER vertex
    count depending on the family.  The swept parameter is ``beta_values``
    for the lattice family, ``p_values`` for ER, and ``beta_w_values`` (with
    a fixed ``alpha``) for Waxman.  JSON configs mirror these field names.
    """

    model_family: str
    n_values: List[int]
    trials: int
    master_seed: int
    r: int = 2
    beta_values: Optional[List[float]] = None
    p_values: Optional[List[float]] = None
    alpha: float = 1.0
    beta_w_values: Optional[List[float]] = None
    sampler: str = "stratified"
    coupled: bool = False

    def __post_init__(self):
        if self.model_family not in FAMILIES:
            raise ValueError(f"unknown model family {self.model_family!r}; expected one of {FAMILIES}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.n_values or any(n < 2 for n in self.n_values):
            raise ValueError("n_values must be a nonempty list of integers >= 2")
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.sampler not in ("naive", "stratified"):
            raise ValueError(f"sampler must be 'naive' or 'stratified', got {self.sampler!r}")
        if self.coupled and self.sampler != "naive":
            raise ValueError("coupled sampling is only available with the naive sampler")
        if not self.parameter_values():
            raise ValueError(f"family {self.model_family!r} needs a nonempty {self._param_field()}")

    def _param_field(self) -> str:
        return {
            FAMILY_LATTICE: "beta_values",
            FAMILY_ER: "p_values",
            FAMILY_WAXMAN: "beta_w_values",
        }[self.model_family]

    def parameter_values(self) -> List[float]:
        values = getattr(self, self._param_field())
        return list(values) if values else []

    def grid(self) -> List[Tuple[int, float]]:
        """Grid points in emission order: n-major, parameter-minor."""
        return [(n, value) for n in self.n_values for value in self.parameter_values()]

    def to_dict(self) -> dict:
        out = {
            "model_family": self.model_family,
            "r": self.r,
            "n_values": list(self.n_values),
            self._param_field(): self.parameter_values(),
            "trials": self.trials,
            "master_seed": self.master_seed,
            "sampler": self.sampler,
            "coupled": self.coupled,
        }
        if self.model_family == FAMILY_WAXMAN:
            out["alpha"] = self.alpha
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown sweep config fields: {sorted(unknown)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ValueError(f"incomplete sweep config: {exc}") from None

    @classmethod
    def from_json_file(cls, path: str) -> "SweepConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


@dataclass
class SweepRow:
    family: str
    r: int
    n: int
    beta_or_p: float
    trials: int
    fraction_connected: float
    mean_isolated_fraction: float
    mean_largest_component_fraction: float
    mean_degree: float
    status: str
    wall_time_ms: int


@dataclass
class _TrialResult:
    connected: bool
    isolated_fraction: float
    largest_fraction: float
    mean_degree: float
    elapsed: float


def _sample_trial(config: SweepConfig, n: int, param: float, seed: int):
    if config.model_family == FAMILY_LATTICE:
        space = LatticeSpace(n=n, r=config.r)
        model = InverseDistance(beta=param, n=n)
        if config.sampler == "naive":
            return sample_lattice_graph_naive(space, model, seed, coupled=config.coupled)
        return sample_lattice_graph_stratified(space, model, seed)
    if config.model_family == FAMILY_WAXMAN:
        model = WaxmanExponential(alpha=config.alpha, beta=param)
        return sample_waxman_graph(n, config.r, model, seed)[1]
    return sample_er_graph(n, param, seed)


def _run_trial(
    config: SweepConfig, n: int, param: float, seed_index: int, trial_index: int
) -> _TrialResult:
    seed = derive_trial_seed(config.master_seed, seed_index, trial_index)
    start = time.perf_counter()
    graph = _sample_trial(config, n, param, seed)
    summary = analyze(graph)
    elapsed = time.perf_counter() - start
    return _TrialResult(
        connected=summary.component_count == 1,
        isolated_fraction=summary.isolated_count / summary.vertex_count,
        largest_fraction=summary.largest_component_size / summary.vertex_count,
        mean_degree=summary.mean_degree,
        elapsed=elapsed,
    )


def run_sweep(config: SweepConfig, threads: int = 1) -> List[SweepRow]:
    """Run the whole grid; one aggregated row per grid point, in grid order.

    Trials run concurrently across ``threads`` workers but are aggregated in
    a fixed order after all finish, so the rows do not depend on scheduling.
    A grid point whose graphs exceed sampler capacity is reported with a
    ``capacity-error`` status instead of aborting the sweep.

    Trial seeds are keyed by (master seed, grid index, trial index); in
    coupled mode the key uses the n index instead of the flat grid index, so
    trial t at a given n reuses one pool of pair uniforms across the whole
    parameter grid and its edge sets are nested in beta.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    grid = config.grid()
    params_per_n = len(config.parameter_values())
    cells = [(g, t) for g in range(len(grid)) for t in range(config.trials)]
    results: dict = {}

    def worker(cell):
        g, t = cell
        n, param = grid[g]
        seed_index = g // params_per_n if config.coupled else g
        try:
            return cell, _run_trial(config, n, param, seed_index, t)
        except CapacityError as exc:
            return cell, exc

    if threads == 1:
        outcomes = map(worker, cells)
    else:
        pool = ThreadPoolExecutor(max_workers=threads)
        try:
            outcomes = list(pool.map(worker, cells))
        finally:
            pool.shutdown()
    for cell, outcome in outcomes:
        results[cell] = outcome

    rows = []
    for g, (n, param) in enumerate(grid):
        trials = [results[(g, t)] for t in range(config.trials)]
        failures = [t for t in trials if isinstance(t, CapacityError)]
        if failures:
            rows.append(
                SweepRow(
                    family=config.model_family,
                    r=config.r,
                    n=n,
                    beta_or_p=param,
                    trials=config.trials,
                    fraction_connected=float("nan"),
                    mean_isolated_fraction=float("nan"),
                    mean_largest_component_fraction=float("nan"),
                    mean_degree=float("nan"),
                    status="capacity-error",
                    wall_time_ms=0,
                )
            )
            continue
        count = config.trials
        rows.append(
            SweepRow(
                family=config.model_family,
                r=config.r,
                n=n,
                beta_or_p=param,
                trials=count,
                fraction_connected=sum(t.connected for t in trials) / count,
                mean_isolated_fraction=sum(t.isolated_fraction for t in trials) / count,
                mean_largest_component_fraction=sum(t.largest_fraction for t in trials) / count,
                mean_degree=sum(t.mean_degree for t in trials) / count,
                status="ok",
                wall_time_ms=int(sum(t.elapsed for t in trials) * 1000),
            )
        )
    return rows


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def rows_to_csv(rows: Sequence[SweepRow], include_timing: bool = False) -> str:
    """Render sweep rows per the fixed CSV schema.

    Timing is nondeterministic, so the wall_time_ms column is written as 0
    unless ``include_timing`` is set; everything else is byte-stable for a
    fixed config.
    """
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    row.family,
                    str(row.r),
                    str(row.n),
                    _fmt(row.beta_or_p),
                    str(row.trials),
                    _fmt(row.fraction_connected),
                    _fmt(row.mean_isolated_fraction),
                    _fmt(row.mean_largest_component_fraction),
                    _fmt(row.mean_degree),
                    row.status,
                    str(row.wall_time_ms if include_timing else 0),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[SweepRow], include_timing: bool = False) -> str:
    payload = []
    for row in rows:
        item = {
            "family": row.family,
            "r": row.r,
            "n": row.n,
            "beta_or_p": round(row.beta_or_p, 6),
            "trials": row.trials,
            "fraction_connected": _json_num(row.fraction_connected),
            "mean_isolated_fraction": _json_num(row.mean_isolated_fraction),
            "mean_largest_component_fraction": _json_num(row.mean_largest_component_fraction),
            "mean_degree": _json_num(row.mean_degree),
            "status": row.status,
            "wall_time_ms": row.wall_time_ms if include_timing else 0,
        }
        payload.append(item)
    return json.dumps(payload, indent=2) + "\n"


def _json_num(x: float):
    if x != x:
        return None
    return round(x, 6)
