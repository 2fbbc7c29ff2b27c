"""Random graph samplers: lattice distance graphs, Waxman graphs, G(m, p).

Each sampler is a pure function of (inputs, seed): calling it twice with the
same arguments yields the identical graph.  Edges are returned canonically as
(u, v) with u < v, sorted lexicographically, so outputs are byte-stable.

Two lattice samplers are provided.  The naive one flips every vertex pair
and is quadratic in the vertex count; the stratified one exploits the fact
that the edge probability depends only on the pairwise distance.  Per
distance class it draws the edge count from the exact binomial and then
picks that many distinct pairs uniformly within the class, which induces
exactly the same distribution as the naive sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np
from scipy.spatial.distance import pdist

from .errors import CapacityError
from .lattice import LatticeSpace, displacement_weight_tables, ordered_displacement_counts_1d
from .models import Constant, EdgeProbabilityModel, WaxmanExponential
from .seeding import pair_uniforms

NAIVE_VERTEX_LIMIT = 100_000
STRATIFIED_VERTEX_LIMIT = 2**31
_PAIR_BLOCK = 1 << 21
_DRAW_CHUNK = 1 << 18


@dataclass(frozen=True)
class Provenance:
    """Where a graph came from: enough to regenerate it exactly."""

    model: str
    space: str
    seed: int
    sampler: str


@dataclass(frozen=True)
class SampledGraph:
    vertex_count: int
    edges: np.ndarray  # (m, 2) int64, u < v, lexicographically sorted, read-only
    provenance: Provenance

    @property
    def edge_count(self) -> int:
        return self.edges.shape[0]


@dataclass(frozen=True)
class EuclideanPointSet:
    """Points in the unit cube [0, 1]^r (read-only array of shape (k, r))."""

    points: np.ndarray
    r: int


def make_graph(vertex_count: int, edges, provenance: Provenance) -> SampledGraph:
    """Canonicalize and validate an edge set into a :class:`SampledGraph`.

    Orients each edge as (min, max), sorts lexicographically, and rejects
    self-loops, duplicates, and out-of-range endpoints.
    """
    if vertex_count < 1:
        raise ValueError(f"vertex_count must be >= 1, got {vertex_count}")
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if arr.size:
        if arr.min() < 0 or arr.max() >= vertex_count:
            raise ValueError("edge endpoint out of range")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        if np.any(lo == hi):
            raise ValueError("self-loops are not allowed")
        order = np.lexsort((hi, lo))
        arr = np.stack([lo[order], hi[order]], axis=1)
        keys = arr[:, 0] * vertex_count + arr[:, 1]
        if np.any(np.diff(keys) == 0):
            raise ValueError("duplicate edges are not allowed")
    arr.setflags(write=False)
    return SampledGraph(vertex_count=int(vertex_count), edges=arr, provenance=provenance)


def _lattice_coords(space: LatticeSpace) -> np.ndarray:
    idx = np.arange(space.vertex_count, dtype=np.int64)
    return np.stack(np.unravel_index(idx, (space.n,) * space.r), axis=1).astype(np.int64)


def _iter_pair_blocks(num_vertices: int, block: int = _PAIR_BLOCK) -> Iterator[Tuple[np.ndarray, np.ndarray, int]]:
    """Canonical pair enumeration (i < j, lexicographic) in bounded blocks.

    Yields (i_array, j_array, first_pair_index); concatenated across blocks
    this is exactly the pair order 0-1, 0-2, ..., 1-2, 1-3, ...
    """
    i_parts, j_parts = [], []
    count = 0
    start = 0
    for i in range(num_vertices - 1):
        row = num_vertices - 1 - i
        i_parts.append(np.full(row, i, dtype=np.int64))
        j_parts.append(np.arange(i + 1, num_vertices, dtype=np.int64))
        count += row
        if count >= block:
            yield np.concatenate(i_parts), np.concatenate(j_parts), start
            start += count
            i_parts, j_parts, count = [], [], 0
    if count:
        yield np.concatenate(i_parts), np.concatenate(j_parts), start


def sample_lattice_graph_naive(
    space: LatticeSpace,
    model: EdgeProbabilityModel,
    seed: int,
    coupled: bool = False,
) -> SampledGraph:
    """Flip every vertex pair of the box independently.

    Visits all n^r(n^r-1)/2 pairs, so spaces beyond ``NAIVE_VERTEX_LIMIT``
    vertices are refused.  With ``coupled=True`` the uniform for pair t is
    keyed by (seed, t) instead of drawn from a stream; graphs sampled with
    the same seed under different models then share their randomness, so a
    pointwise-smaller model yields a literal edge subset.
    """
    num = space.vertex_count
    if num > NAIVE_VERTEX_LIMIT:
        raise CapacityError(
            f"{num} vertices exceeds the naive sampler limit of {NAIVE_VERTEX_LIMIT}; "
            "use the stratified sampler"
        )
    coords = _lattice_coords(space)
    rng = None if coupled else np.random.Generator(np.random.PCG64(seed))
    chunks = []
    for i_arr, j_arr, start in _iter_pair_blocks(num):
        dist = np.abs(coords[i_arr] - coords[j_arr]).sum(axis=1)
        prob = model.probability(dist.astype(np.float64))
        if coupled:
            t = np.arange(start, start + i_arr.shape[0], dtype=np.uint64)
            u = pair_uniforms(seed, t)
        else:
            u = rng.random(i_arr.shape[0])
        keep = u < prob
        if keep.any():
            chunks.append(np.stack([i_arr[keep], j_arr[keep]], axis=1))
    edges = np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)
    prov = Provenance(
        model=model.describe(),
        space=space.describe(),
        seed=int(seed),
        sampler="naive-coupled" if coupled else "naive",
    )
    return make_graph(num, edges, prov)


class _StratifiedPairDrawer:
    """Uniform sampling of vertex pairs at a fixed l1 distance.

    Picks an ordered displacement vector with probability proportional to the
    number of base points it admits (dimension by dimension against the
    displacement-weight convolution tables), then a uniform base point, then
    canonicalizes.  Every ordered pair at the distance has probability
    1 / (#ordered pairs), so unordered pairs come out uniform.
    """

    def __init__(self, space: LatticeSpace, rng: np.random.Generator):
        self.space = space
        self.rng = rng
        n, r = space.n, space.r
        max_d = space.max_distance
        tables = displacement_weight_tables(n, r)
        self.ordered_totals = tables[r]
        c1 = np.array(ordered_displacement_counts_1d(n), dtype=np.float64)
        # cum[rem][s, a] = normalized cumulative weight of allocating a of the
        # remaining distance s to the current axis, with rem axes still to go
        self.cum = {}
        for rem in range(1, r):
            padded = np.zeros(max_d + 1, dtype=np.float64)
            row = np.array(tables[rem], dtype=np.float64)
            padded[: min(row.shape[0], max_d + 1)] = row[: max_d + 1]
            weights = np.zeros((max_d + 1, n), dtype=np.float64)
            for a in range(n):
                weights[a:, a] = c1[a] * padded[: max_d + 1 - a]
            cum = np.cumsum(weights, axis=1)
            # pin the trailing flat region (at and past the last feasible
            # allocation) to exactly 1.0, so rounding in the normalization can
            # never push a draw onto a zero-weight allocation
            tail = cum == cum[:, -1:]
            totals = cum[:, -1].copy()
            totals[totals == 0] = 1.0
            cum /= totals[:, None]
            cum[tail] = 1.0
            self.cum[rem] = cum
        self.strides = np.array([n ** (r - 1 - i) for i in range(r)], dtype=np.int64)

    def _draw_ordered(self, d: int, k: int) -> Tuple[np.ndarray, np.ndarray]:
        n, r = self.space.n, self.space.r
        rng = self.rng
        alloc = np.empty((k, r), dtype=np.int64)
        remaining = np.full(k, d, dtype=np.int64)
        for axis in range(r - 1):
            cum = self.cum[r - 1 - axis]
            u = rng.random(k)
            a = (cum[remaining] > u[:, None]).argmax(axis=1)
            alloc[:, axis] = a
            remaining -= a
        alloc[:, r - 1] = remaining
        positive = rng.integers(0, 2, size=(k, r)).astype(bool)
        base = rng.integers(0, n - alloc)
        u_coord = np.where(positive, base, base + alloc)
        v_coord = np.where(positive, base + alloc, base)
        return u_coord @ self.strides, v_coord @ self.strides

    def draw_distinct(self, d: int, k: int) -> np.ndarray:
        """k distinct unordered pairs at distance d, as (k, 2) index array.

        Collisions are re-drawn; keeping the first k distinct values of the
        i.i.d. stream leaves every k-subset of the class equally likely.
        """
        num = self.space.vertex_count
        collected = np.empty(0, dtype=np.int64)
        while collected.shape[0] < k:
            need = min(k - collected.shape[0], _DRAW_CHUNK)
            iu, iv = self._draw_ordered(d, need)
            keys = np.minimum(iu, iv) * num + np.maximum(iu, iv)
            _, first = np.unique(keys, return_index=True)
            batch = keys[np.sort(first)]
            fresh = batch[~np.isin(batch, collected)]
            collected = np.concatenate([collected, fresh])
        return np.stack([collected // num, collected % num], axis=1)


def sample_lattice_graph_stratified(
    space: LatticeSpace, model: EdgeProbabilityModel, seed: int
) -> SampledGraph:
    """Sample the lattice distance graph one distance class at a time.

    For each distance d the number of edges is Binomial(#pairs at d, p(d))
    and the edges themselves are a uniform subset of the class, which is
    distribution-identical to flipping every pair independently.  Runs in
    time proportional to the realized edge count rather than the pair count.
    """
    num = space.vertex_count
    if num > STRATIFIED_VERTEX_LIMIT:
        raise CapacityError(f"{num} vertices exceeds the stratified sampler limit")
    rng = np.random.Generator(np.random.PCG64(seed))
    drawer = _StratifiedPairDrawer(space, rng)
    chunks = []
    for d in range(1, space.max_distance + 1):
        ordered_total = drawer.ordered_totals[d]
        pairs_at_d = ordered_total // 2
        if pairs_at_d == 0:
            continue
        if pairs_at_d >= 2**62:
            raise CapacityError(f"pair count at distance {d} overflows the binomial sampler")
        p = model.probability(float(d))
        k = int(rng.binomial(pairs_at_d, p))
        if k:
            chunks.append(drawer.draw_distinct(d, k))
    edges = np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)
    prov = Provenance(
        model=model.describe(), space=space.describe(), seed=int(seed), sampler="stratified"
    )
    return make_graph(num, edges, prov)


def _condensed_to_pairs(kept: np.ndarray, num_points: int) -> np.ndarray:
    """Map condensed upper-triangle pair indices back to (i, j) with i < j."""
    row_lengths = num_points - 1 - np.arange(num_points - 1, dtype=np.int64)
    starts = np.concatenate([[0], np.cumsum(row_lengths)])
    i = np.searchsorted(starts, kept, side="right") - 1
    j = kept - starts[i] + i + 1
    return np.stack([i, j], axis=1)


def sample_waxman_graph(
    num_points: int, r: int, model: EdgeProbabilityModel, seed: int
) -> Tuple[EuclideanPointSet, SampledGraph]:
    """Classic Waxman graph: uniform points in [0, 1]^r, pairwise coin flips.

    Pair probabilities come from the Euclidean (l2) distance between the two
    endpoints.  Only the Waxman exponential and constant models make sense
    here; anything else is rejected.
    """
    if num_points < 1:
        raise ValueError(f"num_points must be >= 1, got {num_points}")
    if r < 1:
        raise ValueError(f"dimension must be >= 1, got {r}")
    if not isinstance(model, (WaxmanExponential, Constant)):
        raise ValueError("Waxman sampling requires a WaxmanExponential or Constant model")
    rng = np.random.Generator(np.random.PCG64(seed))
    points = rng.random((num_points, r))
    if num_points > 1:
        dist = pdist(points)
        # coincident points have probability 0 but would hit the d<=0 guard
        dist = np.maximum(dist, np.finfo(np.float64).tiny)
        u = rng.random(dist.shape[0])
        kept = np.flatnonzero(u < model.probability(dist))
        edges = _condensed_to_pairs(kept, num_points)
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    points.setflags(write=False)
    prov = Provenance(
        model=model.describe(),
        space=f"unit-cube(r={r},points={num_points})",
        seed=int(seed),
        sampler="waxman",
    )
    return EuclideanPointSet(points=points, r=r), make_graph(num_points, edges, prov)


def sample_er_graph(m: int, p: float, seed: int) -> SampledGraph:
    """Erdos-Renyi G(m, p): every pair is an edge independently w.p. p."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    total = m * (m - 1) // 2
    kept = []
    offset = 0
    while offset < total:
        size = min(_PAIR_BLOCK, total - offset)
        u = rng.random(size)
        hits = np.flatnonzero(u < p)
        if hits.size:
            kept.append(hits + offset)
        offset += size
    if kept:
        edges = _condensed_to_pairs(np.concatenate(kept), m)
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    prov = Provenance(
        model=Constant(p).describe(), space=f"complete(m={m})", seed=int(seed), sampler="er"
    )
    return make_graph(m, edges, prov)
