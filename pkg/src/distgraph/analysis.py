"""Connectivity and degree statistics for sampled graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from .samplers import SampledGraph


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return
        if self.size[ri] < self.size[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        self.size[ri] += self.size[rj]


@dataclass(frozen=True)
class ComponentSummary:
    vertex_count: int
    edge_count: int
    component_count: int
    largest_component_size: int
    isolated_count: int
    degree_histogram: Dict[int, int]
    mean_degree: float

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "component_count": self.component_count,
            "largest_component_size": self.largest_component_size,
            "isolated_count": self.isolated_count,
            "mean_degree": round(self.mean_degree, 6),
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
        }


def analyze(graph: SampledGraph) -> ComponentSummary:
    """Component structure and degree statistics in one union-find pass."""
    num = graph.vertex_count
    edges = graph.edges
    if edges.size and (edges.min() < 0 or edges.max() >= num):
        raise ValueError("edge endpoint out of range")
    degrees = np.bincount(edges.ravel(), minlength=num)
    uf = UnionFind(num)
    for u, v in edges.tolist():
        uf.union(u, v)
    roots = {uf.find(i) for i in range(num)}
    histogram_counts = np.bincount(degrees)
    histogram = {int(d): int(c) for d, c in enumerate(histogram_counts) if c}
    return ComponentSummary(
        vertex_count=num,
        edge_count=graph.edge_count,
        component_count=len(roots),
        largest_component_size=max(uf.size[r] for r in roots),
        isolated_count=histogram.get(0, 0),
        degree_histogram=histogram,
        mean_degree=2.0 * graph.edge_count / num,
    )


def is_connected(graph: SampledGraph) -> bool:
    """A single-vertex graph counts as connected."""
    return analyze(graph).component_count == 1
