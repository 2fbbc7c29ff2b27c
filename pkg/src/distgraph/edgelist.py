"""Plain-text edge-list format.

Layout, chosen for diff-ability and byte-exact determinism checks:

    # vertices=<V> model=<desc> seed=<s>
    u v
    ...

with u < v on every line and lines sorted ascending lexicographically.
"""

from __future__ import annotations

import io
from typing import TextIO

import numpy as np

from .samplers import Provenance, SampledGraph, make_graph


def write_edge_list(graph: SampledGraph, stream: TextIO) -> None:
    prov = graph.provenance
    stream.write(f"# vertices={graph.vertex_count} model={prov.model} seed={prov.seed}\n")
    for u, v in graph.edges.tolist():
        stream.write(f"{u} {v}\n")


def format_edge_list(graph: SampledGraph) -> str:
    buf = io.StringIO()
    write_edge_list(graph, buf)
    return buf.getvalue()


def read_edge_list(stream: TextIO) -> SampledGraph:
    """Parse an edge list written by :func:`write_edge_list`."""
    header = stream.readline()
    if not header.startswith("# "):
        raise ValueError("edge list must start with a '# vertices=... model=... seed=...' header")
    fields = {}
    for token in header[2:].split():
        if "=" not in token:
            raise ValueError(f"malformed header token {token!r}")
        key, _, value = token.partition("=")
        fields[key] = value
    try:
        vertex_count = int(fields["vertices"])
        seed = int(fields["seed"])
        model = fields["model"]
    except KeyError as exc:
        raise ValueError(f"edge list header is missing field {exc}") from None
    edges = []
    for line_no, line in enumerate(stream, start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {line_no}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    prov = Provenance(model=model, space="edge-list", seed=seed, sampler="file")
    return make_graph(vertex_count, np.array(edges, dtype=np.int64).reshape(-1, 2), prov)
