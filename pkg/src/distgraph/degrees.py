"""Exact expected-degree sums: shell count times edge probability, per shell."""

from __future__ import annotations

from typing import Sequence

from .lattice import LatticeSpace, shell_count_finite, shell_count_infinite
from .models import EdgeProbabilityModel


def expected_degree_infinite(r: int, cutoff: int, model: EdgeProbabilityModel) -> float:
    """Expected degree of any vertex of Z^r, edges truncated beyond ``cutoff``.

    The infinite lattice is vertex transitive, so no reference vertex is
    needed: the value is sum over d = 1..cutoff of (shell size) * p(d).
    With the inverse-distance model and cutoff 2(n-1) in dimension 2 this
    collapses to 4(2n-2)/n^beta.
    """
    if r < 1:
        raise ValueError(f"dimension must be >= 1, got {r}")
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    return sum(
        shell_count_infinite(r, d) * model.probability(float(d)) for d in range(1, cutoff + 1)
    )


def expected_degree_finite(
    space: LatticeSpace, model: EdgeProbabilityModel, v: Sequence[int]
) -> float:
    """Expected degree of vertex ``v`` in the boxed lattice graph.

    Boundary vertices see clipped shells, so this is at most the
    corresponding infinite-lattice value at cutoff r(n-1).
    """
    return sum(
        shell_count_finite(space, v, d) * model.probability(float(d))
        for d in range(1, space.max_distance + 1)
    )
