"""Exact counting on integer lattices under the Manhattan (l1) metric.

The central objects are the finite box ``{0, ..., n-1}^r`` and the infinite
lattice ``Z^r``.  Everything here is exact integer combinatorics: how many
lattice points sit at l1 distance exactly ``d`` from a fixed point (a
"shell"), and how many unordered vertex pairs of the box are separated by
each distance.  These counts feed the expected-degree computations and the
stratified graph sampler.

All counts are computed with Python integers, so they never overflow even
when pair counts grow like ``n^(2r)``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

Point = Tuple[int, ...]

BRUTE_FORCE_VERTEX_LIMIT = 2_000_000


@dataclass(frozen=True)
class LatticeSpace:
    """The box ``{0, ..., n-1}^r`` with the l1 metric.

    ``n`` is the number of vertices per axis, ``r`` the dimension.  Vertices
    are indexed 0..n^r-1 in row-major order (last coordinate varies fastest),
    which is the indexing every sampler and edge-list output uses.
    """

    n: int
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"side length must be >= 1, got {self.n}")
        if self.r < 1:
            raise ValueError(f"dimension must be >= 1, got {self.r}")

    @property
    def vertex_count(self) -> int:
        return self.n**self.r

    @property
    def max_distance(self) -> int:
        """Largest pairwise distance in the box: r*(n-1)."""
        return self.r * (self.n - 1)

    def contains(self, point: Sequence[int]) -> bool:
        return len(point) == self.r and all(0 <= c <= self.n - 1 for c in point)

    def index_of(self, point: Sequence[int]) -> int:
        """Row-major vertex index of ``point``."""
        if not self.contains(point):
            raise ValueError(f"{tuple(point)} is not in {self}")
        idx = 0
        for c in point:
            idx = idx * self.n + int(c)
        return idx

    def point_at(self, index: int) -> Point:
        """Inverse of :meth:`index_of`."""
        if not 0 <= index < self.vertex_count:
            raise ValueError(f"vertex index {index} out of range for {self}")
        coords = []
        for _ in range(self.r):
            index, c = divmod(index, self.n)
            coords.append(c)
        return tuple(reversed(coords))

    def describe(self) -> str:
        return f"lattice(n={self.n},r={self.r})"


def l1_distance(u: Sequence[int], v: Sequence[int]) -> int:
    """Manhattan distance between two integer points of equal dimension."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(abs(int(a) - int(b)) for a, b in zip(u, v))


class _ShellTable:
    """Memoized shell counts for Z^r.

    Row ``r`` holds ``a_r(0), a_r(1), ...`` where ``a_r(d)`` is the number of
    points of Z^r at l1 distance exactly d from any fixed point.  Rows grow
    on demand through the recursion

        a_{r+1}(d) = 2 * (a_r(0) + ... + a_r(d-1)) + a_r(d)

    (stack copies of Z^r along the new axis: the offset layers at +-k each
    contribute a_r(d-k), the zero layer contributes a_r(d)).  Prefix sums
    make each new entry O(1).  A lock guards growth so warmed-up tables can
    be read concurrently.
    """

    def __init__(self):
        self._counts: Dict[int, List[int]] = {}
        self._prefix: Dict[int, List[int]] = {}
        self._lock = threading.Lock()

    def count(self, r: int, d: int) -> int:
        counts = self._counts.get(r)
        if counts is not None and d < len(counts):
            return counts[d]
        with self._lock:
            self._grow(r, d)
            return self._counts[r][d]

    def _grow(self, r: int, d: int) -> None:
        if r == 1:
            counts = self._counts.setdefault(1, [1])
            prefix = self._prefix.setdefault(1, [1])
            while len(counts) <= d:
                counts.append(2)
                prefix.append(prefix[-1] + 2)
            return
        self._grow(r - 1, d)
        below_counts = self._counts[r - 1]
        below_prefix = self._prefix[r - 1]
        counts = self._counts.setdefault(r, [1])
        prefix = self._prefix.setdefault(r, [1])
        while len(counts) <= d:
            k = len(counts)
            value = 2 * below_prefix[k - 1] + below_counts[k]
            counts.append(value)
            prefix.append(prefix[-1] + value)


_SHELLS = _ShellTable()


def shell_count_infinite(r: int, d: int) -> int:
    """Number of points of Z^r at l1 distance exactly ``d`` from a point.

    Exact for all ``r >= 1, d >= 0``; in particular the count is 1 at d=0,
    2 for every positive d in dimension 1, and 4d in dimension 2.
    """
    if r < 1:
        raise ValueError(f"dimension must be >= 1, got {r}")
    if d < 0:
        raise ValueError(f"distance must be >= 0, got {d}")
    return _SHELLS.count(r, d)


def _shell_count_box_2d(n: int, v: Point, d: int) -> int:
    # Inclusion-exclusion against the four half-planes outside the box: the
    # full shell in Z^2 has 4d points; a side the shell overshoots by g = d -
    # gap swallows 2g - 1 of them, and points past two adjacent sides at once
    # (the corner wedges, m = d - gap_a - gap_b) were removed twice.
    d1, d2 = v
    gaps = (d1, d2, n - 1 - d1, n - 1 - d2)
    total = 4 * d
    for g in gaps:
        if d > g:
            total -= 2 * (d - g) - 1
    for ga, gb in (
        (d1, d2),
        (d1, n - 1 - d2),
        (n - 1 - d1, d2),
        (n - 1 - d1, n - 1 - d2),
    ):
        m = d - ga - gb
        if m >= 1:
            total += m - 1
    return total


def _axis_offset_counts(n: int, c: int, max_d: int) -> List[int]:
    """counts[k] = #\\{x in [0, n-1] : |x - c| = k\\}, for k = 0..max_d."""
    counts = [0] * (max_d + 1)
    counts[0] = 1
    for k in range(1, max_d + 1):
        counts[k] = (1 if c - k >= 0 else 0) + (1 if c + k <= n - 1 else 0)
    return counts


def _poly_mul(a: Sequence[int], b: Sequence[int], max_len: int | None = None) -> List[int]:
    out_len = len(a) + len(b) - 1
    if max_len is not None:
        out_len = min(out_len, max_len)
    out = [0] * out_len
    for i, ai in enumerate(a):
        if ai == 0 or i >= out_len:
            continue
        for j, bj in enumerate(b):
            if i + j >= out_len:
                break
            out[i + j] += ai * bj
    return out


def shell_count_finite(space: LatticeSpace, v: Sequence[int], d: int) -> int:
    """Number of box vertices at l1 distance exactly ``d`` from ``v``.

    Unlike the infinite lattice, the count depends on where ``v`` sits: shells
    get clipped by the box boundary.  Dimension 2 uses an exact closed form
    (constant time); other dimensions convolve the per-axis offset counts.
    Returns 0 whenever d exceeds the box diameter.
    """
    if not space.contains(v):
        raise ValueError(f"{tuple(v)} is not in {space}")
    if d < 0:
        raise ValueError(f"distance must be >= 0, got {d}")
    if d == 0:
        return 1
    if d > space.max_distance:
        return 0
    if space.r == 2:
        return _shell_count_box_2d(space.n, (int(v[0]), int(v[1])), d)
    conv = [1]
    for c in v:
        conv = _poly_mul(conv, _axis_offset_counts(space.n, int(c), d), max_len=d + 1)
    return conv[d] if d < len(conv) else 0


def shell_count_finite_bruteforce(space: LatticeSpace, v: Sequence[int], d: int) -> int:
    """Ground-truth shell count by scanning every vertex of the box.

    O(n^r); intended for validation at small sizes, and the authority the
    closed forms are tested against.
    """
    if not space.contains(v):
        raise ValueError(f"{tuple(v)} is not in {space}")
    if d < 0:
        raise ValueError(f"distance must be >= 0, got {d}")
    if space.vertex_count > BRUTE_FORCE_VERTEX_LIMIT:
        raise ValueError(
            f"brute force scan of {space.vertex_count} vertices refused "
            f"(limit {BRUTE_FORCE_VERTEX_LIMIT})"
        )
    axes = np.arange(space.n)
    dist = np.zeros((space.n,) * space.r, dtype=np.int64)
    for axis, c in enumerate(v):
        shape = [1] * space.r
        shape[axis] = space.n
        dist = dist + np.abs(axes - int(c)).reshape(shape)
    return int(np.count_nonzero(dist == d))


def ordered_displacement_counts_1d(n: int) -> List[int]:
    """counts[k] = number of ordered pairs (x, y) in [0, n-1]^2 with |x-y| = k."""
    return [n] + [2 * (n - k) for k in range(1, n)]


def displacement_weight_tables(n: int, r: int) -> List[List[int]]:
    """Convolution powers of the 1-d ordered displacement counts.

    ``tables[j][s]`` is the number of ordered j-dimensional displacement
    vectors with l1 weight s that fit inside the box along every axis,
    i.e. the number of ordered vertex pairs of ``{0..n-1}^j`` at distance s.
    ``tables[r]`` therefore counts ordered pairs of the full space, and the
    intermediate rows drive the stratified sampler's dimension-by-dimension
    unranking.
    """
    one_dim = ordered_displacement_counts_1d(n)
    tables = [[1]]
    for _ in range(r):
        tables.append(_poly_mul(tables[-1], one_dim))
    return tables


def pair_count_by_distance(space: LatticeSpace) -> Dict[int, int]:
    """Unordered vertex pairs of the box at each distance d = 1..r(n-1).

    Exact; the values over all d sum to ``n^r (n^r - 1) / 2``.
    """
    ordered = displacement_weight_tables(space.n, space.r)[space.r]
    return {d: ordered[d] // 2 for d in range(1, len(ordered))}


def iter_points(space: LatticeSpace) -> Iterable[Point]:
    """All points of the box in row-major (index) order."""
    return itertools.product(range(space.n), repeat=space.r)
