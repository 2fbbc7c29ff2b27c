"""Exact shell counting on the lattice: infinite, boxed, and pair tables.

Run:  python demos/01_shell_counting.py
"""

from distgraph import (
    LatticeSpace,
    pair_count_by_distance,
    shell_count_finite,
    shell_count_finite_bruteforce,
    shell_count_infinite,
)

# --- shells of Z^r ---------------------------------------------------------
# shell_count_infinite(r, d) counts lattice points at l1 distance exactly d
# from any fixed point.  In dimension 2 the shell is a diamond with 4d
# points; higher dimensions follow a prefix-sum recursion.

print("shells of Z^r (rows r=1..4, columns d=0..8)")
for r in range(1, 5):
    row = [shell_count_infinite(r, d) for d in range(9)]
    print(f"  r={r}: {row}")

# --- boundary effects in a finite box --------------------------------------
# Inside a box the shells get clipped.  An interior vertex of a 100x100 box
# still sees the full diamond; a corner vertex sees only a quarter of it
# (and slightly less, since the two boundary rays overlap at the corner).

space = LatticeSpace(100, 2)
print("\nshell sizes at d=10 in a 100x100 box")
for label, v in [("center (50,50)", (50, 50)), ("edge (0,50)", (0, 50)), ("corner (0,0)", (0, 0))]:
    exact = shell_count_finite(space, v, 10)
    brute = shell_count_finite_bruteforce(space, v, 10)
    print(f"  {label:<16} closed form {exact:3d}   brute force {brute:3d}")

# The closed form is validated against brute force everywhere, including the
# awkward near-corner cases where two sides clip the same shell:
small = LatticeSpace(6, 2)
mismatches = sum(
    shell_count_finite(small, (x, y), d) != shell_count_finite_bruteforce(small, (x, y), d)
    for x in range(6)
    for y in range(6)
    for d in range(11)
)
print(f"\n6x6 box, all vertices x all distances: {mismatches} mismatches vs brute force")

# --- pair counts -----------------------------------------------------------
# pair_count_by_distance tabulates how many unordered vertex pairs sit at
# each distance; it is the backbone of the stratified sampler and of exact
# expected edge counts.

table = pair_count_by_distance(LatticeSpace(4, 2))
total = sum(table.values())
print("\nunordered pairs by distance in a 4x4 box")
for d in sorted(table):
    print(f"  d={d}: {table[d]}")
print(f"  total {total} = 16*15/2 = {16 * 15 // 2}")
