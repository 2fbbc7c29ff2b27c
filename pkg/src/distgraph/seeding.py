"""Deterministic seed derivation and keyed per-pair uniforms.

Built on the SplitMix64 finalizer, a fixed published bit mixer.  Trial seeds
depend only on (master seed, grid index, trial index), so a sweep produces
identical results no matter how its trials are scheduled.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def splitmix64(x: int) -> int:
    """One SplitMix64 step: advance by the golden-ratio increment and mix."""
    x = (x + _GOLDEN) & MASK64
    x = ((x ^ (x >> 30)) * _MIX_A) & MASK64
    x = ((x ^ (x >> 27)) * _MIX_B) & MASK64
    return x ^ (x >> 31)


def derive_trial_seed(master_seed: int, grid_index: int, trial_index: int) -> int:
    """64-bit seed for one (grid point, trial) cell of a sweep.

    Deterministic, and distinct inputs collide only with ~2^-64 probability.
    """
    h = splitmix64(master_seed & MASK64)
    h = splitmix64(h ^ (grid_index & MASK64))
    h = splitmix64(h ^ (trial_index & MASK64))
    return h


def _splitmix64_array(x: np.ndarray) -> np.ndarray:
    x = x + np.uint64(_GOLDEN)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(_MIX_A)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(_MIX_B)
    return x ^ (x >> np.uint64(31))


def pair_uniforms(seed: int, pair_indices: np.ndarray) -> np.ndarray:
    """Uniform [0, 1) variate per pair index, keyed by (seed, index) alone.

    The draw for pair t never depends on which other pairs are evaluated or
    on any model parameter, so two samplers sharing a seed share all their
    randomness pair-for-pair (the coupling used for monotonicity checks).
    Uses the top 53 mixed bits, so results are exact doubles strictly < 1.
    """
    key = np.uint64(splitmix64(seed & MASK64))
    mixed = _splitmix64_array(pair_indices.astype(np.uint64) ^ key)
    return (mixed >> np.uint64(11)).astype(np.float64) / float(1 << 53)
