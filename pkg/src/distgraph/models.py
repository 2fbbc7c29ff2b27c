"""Distance-to-probability functions used by the graph samplers.

Every model maps a positive distance to an edge probability in [0, 1] and is
non-increasing in the distance.  Distance 0 is deliberately rejected: the
samplers never evaluate self-pairs, and the inverse-distance family has a
pole there.

Models evaluate scalars or numpy arrays elementwise via
:meth:`EdgeProbabilityModel.probability`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def _format_num(x) -> str:
    return format(x, "g")


class EdgeProbabilityModel:
    """Base class; subclasses implement :meth:`_evaluate` on positive floats."""

    def probability(self, d):
        """Edge probability at distance ``d`` (> 0); elementwise on arrays."""
        arr = np.asarray(d, dtype=float)
        if np.any(arr <= 0):
            raise ValueError("edge probability is only defined for distance > 0")
        out = self._evaluate(arr)
        if arr.ndim == 0:
            return float(out)
        return out

    def _evaluate(self, d: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class InverseDistance(EdgeProbabilityModel):
    """p(d) = 1 / (n^beta * d), clamped into [0, 1].

    ``n`` is the side length of the lattice the model is paired with; ``beta``
    may be any real (negative beta makes the raw value exceed 1 at small
    distances, hence the clamp).
    """

    beta: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    def _evaluate(self, d):
        with np.errstate(divide="ignore", over="ignore"):
            raw = 1.0 / (float(self.n) ** self.beta * d)
        return np.clip(raw, 0.0, 1.0)

    def describe(self) -> str:
        return f"inverse-distance(beta={_format_num(self.beta)},n={self.n})"


@dataclass(frozen=True)
class WaxmanExponential(EdgeProbabilityModel):
    """p(d) = alpha * exp(-d / beta), the classic Waxman decay.

    Both parameters live in (0, 1].
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not 0 < self.alpha <= 1:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0 < self.beta <= 1:
            raise ValueError(f"beta must be in (0, 1], got {self.beta}")

    def _evaluate(self, d):
        return self.alpha * np.exp(-d / self.beta)

    def describe(self) -> str:
        return f"waxman(alpha={_format_num(self.alpha)},beta={_format_num(self.beta)})"


@dataclass(frozen=True)
class Constant(EdgeProbabilityModel):
    """p(d) = p for every distance; the Erdos-Renyi kernel."""

    p: float

    def __post_init__(self):
        if not 0 <= self.p <= 1 or math.isnan(self.p):
            raise ValueError(f"p must be in [0, 1], got {self.p}")

    def _evaluate(self, d):
        return np.full_like(d, self.p, dtype=float)

    def describe(self) -> str:
        return f"constant(p={_format_num(self.p)})"


@dataclass(frozen=True)
class Truncated(EdgeProbabilityModel):
    """Wraps another model and forces probability 0 beyond ``cutoff``."""

    inner: EdgeProbabilityModel
    cutoff: float

    def __post_init__(self):
        if not self.cutoff > 0:
            raise ValueError(f"cutoff must be positive, got {self.cutoff}")

    def _evaluate(self, d):
        return np.where(d > self.cutoff, 0.0, self.inner._evaluate(d))

    def describe(self) -> str:
        return f"truncated({self.inner.describe()},cutoff={_format_num(self.cutoff)})"
