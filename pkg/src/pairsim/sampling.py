"""Measurement simulation by weighted reservoir sampling.

``get_samples`` draws i.i.d. shots from the state's outcome distribution
in a single pass over the amplitudes.  Every shot keeps its own one-slot
reservoir: when outcome i with weight w = |a_i|^2 arrives, it replaces the
current holder of each shot independently with probability w / W, where W
is the running weight total.  After the pass each reservoir holds outcome
i with probability exactly w_i / W_total, so no cumulative table is ever
built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

_NORM_REJECT = 1e-6


@dataclass
class SampleSet:
    """Outcome samples for a fixed shot count, tagged with the RNG seed."""

    shots: int
    outcomes: np.ndarray
    seed: int

    def counts(self) -> dict[int, int]:
        """Outcome -> occurrence count over all shots."""
        return dict(Counter(int(o) for o in self.outcomes))


def _check_args(state, shots: int, seed: int) -> None:
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must fit an unsigned 64-bit integer")
    norm = state.total_norm()
    if abs(norm - 1.0) > _NORM_REJECT:
        raise ValueError(f"state is not normalized (total norm {norm})")


def get_samples(state, shots: int, seed: int) -> SampleSet:
    """Sample measurement outcomes for the given number of shots.

    Deterministic for a fixed (state, shots, seed).  The amplitude arrays
    are read exactly once; per-outcome work is one vectorized Bernoulli
    draw across all shots (skipped for zero-weight outcomes).
    """
    _check_args(state, shots, seed)
    weights = state.reals.astype(np.float64) ** 2 + state.imags.astype(np.float64) ** 2
    rng = np.random.default_rng(seed)
    outcomes = np.zeros(shots, dtype=np.uint64)
    total = 0.0
    for i, w in enumerate(weights):
        total += w
        if w == 0.0:
            continue
        replace = rng.random(shots) < (w / total)
        outcomes[replace] = i
    return SampleSet(shots=shots, outcomes=outcomes, seed=seed)


def inverse_cdf_samples(state, shots: int, seed: int) -> SampleSet:
    """Reference sampler: cumulative table plus binary search.

    Independent of the reservoir path; kept for cross-validation only.
    """
    _check_args(state, shots, seed)
    weights = state.reals.astype(np.float64) ** 2 + state.imags.astype(np.float64) ** 2
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    idx = np.searchsorted(cdf, rng.random(shots), side="right")
    idx = np.minimum(idx, weights.size - 1)
    return SampleSet(shots=shots, outcomes=idx.astype(np.uint64), seed=seed)
