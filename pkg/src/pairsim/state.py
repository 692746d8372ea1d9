"""Quantum state storage and probability queries.

An n-qubit state holds its 2^n complex amplitudes as two parallel float
arrays, one for real parts and one for imaginary parts.  Keeping the
components in separate contiguous arrays lets the gate kernels run
single-component inner loops instead of interleaved complex arithmetic.
Outcome i is the n-bit string of i with qubits indexed from the right
(bit 0 is qubit 0).
"""

from __future__ import annotations

import numpy as np

from . import config


class CapacityError(MemoryError):
    """Requested state exceeds the configured allocation ceiling."""


class State:
    """2^n amplitudes split into parallel real/imaginary arrays.

    A fresh state is |0...0>: reals[0] == 1, everything else zero.
    States are mutated in place by gate application and owned by a single
    thread at a time; hand the whole object over to move work elsewhere.
    """

    __slots__ = ("reals", "imags", "n")

    def __init__(self, n: int):
        if not 1 <= n <= 63:
            raise ValueError(f"qubit count must be in [1, 63], got {n}")
        dtype = config.float_dtype()
        needed = (1 << n) * 2 * dtype.itemsize
        limit = config.memory_limit_bytes()
        if needed > limit:
            raise CapacityError(
                f"state of {n} qubits needs {needed} bytes of amplitude storage, "
                f"over the configured ceiling of {limit} bytes"
            )
        self.n = n
        self.reals = np.zeros(1 << n, dtype=dtype)
        self.imags = np.zeros(1 << n, dtype=dtype)
        self.reals[0] = 1.0

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "State":
        """Build a state from a length-2^n complex vector (no normalization)."""
        vec = np.asarray(amplitudes, dtype=np.complex128)
        if vec.ndim != 1 or vec.size == 0 or vec.size & (vec.size - 1):
            raise ValueError("amplitude vector length must be a power of two")
        n = vec.size.bit_length() - 1
        if n == 0:
            raise ValueError("need at least one qubit")
        state = cls(n)
        dtype = state.reals.dtype
        state.reals = np.ascontiguousarray(vec.real, dtype=dtype)
        state.imags = np.ascontiguousarray(vec.imag, dtype=dtype)
        return state

    def __len__(self) -> int:
        return self.reals.size

    def __repr__(self) -> str:
        return f"State(n={self.n}, precision={config.get_precision()})"

    def amplitude(self, i: int) -> complex:
        """Complex amplitude of outcome i."""
        self._check_outcome(i)
        return complex(self.reals[i], self.imags[i])

    def probability(self, i: int) -> float:
        """Measurement probability |a_i|^2 of outcome i."""
        self._check_outcome(i)
        return float(self.reals[i]) ** 2 + float(self.imags[i]) ** 2

    def total_norm(self) -> float:
        """Sum of all outcome probabilities (1.0 up to drift); diagnostic."""
        r = self.reals.astype(np.float64, copy=False)
        m = self.imags.astype(np.float64, copy=False)
        return float(np.dot(r, r) + np.dot(m, m))

    def _check_outcome(self, i: int) -> None:
        if not 0 <= i < self.reals.size:
            raise ValueError(f"outcome index {i} out of range for {self.n} qubits")


def init_state(n: int) -> State:
    """Allocate the n-qubit |0...0> state."""
    return State(n)
