"""Enumeration of amplitude-pair indices for single-qubit updates.

A gate on target qubit t couples amplitudes whose outcome indices differ
only in bit t.  Writing j for the pair ordinal, q = j div 2^t for the bit
prefix above the target and r = j mod 2^t for the suffix below it, the two
indices of pair j are

    z(j, t) = 2q * 2^t + r      (bit t clear)
    o(j, t) = (2q + 1) * 2^t + r  == z + 2^t  (bit t set)

Four enumeration schemes generate the same pair set with different loop
shapes; kernels pick whichever shape matches their memory-access pattern.
All streams are lazy generators: no index buffers are materialized for the
plain (uncontrolled) schemes.  The ordering of each stream is part of the
contract, since callers rely on contiguous inner runs.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


def _check_target(n: int, t: int) -> None:
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    if not 0 <= t < n:
        raise ValueError(f"target {t} out of range for {n} qubits")


def _check_controls(n: int, t: int, controls: Iterable[int]) -> tuple[int, ...]:
    controls = tuple(controls)
    if len(set(controls)) != len(controls):
        raise ValueError(f"duplicate control qubits in {controls}")
    if t in controls:
        raise ValueError(f"target {t} cannot also be a control")
    for c in controls:
        if not 0 <= c < n:
            raise ValueError(f"control {c} out of range for {n} qubits")
    return controls


def pairs_traverse_recognize(n: int, t: int) -> Iterator[tuple[int, int]]:
    """Scan all outcomes, recognizing z-side indices by their target bit.

    Touches every index once and filters on ``(i >> t) & 1``; kept as the
    plainly-correct reference the other schemes are checked against (the
    tuned dispatch never uses it).
    """
    _check_target(n, t)

    def gen():
        step = 1 << t
        for i in range(1 << n):
            if not (i >> t) & 1:
                yield i, i + step

    return gen()


def pairs_group_traverse(n: int, t: int) -> Iterator[tuple[int, int, int]]:
    """Chunked view: yields (z_start, o_start, length) with length 2^t.

    Splitting the outcome list into chunks of 2^t makes the target bit
    constant within each chunk, so a kernel can stream 2^t consecutive
    z-side and 2^t consecutive o-side amplitudes per step.
    """
    _check_target(n, t)

    def gen():
        size = 1 << t
        for q in range(1 << (n - 1 - t)):
            z_start = 2 * q * size
            yield z_start, z_start + size, size

    return gen()


def pairs_concatenate(n: int, t: int) -> Iterator[tuple[int, int]]:
    """Nested prefix/suffix loops: outer over q, inner over r.

    The inner loop walks ``base + 0, base + 1, ...`` for both sides, i.e.
    contiguous branch-free runs, which is the shape vectorizing kernels
    want.  Pairs come out in ascending j.
    """
    _check_target(n, t)

    def gen():
        size = 1 << t
        for q in range(1 << (n - 1 - t)):
            z_base = 2 * q * size
            o_base = z_base + size
            for r in range(size):
                yield z_base + r, o_base + r

    return gen()


def pairs_insert(n: int, t: int) -> Iterator[tuple[int, int]]:
    """Closed-form stream: a single loop over the pair ordinal j.

    z(j, t) = j + ((j >> t) << t) and o(j, t) = j + (((j >> t) + 1) << t);
    inserting 0 or 1 at bit t of j's expansion.  Ascending j.
    """
    _check_target(n, t)

    def gen():
        for j in range(1 << (n - 1)):
            high = (j >> t) << t
            yield j + high, j + high + (1 << t)

    return gen()


def o_indices(n: int, t: int) -> Iterator[int]:
    """Just the o-side indices in ascending-j order.

    One-sided kernels (phase-style gates leave the z side untouched) walk
    only these, halving the traffic of a full pair walk.
    """
    _check_target(n, t)

    def gen():
        size = 1 << t
        for q in range(1 << (n - 1 - t)):
            o_base = (2 * q + 1) * size
            for r in range(size):
                yield o_base + r

    return gen()


def pairs_controlled(n: int, t: int, controls: Iterable[int]) -> Iterator[tuple[int, int]]:
    """Pairs restricted to outcomes with 1 in every control position.

    Built constructively, not by filtering: a (n - 1 - #controls)-bit
    counter has a fixed 1 inserted at each control position (ascending)
    and 0/1 at the target position.  With no controls this reduces to
    ``pairs_insert``.
    """
    _check_target(n, t)
    controls = _check_controls(n, t, controls)
    specials = sorted((*controls, t))

    def gen():
        step = 1 << t
        for j in range(1 << (n - 1 - len(controls))):
            z = j
            for p in specials:
                z = ((z >> p) << (p + 1)) | (z & ((1 << p) - 1))
                if p != t:
                    z |= 1 << p
            yield z, z + step

    return gen()


def controlled_pair_arrays(n: int, t: int, controls: Iterable[int]) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized twin of ``pairs_controlled``: (z, o) index arrays.

    Same constructive insertion applied to a whole counter array at once;
    the arrays are sized to the restricted pair set, 2^(n-1-#controls).
    Used by the controlled-gate kernels for gather/scatter updates.
    """
    _check_target(n, t)
    controls = _check_controls(n, t, controls)
    specials = sorted((*controls, t))
    z = np.arange(1 << (n - 1 - len(controls)), dtype=np.int64)
    for p in specials:
        z = ((z >> p) << (p + 1)) | (z & ((1 << p) - 1))
        if p != t:
            z |= 1 << p
    return z, z + (1 << t)
