"""Shared oracles and fixtures.

The dense oracle builds full 2^n x 2^n unitaries from textbook 2x2 gate
matrices via Kronecker products and applies them with plain matrix-vector
multiplication.  It shares no code with the kernel path (the 2x2 matrices
are written out again here on purpose), so agreement between the two is a
real cross-check.
"""

from __future__ import annotations

import cmath
import math
from itertools import product

import numpy as np
import pytest

from pairsim import State, config

I2 = np.eye(2, dtype=complex)
P0 = np.diag([1.0 + 0j, 0.0])
P1 = np.diag([0.0, 1.0 + 0j])

# Reference 2x2 matrices, independent of Gate.coefficients.
GATE_MATRICES = {
    "x": lambda: np.array([[0, 1], [1, 0]], dtype=complex),
    "y": lambda: np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": lambda: np.array([[1, 0], [0, -1]], dtype=complex),
    "h": lambda: np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2),
    "p": lambda phi: np.array([[1, 0], [0, cmath.exp(1j * phi)]], dtype=complex),
    "rx": lambda t: np.array(
        [[math.cos(t / 2), -1j * math.sin(t / 2)], [-1j * math.sin(t / 2), math.cos(t / 2)]],
        dtype=complex,
    ),
    "ry": lambda t: np.array(
        [[math.cos(t / 2), -math.sin(t / 2)], [math.sin(t / 2), math.cos(t / 2)]], dtype=complex
    ),
    "rz": lambda t: np.array(
        [[cmath.exp(-1j * t / 2), 0], [0, cmath.exp(1j * t / 2)]], dtype=complex
    ),
    "u": lambda t, p, l: np.array(
        [
            [math.cos(t / 2), -cmath.exp(1j * l) * math.sin(t / 2)],
            [cmath.exp(1j * p) * math.sin(t / 2), cmath.exp(1j * (p + l)) * math.cos(t / 2)],
        ],
        dtype=complex,
    ),
}

N_PARAMS = {"x": 0, "y": 0, "z": 0, "h": 0, "p": 1, "rx": 1, "ry": 1, "rz": 1, "u": 3}


def gate_matrix(kind: str, params=()) -> np.ndarray:
    return GATE_MATRICES[kind](*params)


def kron_le(factors) -> np.ndarray:
    """Kronecker chain in little-endian qubit order (factors[0] = bit 0)."""
    out = np.array([[1.0 + 0j]])
    for f in factors:
        out = np.kron(f, out)
    return out


def dense_unitary(mat2: np.ndarray, n: int, target: int, controls=()) -> np.ndarray:
    """Full-space unitary of a (controlled) single-qubit gate.

    Sums over control-bit projector assignments: the gate acts on the
    target only in the all-controls-one block, identity elsewhere.
    """
    controls = tuple(controls)
    if not controls:
        factors = [mat2 if pos == target else I2 for pos in range(n)]
        return kron_le(factors)
    U = np.zeros((1 << n, 1 << n), dtype=complex)
    for bits in product((0, 1), repeat=len(controls)):
        factors = []
        for pos in range(n):
            if pos == target:
                factors.append(mat2 if all(bits) else I2)
            elif pos in controls:
                factors.append(P1 if bits[controls.index(pos)] else P0)
            else:
                factors.append(I2)
        U += kron_le(factors)
    return U


def transformation_unitary(tr, n: int) -> np.ndarray:
    return dense_unitary(gate_matrix(tr.gate.kind, tr.gate.params), n, tr.target, tr.controls)


def circuit_unitary(transformations, n: int) -> np.ndarray:
    """Dense unitary of a transformation list (matrix products, in order)."""
    U = np.eye(1 << n, dtype=complex)
    for tr in transformations:
        U = transformation_unitary(tr, n) @ U
    return U


def random_vec(n: int, rng) -> np.ndarray:
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return v / np.linalg.norm(v)


def random_state(n: int, rng) -> State:
    return State.from_amplitudes(random_vec(n, rng))


def vec_of(state: State) -> np.ndarray:
    return state.reals.astype(np.float64) + 1j * state.imags.astype(np.float64)


def random_gate(rng):
    from pairsim import Gate

    kind = rng.choice(list(N_PARAMS))
    params = tuple(float(a) for a in rng.uniform(0.0, 2.0 * math.pi, N_PARAMS[kind]))
    return Gate(kind, params)


@pytest.fixture(autouse=True)
def _restore_numeric_config():
    yield
    config.set_precision("double")
    config.set_memory_limit(None)
