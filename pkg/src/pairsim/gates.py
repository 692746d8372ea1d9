"""Gate types and the pairwise update kernels that apply them.

Applying a single-qubit gate g to target t maps every amplitude pair
(a_z, a_o) to (g00*a_z + g01*a_o, g10*a_z + g11*a_o).  Each gate variant
gets a kernel shaped around its matrix structure: X swaps, Y swaps and
flips signs, Z and P touch only the o side, H folds the shared 1/sqrt(2)
into four multiplies, Rz applies one constant phase per side, and the
dense variants (Rx, Ry, U) run the full complex 2x2 product as plain
multiply-accumulate chains.

Kernels walk the state through strided views: for target t the arrays
reshape to (prefix, target-bit, suffix) with suffix runs of 2^t
consecutive elements, so the inner loops are contiguous and branch-free.
Coefficients are computed once per application, never per pair.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import pairs
from .state import State

_SQRT1_2 = math.sqrt(0.5)

KINDS = ("x", "y", "z", "h", "p", "rx", "ry", "rz", "u")
_N_PARAMS = {"x": 0, "y": 0, "z": 0, "h": 0, "p": 1, "rx": 1, "ry": 1, "rz": 1, "u": 3}


@dataclass(frozen=True)
class Gate:
    """A single-qubit gate variant plus its angle parameters (radians).

    Angles are taken as given, with no mod-2pi reduction.  Immutable, so
    one instance can be shared across transformations and threads.
    """

    kind: str
    params: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in _N_PARAMS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if len(self.params) != _N_PARAMS[self.kind]:
            raise ValueError(
                f"gate {self.kind!r} takes {_N_PARAMS[self.kind]} parameter(s), "
                f"got {len(self.params)}"
            )

    @classmethod
    def x(cls):
        return cls("x")

    @classmethod
    def y(cls):
        return cls("y")

    @classmethod
    def z(cls):
        return cls("z")

    @classmethod
    def h(cls):
        return cls("h")

    @classmethod
    def p(cls, phi: float):
        return cls("p", (phi,))

    @classmethod
    def rx(cls, theta: float):
        return cls("rx", (theta,))

    @classmethod
    def ry(cls, theta: float):
        return cls("ry", (theta,))

    @classmethod
    def rz(cls, lam: float):
        return cls("rz", (lam,))

    @classmethod
    def u(cls, theta: float, phi: float, lam: float):
        return cls("u", (theta, phi, lam))

    def coefficients(self) -> np.ndarray:
        """Flat length-4 complex array (g00, g01, g10, g11).

        One-dimensional on purpose: the row-major flat layout is what the
        generic kernel consumes directly.
        """
        k = self.kind
        if k == "x":
            g = (0, 1, 1, 0)
        elif k == "y":
            g = (0, -1j, 1j, 0)
        elif k == "z":
            g = (1, 0, 0, -1)
        elif k == "h":
            g = (_SQRT1_2, _SQRT1_2, _SQRT1_2, -_SQRT1_2)
        elif k == "p":
            g = (1, 0, 0, cmath.exp(1j * self.params[0]))
        elif k == "rx":
            c, s = math.cos(self.params[0] / 2), math.sin(self.params[0] / 2)
            g = (c, -1j * s, -1j * s, c)
        elif k == "ry":
            c, s = math.cos(self.params[0] / 2), math.sin(self.params[0] / 2)
            g = (c, -s, s, c)
        elif k == "rz":
            half = self.params[0] / 2
            g = (cmath.exp(-1j * half), 0, 0, cmath.exp(1j * half))
        else:  # u
            theta, phi, lam = self.params
            c, s = math.cos(theta / 2), math.sin(theta / 2)
            g = (c, -cmath.exp(1j * lam) * s, cmath.exp(1j * phi) * s, cmath.exp(1j * (phi + lam)) * c)
        return np.array(g, dtype=np.complex128)


@dataclass(frozen=True)
class QuantumTransformation:
    """A gate bound to a target qubit and optional control qubits."""

    gate: Gate
    target: int
    controls: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        if len(set(self.controls)) != len(self.controls):
            raise ValueError(f"duplicate control qubits in {self.controls}")
        if self.target in self.controls:
            raise ValueError(f"target {self.target} cannot also be a control")


def _check_target(state: State, target: int) -> None:
    if not 0 <= target < state.n:
        raise ValueError(f"target {target} out of range for {state.n} qubits")


def _pair_views(arr: np.ndarray, target: int):
    """(z-side, o-side) strided views of one component array.

    target == 0 is the stride-2 special case: adjacent elements pair up,
    so the views step over the flat array two elements per pair.
    """
    if target == 0:
        return arr[0::2], arr[1::2]
    v = arr.reshape(-1, 2, 1 << target)
    return v[:, 0, :], v[:, 1, :]


def apply_x(state: State, target: int) -> None:
    """Swap the two sides of every pair; no arithmetic at all."""
    _check_target(state, target)
    for arr in (state.reals, state.imags):
        zs, os_ = _pair_views(arr, target)
        tmp = zs.copy()
        zs[...] = os_
        os_[...] = tmp


def apply_y(state: State, target: int) -> None:
    """(a+ib, c+id) -> (d - ic, -b + ia): swaps and sign flips only."""
    _check_target(state, target)
    zre, ore = _pair_views(state.reals, target)
    zim, oim = _pair_views(state.imags, target)
    a = zre.copy()
    b = zim.copy()
    zre[...] = oim
    zim[...] = ore
    np.negative(zim, out=zim)
    ore[...] = b
    np.negative(ore, out=ore)
    oim[...] = a


def apply_z(state: State, target: int) -> None:
    """Negate the o side of every pair; the z side is never touched."""
    _check_target(state, target)
    _, ore = _pair_views(state.reals, target)
    _, oim = _pair_views(state.imags, target)
    np.negative(ore, out=ore)
    np.negative(oim, out=oim)


def apply_h(state: State, target: int) -> None:
    """Prescale both sides by 1/sqrt(2), then write their sum/difference.

    Four multiplies and four add/subs per pair instead of a full complex
    matrix-vector product.
    """
    _check_target(state, target)
    zre, ore = _pair_views(state.reals, target)
    zim, oim = _pair_views(state.imags, target)
    a1 = zre * _SQRT1_2
    b1 = zim * _SQRT1_2
    c1 = ore * _SQRT1_2
    d1 = oim * _SQRT1_2
    zre[...] = a1 + c1
    zim[...] = b1 + d1
    ore[...] = a1 - c1
    oim[...] = b1 - d1


def apply_p(state: State, target: int, phi: float) -> None:
    """Rotate the o side by e^(i*phi); one-sided, z amplitudes untouched."""
    _check_target(state, target)
    c, s = math.cos(phi), math.sin(phi)
    _, ore = _pair_views(state.reals, target)
    _, oim = _pair_views(state.imags, target)
    new_re = ore * c - oim * s
    new_im = ore * s + oim * c
    ore[...] = new_re
    oim[...] = new_im


def apply_rz(state: State, target: int, lam: float) -> None:
    """Phase e^(-i*lam/2) on the z side and e^(+i*lam/2) on the o side.

    Each side is a run of whole 2^t chunks sharing one constant phase
    factor, so the update is two independent one-sided sweeps.
    """
    _check_target(state, target)
    c, s = math.cos(lam / 2), math.sin(lam / 2)
    zre, ore = _pair_views(state.reals, target)
    zim, oim = _pair_views(state.imags, target)
    new_re = zre * c + zim * s
    new_im = zim * c - zre * s
    zre[...] = new_re
    zim[...] = new_im
    new_re = ore * c - oim * s
    new_im = oim * c + ore * s
    ore[...] = new_re
    oim[...] = new_im


def apply_general(state: State, target: int, gate: Gate) -> None:
    """Full 2x2 complex matrix-vector product per pair.

    The dense path for Rx, Ry and U, and the reference update any gate's
    coefficients can be pushed through.  Written as flat
    multiply-accumulate chains over the component views.
    """
    _check_target(state, target)
    g00, g01, g10, g11 = gate.coefficients()
    zre, ore = _pair_views(state.reals, target)
    zim, oim = _pair_views(state.imags, target)
    new_zre = g00.real * zre - g00.imag * zim + g01.real * ore - g01.imag * oim
    new_zim = g00.real * zim + g00.imag * zre + g01.real * oim + g01.imag * ore
    new_ore = g10.real * zre - g10.imag * zim + g11.real * ore - g11.imag * oim
    new_oim = g10.real * zim + g10.imag * zre + g11.real * oim + g11.imag * ore
    zre[...] = new_zre
    zim[...] = new_zim
    ore[...] = new_ore
    oim[...] = new_oim


def apply(gate: Gate, state: State, target: int) -> None:
    """Apply a gate to the target qubit via its specialized kernel."""
    k = gate.kind
    if k == "x":
        apply_x(state, target)
    elif k == "y":
        apply_y(state, target)
    elif k == "z":
        apply_z(state, target)
    elif k == "h":
        apply_h(state, target)
    elif k == "p":
        apply_p(state, target, gate.params[0])
    elif k == "rz":
        apply_rz(state, target, gate.params[0])
    else:
        apply_general(state, target, gate)


def apply_controlled(transformation: QuantumTransformation, state: State) -> None:
    """Apply a (multi-)controlled gate.

    Only pairs whose outcomes have 1 in every control position are
    processed; the restricted index set comes from the constructive
    insertion enumeration, and the per-variant update mirrors the plain
    kernels (one-sided gates still write only o-side amplitudes).
    """
    gate, target, controls = transformation.gate, transformation.target, transformation.controls
    if not controls:
        apply(gate, state, target)
        return
    _check_target(state, target)
    for c in controls:
        if not 0 <= c < state.n:
            raise ValueError(f"control {c} out of range for {state.n} qubits")
    z_idx, o_idx = pairs.controlled_pair_arrays(state.n, target, controls)
    re, im = state.reals, state.imags
    k = gate.kind

    if k == "x":
        tmp = re[z_idx]
        re[z_idx] = re[o_idx]
        re[o_idx] = tmp
        tmp = im[z_idx]
        im[z_idx] = im[o_idx]
        im[o_idx] = tmp
    elif k == "y":
        a, b = re[z_idx], im[z_idx]
        re[z_idx] = im[o_idx]
        im[z_idx] = -re[o_idx]
        re[o_idx] = -b
        im[o_idx] = a
    elif k == "z":
        np.negative.at(re, o_idx)
        np.negative.at(im, o_idx)
    elif k == "h":
        a1, b1 = re[z_idx] * _SQRT1_2, im[z_idx] * _SQRT1_2
        c1, d1 = re[o_idx] * _SQRT1_2, im[o_idx] * _SQRT1_2
        re[z_idx] = a1 + c1
        im[z_idx] = b1 + d1
        re[o_idx] = a1 - c1
        im[o_idx] = b1 - d1
    elif k == "p":
        c, s = math.cos(gate.params[0]), math.sin(gate.params[0])
        cre, cim = re[o_idx], im[o_idx]
        re[o_idx] = cre * c - cim * s
        im[o_idx] = cre * s + cim * c
    elif k == "rz":
        c, s = math.cos(gate.params[0] / 2), math.sin(gate.params[0] / 2)
        a, b = re[z_idx], im[z_idx]
        re[z_idx] = a * c + b * s
        im[z_idx] = b * c - a * s
        cre, cim = re[o_idx], im[o_idx]
        re[o_idx] = cre * c - cim * s
        im[o_idx] = cim * c + cre * s
    else:
        g00, g01, g10, g11 = gate.coefficients()
        a, b = re[z_idx], im[z_idx]
        cre, cim = re[o_idx], im[o_idx]
        re[z_idx] = g00.real * a - g00.imag * b + g01.real * cre - g01.imag * cim
        im[z_idx] = g00.real * b + g00.imag * a + g01.real * cim + g01.imag * cre
        re[o_idx] = g10.real * a - g10.imag * b + g11.real * cre - g11.imag * cim
        im[o_idx] = g10.real * b + g10.imag * a + g11.real * cim + g11.imag * cre
