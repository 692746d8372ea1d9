"""Deferred-execution circuit layer.

A circuit owns one state and an ordered list of queued transformations.
Adding gates never touches the state; everything is applied, in insertion
order, when ``execute`` runs.  Registers are windows of state-qubit
indices handed out at circuit construction so multi-register circuits can
address qubits symbolically.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .gates import Gate, QuantumTransformation, apply_controlled
from .gates import apply as apply_gate
from .state import State


class QuantumRegister:
    """A width-qubit window; indices are assigned by the owning circuit."""

    def __init__(self, width: int):
        if width < 1:
            raise ValueError(f"register width must be >= 1, got {width}")
        self.width = width
        self.indices: list[int] | None = None

    def _bind(self, start: int) -> None:
        if self.indices is not None:
            raise ValueError("register is already attached to a circuit")
        self.indices = list(range(start, start + self.width))

    def __len__(self) -> int:
        return self.width

    def __getitem__(self, i: int) -> int:
        if self.indices is None:
            raise ValueError("register is not attached to a circuit yet")
        return self.indices[i]

    def __iter__(self):
        if self.indices is None:
            raise ValueError("register is not attached to a circuit yet")
        return iter(self.indices)


def iqft_transformations(targets: Sequence[int]) -> list[QuantumTransformation]:
    """Gate sequence of the swap-free inverse quantum Fourier transform.

    Walking the target list in ascending position j, each H on targets[j]
    is preceded by controlled phases of -pi/2^(j-k) from every earlier
    list entry k.  No terminal swap layer; callers order the target list
    to pick the qubit convention.
    """
    targets = [int(t) for t in targets]
    if len(set(targets)) != len(targets):
        raise ValueError(f"duplicate iqft targets in {targets}")
    out: list[QuantumTransformation] = []
    for j in range(len(targets)):
        for k in range(j):
            out.append(
                QuantumTransformation(Gate.p(-math.pi / (1 << (j - k))), targets[j], (targets[k],))
            )
        out.append(QuantumTransformation(Gate.h(), targets[j]))
    return out


def apply_iqft(state: State, targets: Sequence[int] | None = None) -> None:
    """Functional form: run the inverse QFT on a state immediately."""
    if targets is None:
        targets = range(state.n)
    for tr in iqft_transformations(list(targets)):
        apply_controlled(tr, state)


class QuantumCircuit:
    """Ordered transformation queue over a single state.

    Construct from registers (or plain widths); each register gets a
    contiguous index window in declaration order and the state covers
    their union, starting in |0...0>.
    """

    def __init__(self, *registers: QuantumRegister | int):
        if not registers:
            raise ValueError("circuit needs at least one register")
        regs: list[QuantumRegister] = []
        for r in registers:
            regs.append(QuantumRegister(r) if isinstance(r, int) else r)
        start = 0
        for r in regs:
            r._bind(start)
            start += r.width
        self.registers = tuple(regs)
        self.state = State(start)
        self.transformations: list[QuantumTransformation] = []

    @property
    def n(self) -> int:
        return self.state.n

    def add(self, transformation: QuantumTransformation) -> None:
        """Queue a transformation; indices are validated now, applied later."""
        if not 0 <= transformation.target < self.n:
            raise ValueError(f"target {transformation.target} out of range for {self.n} qubits")
        for c in transformation.controls:
            if not 0 <= c < self.n:
                raise ValueError(f"control {c} out of range for {self.n} qubits")
        self.transformations.append(transformation)

    # -- single-qubit conveniences ------------------------------------

    def x(self, target: int) -> None:
        self.add(QuantumTransformation(Gate.x(), target))

    def y(self, target: int) -> None:
        self.add(QuantumTransformation(Gate.y(), target))

    def z(self, target: int) -> None:
        self.add(QuantumTransformation(Gate.z(), target))

    def h(self, target: int) -> None:
        self.add(QuantumTransformation(Gate.h(), target))

    def p(self, phi: float, target: int) -> None:
        self.add(QuantumTransformation(Gate.p(phi), target))

    def rx(self, theta: float, target: int) -> None:
        self.add(QuantumTransformation(Gate.rx(theta), target))

    def ry(self, theta: float, target: int) -> None:
        self.add(QuantumTransformation(Gate.ry(theta), target))

    def rz(self, lam: float, target: int) -> None:
        self.add(QuantumTransformation(Gate.rz(lam), target))

    def u(self, theta: float, phi: float, lam: float, target: int) -> None:
        self.add(QuantumTransformation(Gate.u(theta, phi, lam), target))

    # -- controlled forms ----------------------------------------------

    def controlled(self, gate: Gate, controls: Iterable[int], target: int) -> None:
        self.add(QuantumTransformation(gate, target, tuple(controls)))

    def cx(self, control: int, target: int) -> None:
        self.controlled(Gate.x(), (control,), target)

    def cy(self, control: int, target: int) -> None:
        self.controlled(Gate.y(), (control,), target)

    def cz(self, control: int, target: int) -> None:
        self.controlled(Gate.z(), (control,), target)

    def ch(self, control: int, target: int) -> None:
        self.controlled(Gate.h(), (control,), target)

    def cp(self, phi: float, control: int, target: int) -> None:
        self.controlled(Gate.p(phi), (control,), target)

    def crx(self, theta: float, control: int, target: int) -> None:
        self.controlled(Gate.rx(theta), (control,), target)

    def cry(self, theta: float, control: int, target: int) -> None:
        self.controlled(Gate.ry(theta), (control,), target)

    def crz(self, lam: float, control: int, target: int) -> None:
        self.controlled(Gate.rz(lam), (control,), target)

    def cu(self, theta: float, phi: float, lam: float, control: int, target: int) -> None:
        self.controlled(Gate.u(theta, phi, lam), (control,), target)

    def mcx(self, controls: Iterable[int], target: int) -> None:
        self.controlled(Gate.x(), controls, target)

    def mcp(self, phi: float, controls: Iterable[int], target: int) -> None:
        self.controlled(Gate.p(phi), controls, target)

    # -------------------------------------------------------------------

    def iqft(self, targets: Sequence[int] | None = None) -> None:
        """Queue the inverse QFT over the given targets (default: all)."""
        if targets is None:
            targets = range(self.n)
        for tr in iqft_transformations(list(targets)):
            self.add(tr)

    def execute(self) -> None:
        """Apply all queued transformations in order and consume the queue.

        Executing again without new adds is a no-op.  The queue is applied
        verbatim: knowing the whole gate list up front would permit
        reordering or fusion, and this is the natural seam to add that,
        but no such rewriting happens today.
        """
        queued = self.transformations
        self.transformations = []
        for tr in queued:
            if tr.controls:
                apply_controlled(tr, self.state)
            else:
                apply_gate(tr.gate, self.state, tr.target)

    def probability(self, i: int) -> float:
        return self.state.probability(i)
