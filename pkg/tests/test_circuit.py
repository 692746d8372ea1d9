import math

import numpy as np
import pytest

from conftest import circuit_unitary, random_vec, vec_of
from pairsim import (
    Gate,
    QuantumCircuit,
    QuantumRegister,
    QuantumTransformation,
    State,
    apply_controlled,
    apply_iqft,
    iqft_transformations,
)
from pairsim.gates import apply as apply_gate


def test_single_register_window():
    qc = QuantumCircuit(3)
    (reg,) = qc.registers
    assert list(reg) == [0, 1, 2]
    assert qc.n == 3


def test_two_registers_disjoint_windows():
    a, b = QuantumRegister(2), QuantumRegister(2)
    qc = QuantumCircuit(a, b)
    assert list(a) == [0, 1]
    assert list(b) == [2, 3]
    assert qc.n == 4
    qc.h(b[0])
    assert qc.transformations[0].target == 2


def test_three_unit_registers():
    qc = QuantumCircuit(1, 1, 1)
    assert [list(r) for r in qc.registers] == [[0], [1], [2]]


def test_register_cannot_be_reused():
    r = QuantumRegister(2)
    QuantumCircuit(r)
    with pytest.raises(ValueError):
        QuantumCircuit(r)


def test_zero_width_rejected():
    with pytest.raises(ValueError):
        QuantumCircuit()
    with pytest.raises(ValueError):
        QuantumRegister(0)


def test_adds_are_deferred():
    qc = QuantumCircuit(2)
    qc.h(0)
    assert len(qc.transformations) == 1
    assert qc.state.probability(0) == 1.0
    qc.h(1)
    qc.h(0)
    assert qc.state.reals[0] == 1.0 and not qc.state.reals[1:].any()


def test_state_bitwise_unchanged_until_execute():
    qc = QuantumCircuit(3)
    before_re, before_im = qc.state.reals.copy(), qc.state.imags.copy()
    for q in range(3):
        qc.h(q)
        qc.p(1.2, q)
    qc.iqft()
    assert np.array_equal(qc.state.reals, before_re)
    assert np.array_equal(qc.state.imags, before_im)


def test_controlled_add_stores_controls():
    qc = QuantumCircuit(2)
    qc.cp(0.5, 1, 0)
    tr = qc.transformations[0]
    assert tr.controls == (1,)
    assert tr.target == 0
    assert tr.gate.kind == "p"


def test_add_rejects_bad_indices_at_add_time():
    qc = QuantumCircuit(2)
    with pytest.raises(ValueError):
        qc.h(2)
    with pytest.raises(ValueError):
        qc.cx(3, 0)
    assert not qc.transformations


def test_execute_applies_in_order_and_consumes():
    qc = QuantumCircuit(2)
    qc.h(0)
    qc.cx(0, 1)
    listing = list(qc.transformations)
    qc.execute()
    after = vec_of(qc.state)

    manual = State(2)
    for tr in listing:
        if tr.controls:
            apply_controlled(tr, manual)
        else:
            apply_gate(tr.gate, manual, tr.target)
    assert np.array_equal(after, vec_of(manual))

    assert not qc.transformations
    qc.execute()  # no-op
    assert np.array_equal(vec_of(qc.state), after)


def test_empty_circuit_execute():
    qc = QuantumCircuit(3)
    qc.execute()
    assert qc.probability(0) == 1.0


def test_h_on_all_gives_uniform():
    qc = QuantumCircuit(3)
    for q in range(3):
        qc.h(q)
    qc.execute()
    for i in range(8):
        assert qc.probability(i) == pytest.approx(0.125, abs=1e-15)


def test_execute_matches_dense_oracle():
    qc = QuantumCircuit(3)
    for q in range(3):
        qc.h(q)
    for q in range(3):
        qc.p(math.pi * 2.4 / (1 << q), q)
    qc.iqft()
    listing = list(qc.transformations)
    qc.execute()
    expected = circuit_unitary(listing, 3)[:, 0]
    np.testing.assert_allclose(vec_of(qc.state), expected, atol=1e-13, rtol=0)
    probs = np.abs(vec_of(qc.state)) ** 2
    assert int(np.argmax(probs)) == 2


# --- iqft -------------------------------------------------------------------


def test_iqft_of_uniform_is_zero_state():
    qc = QuantumCircuit(3)
    for q in range(3):
        qc.h(q)
    qc.iqft()
    qc.execute()
    assert qc.probability(0) == pytest.approx(1.0, abs=1e-14)


def test_iqft_single_qubit_is_h():
    a = State(1)
    apply_iqft(a)
    b = State(1)
    apply_gate(Gate.h(), b, 0)
    assert np.array_equal(vec_of(a), vec_of(b))
    trs = iqft_transformations([0])
    assert len(trs) == 1 and trs[0].gate.kind == "h"


@pytest.mark.parametrize("n", range(1, 6))
def test_qft_then_iqft_is_identity(n):
    # forward transform taken as the dense adjoint of the iqft unitary
    iqft_dense = circuit_unitary(iqft_transformations(range(n)), n)
    qft_dense = iqft_dense.conj().T
    rng = np.random.default_rng(31 + n)
    vec = random_vec(n, rng)
    s = State.from_amplitudes(qft_dense @ vec)
    apply_iqft(s)
    np.testing.assert_allclose(vec_of(s), vec, atol=1e-13, rtol=0)


@pytest.mark.parametrize("n", range(1, 7))
def test_iqft_composed_with_manual_adjoint(n):
    # adjoint built by hand: reversed gate order, negated angles
    forward = iqft_transformations(range(n))
    adjoint = []
    for tr in reversed(forward):
        if tr.gate.kind == "p":
            adjoint.append(QuantumTransformation(Gate.p(-tr.gate.params[0]), tr.target, tr.controls))
        else:
            adjoint.append(tr)  # h is self-adjoint
    rng = np.random.default_rng(40 + n)
    vec = random_vec(n, rng)
    s = State.from_amplitudes(vec)
    for tr in adjoint:
        apply_controlled(tr, s)
    apply_iqft(s)
    np.testing.assert_allclose(vec_of(s), vec, atol=1e-13, rtol=0)


def test_iqft_matches_dft_adjoint_with_bit_reversal():
    # convention pin: iqft over ascending targets == F^dagger after input
    # bit reversal, F[m, k] = exp(2pi*i*m*k/N)/sqrt(N)
    n = 4
    N = 1 << n
    F = np.exp(2j * np.pi * np.outer(np.arange(N), np.arange(N)) / N) / math.sqrt(N)
    rev = [int(format(i, f"0{n}b")[::-1], 2) for i in range(N)]
    R = np.eye(N)[rev]
    got = circuit_unitary(iqft_transformations(range(n)), n)
    np.testing.assert_allclose(got, F.conj().T @ R, atol=1e-13, rtol=0)


def test_iqft_rejects_duplicates():
    with pytest.raises(ValueError):
        iqft_transformations([0, 1, 0])
    qc = QuantumCircuit(2)
    with pytest.raises(ValueError):
        qc.iqft([1, 1])


def test_functional_iqft_matches_circuit_iqft():
    rng = np.random.default_rng(50)
    vec = random_vec(4, rng)
    a = State.from_amplitudes(vec)
    apply_iqft(a, [2, 0, 3, 1])

    qc = QuantumCircuit(4)
    qc.iqft([2, 0, 3, 1])
    qc.state = State.from_amplitudes(vec)
    qc.execute()
    assert np.array_equal(vec_of(a), vec_of(qc.state))
