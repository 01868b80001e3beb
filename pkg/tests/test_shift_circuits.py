import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcirculant.circulant import dense_shift
from qcirculant.qsim import (
    CONTROLLED_PHASE,
    PHASE,
    Circuit,
    StateVector,
    circuit_unitary,
    gate_counts,
    inverse_qft_circuit,
    qft_circuit,
    run_circuit,
)
from qcirculant.shift_circuits import (
    PHASE_SIGN,
    ShiftCircuitPlan,
    lambda_p_circuit,
    u_p_gates,
    v_p_circuit,
    v_p_dense,
    v_p_gate_budget,
    v_p_sections,
)

from .conftest import max_err


def diag_roots(q, power, sign):
    n = 1 << q
    return np.diag([np.exp(2j * np.pi * sign * ((j * power) % n) / n) for j in range(n)])


def test_phase_sign_calibrated_against_dense_n4():
    # only one sign makes F^-1 -> band -> F reproduce diag(I, P, P^2, P^3)
    errs = {s: max_err(circuit_unitary(v_p_circuit(2, s)), v_p_dense(4)) for s in (1, -1)}
    assert errs[-1] <= 1e-10
    assert errs[1] > 0.5
    assert PHASE_SIGN == -1


def test_lambda_p_small_cases():
    assert max_err(circuit_unitary(lambda_p_circuit(1, 1, +1)), np.diag([1, -1])) < 1e-15
    assert max_err(circuit_unitary(lambda_p_circuit(1, 1)), np.diag([1, -1])) < 1e-15
    assert max_err(circuit_unitary(lambda_p_circuit(2, 1, +1)), np.diag([1, 1j, -1, -1j])) < 1e-15
    for q in (1, 2, 3):
        assert max_err(circuit_unitary(lambda_p_circuit(q, 0)), np.eye(1 << q)) < 1e-15


@pytest.mark.parametrize("q,power,sign", list(itertools.product((1, 2, 3, 4), (0, 1, 3, 5, 8), (1, -1))))
def test_lambda_p_is_root_diagonal(q, power, sign):
    circ = lambda_p_circuit(q, power, sign)
    assert len(circ) == q and all(g.kind == PHASE for g in circ.gates)
    for m, g in enumerate(circ.gates):
        assert g.target == m
        assert g.theta == sign * 2 * math.pi * (1 << m) * power / (1 << q)
    assert max_err(circuit_unitary(circ), diag_roots(q, power, sign)) <= 1e-10


def test_lambda_p_validation():
    with pytest.raises(ValueError):
        lambda_p_circuit(0, 1)
    with pytest.raises(ValueError):
        lambda_p_circuit(2, -1)
    with pytest.raises(ValueError):
        lambda_p_circuit(2, 1, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 40), st.integers(0, 40), st.sampled_from([1, -1]))
def test_lambda_p_powers_add(q, a, b, sign):
    ua = circuit_unitary(lambda_p_circuit(q, a, sign))
    ub = circuit_unitary(lambda_p_circuit(q, b, sign))
    assert max_err(ua @ ub, circuit_unitary(lambda_p_circuit(q, a + b, sign))) <= 1e-10


def test_u_p_single():
    (g,) = u_p_gates(1, 0, +1)
    assert g.kind == CONTROLLED_PHASE and g.controls == (1,) and g.target == 0
    assert g.theta == math.pi
    (g,) = u_p_gates(1, 0)
    assert g.theta == -math.pi


def test_u_p_angles_q2_k1():
    gates = u_p_gates(2, 1, +1)
    assert [g.theta for g in gates] == [math.pi, 2 * math.pi]
    assert all(g.controls == (3,) for g in gates)
    assert [g.target for g in gates] == [0, 1]


def test_u_p_range():
    with pytest.raises(ValueError):
        u_p_gates(2, 2)
    with pytest.raises(ValueError):
        u_p_gates(2, -1)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_u_p_controlled_blocks(q):
    n = 1 << q
    for k in range(q):
        u = circuit_unitary(Circuit(2 * q, u_p_gates(q, k)))
        want_on = circuit_unitary(lambda_p_circuit(q, 1 << k))
        for j in range(n):
            block = u[j * n:(j + 1) * n, j * n:(j + 1) * n]
            want = want_on if (j >> k) & 1 else np.eye(n)
            assert max_err(block, want) <= 1e-10
        # block diagonal: nothing outside the ancilla blocks
        off = u.copy()
        for j in range(n):
            off[j * n:(j + 1) * n, j * n:(j + 1) * n] = 0
        assert np.max(np.abs(off)) == 0


@pytest.mark.parametrize("q", [1, 2, 3])
def test_p_power_identity(q):
    n = 1 << q
    for k in range(q):
        conj = inverse_qft_circuit(q) + lambda_p_circuit(q, 1 << k) + qft_circuit(q)
        want = np.linalg.matrix_power(dense_shift(n), 1 << k)
        assert max_err(circuit_unitary(conj), want) <= 1e-10


def test_v_p_dense_small():
    want = np.zeros((4, 4))
    want[:2, :2] = np.eye(2)
    want[2:, 2:] = [[0, 1], [1, 0]]
    assert np.array_equal(v_p_dense(2), want)
    c = np.array([1.0, 2.0, 3.0, 4.0])
    last = v_p_dense(4)[12:, 12:]
    assert np.array_equal(last @ c, [2, 3, 4, 1])


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
def test_v_p_dense_is_permutation(n):
    m = v_p_dense(n)
    assert set(np.unique(m)) <= {0, 1}
    assert np.all(m.sum(axis=0) == 1) and np.all(m.sum(axis=1) == 1)


def test_v_p_dense_limits():
    for bad in (1, 3, 6, 64):
        with pytest.raises(ValueError):
            v_p_dense(bad)


def test_v_p_q2_blocks():
    p = dense_shift(4)
    u = circuit_unitary(v_p_circuit(2))
    for j in range(4):
        assert max_err(u[4 * j:4 * j + 4, 4 * j:4 * j + 4], np.linalg.matrix_power(p, j)) <= 1e-10


@pytest.mark.parametrize("q", [1, 2, 3])
def test_v_p_oracle_equivalence(q):
    assert max_err(circuit_unitary(v_p_circuit(q)), v_p_dense(1 << q)) <= 1e-10


def test_v_p_leaves_ancilla_zero_block(rng):
    q = 3
    x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    start = StateVector.basis(q).tensor(StateVector.from_amplitudes(x))
    out = run_circuit(start, v_p_circuit(q))
    assert max_err(out.amps, start.amps) <= 1e-10


@pytest.mark.parametrize("q", [2, 3])
def test_band_order_irrelevant(q):
    base = circuit_unitary(v_p_circuit(q))
    for order in itertools.permutations(range(q)):
        assert max_err(circuit_unitary(v_p_circuit(q, band_order=order)), base) <= 1e-10
    with pytest.raises(ValueError):
        v_p_circuit(q, band_order=[0] * q)


def test_plan_layout():
    plan = ShiftCircuitPlan.for_v_p(3)
    assert plan.total_qubits == 6
    assert plan.main == [0, 1, 2] and plan.ancilla == [3, 4, 5]
    assert v_p_circuit(3).num_qubits == plan.total_qubits


def test_gate_budget_examples():
    b3 = v_p_gate_budget(3)
    assert (b3.num_qubits, b3.controlled_phase) == (6, 9)
    b1 = v_p_gate_budget(1)
    assert (b1.num_qubits, b1.controlled_phase) == (2, 1)
    b2 = v_p_gate_budget(2)
    assert b2.controlled_phase == 4 and b2.hadamard == b2.phase == b2.swap == 0


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_budget_matches_emitted_circuit(q):
    # recount: whole circuit minus the two QFT sections
    full = gate_counts(v_p_circuit(q))
    qft = gate_counts(qft_circuit(q))
    assert full.num_qubits == 2 * q
    assert full.controlled_phase - 2 * qft.controlled_phase == q * q == v_p_gate_budget(q).controlled_phase
    assert full.hadamard == 2 * qft.hadamard and full.swap == 2 * qft.swap
    inv, band, fwd = v_p_sections(q)
    assert len(inv) + len(band) + len(fwd) == len(v_p_circuit(q))
