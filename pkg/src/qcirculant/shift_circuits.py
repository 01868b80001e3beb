"""Circuits for powers of the cyclic shift and the block operator ``V_P``.

Register layout for ``V_P`` on ``2q`` qubits: the main register (the vector
being shifted, ``n = 2**q`` amplitudes) is qubits ``0..q-1``; the ancilla
register selecting the shift power is qubits ``q..2q-1``. A basis index
therefore reads ``j * n + i`` with ``j`` the ancilla value, which makes
``V_P = diag(P**0, P**1, ..., P**(n-1))`` block diagonal in the usual sense.

Phase sign: the forward QFT uses ``w = exp(+2*pi*i/n)`` and ``P`` shifts
down, so ``P F[:, k] = w**(-k) F[:, k]``. With the conjugation order
``F . diag . F^-1`` (inverse QFT first in time) the diagonal must carry
``w**(-j)``; hence ``PHASE_SIGN = -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circulant import dense_shift
from .qsim import (
    Circuit,
    Gate,
    GateCounts,
    controlled_phase,
    gate_counts,
    inverse_qft_circuit,
    phase,
    qft_circuit,
)

__all__ = [
    "PHASE_SIGN",
    "ShiftCircuitPlan",
    "lambda_p_circuit",
    "u_p_gates",
    "v_p_sections",
    "v_p_circuit",
    "v_p_dense",
    "v_p_gate_budget",
    "V_P_DENSE_CAP",
]

PHASE_SIGN = -1
V_P_DENSE_CAP = 32


def _check_sign(phase_sign: int) -> None:
    if phase_sign not in (1, -1):
        raise ValueError(f"phase_sign must be +1 or -1, got {phase_sign!r}")


@dataclass(frozen=True)
class ShiftCircuitPlan:
    main_qubits: int
    ancilla_qubits: int
    phase_sign: int = PHASE_SIGN

    def __post_init__(self):
        if self.main_qubits < 1:
            raise ValueError("main register needs at least one qubit")
        _check_sign(self.phase_sign)

    @classmethod
    def for_v_p(cls, q: int, phase_sign: int = PHASE_SIGN) -> "ShiftCircuitPlan":
        return cls(q, q, phase_sign)

    @property
    def total_qubits(self) -> int:
        return self.main_qubits + self.ancilla_qubits

    @property
    def main(self) -> list[int]:
        return list(range(self.main_qubits))

    @property
    def ancilla(self) -> list[int]:
        return list(range(self.main_qubits, self.total_qubits))


def _angle(q: int, m: int, power: int, phase_sign: int) -> float:
    # s * 2*pi * 2**m * power / 2**q, kept unreduced
    return phase_sign * 2 * math.pi * (1 << m) * power / (1 << q)


def lambda_p_circuit(q: int, power: int, phase_sign: int = PHASE_SIGN) -> Circuit:
    """``diag(w**(s*j*power))`` as ``q`` single-qubit phase gates.

    The phase of basis index ``j = sum b_m 2**m`` factorizes into one phase
    per set bit, so qubit ``m`` gets angle ``s * 2*pi * 2**m * power / 2**q``.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if power < 0:
        raise ValueError("power must be >= 0")
    _check_sign(phase_sign)
    return Circuit(q, [phase(m, _angle(q, m, power, phase_sign)) for m in range(q)])


def u_p_gates(q: int, k: int, phase_sign: int = PHASE_SIGN) -> list[Gate]:
    """Controlled ``Lambda_P**(2**k)``: ``q`` controlled phases, all controlled on ancilla bit ``k``."""
    if not 0 <= k < q:
        raise ValueError(f"band index k={k} out of range for q={q}")
    _check_sign(phase_sign)
    control = q + k
    return [controlled_phase(control, m, _angle(q, m, 1 << k, phase_sign)) for m in range(q)]


def v_p_sections(
    q: int, phase_sign: int = PHASE_SIGN, band_order: Sequence[int] | None = None
) -> tuple[Circuit, Circuit, Circuit]:
    """``(inverse QFT, central band, QFT)`` on the ``2q``-qubit layout, in time order."""
    if q < 1:
        raise ValueError("q must be >= 1")
    order = list(range(q)) if band_order is None else list(band_order)
    if sorted(order) != list(range(q)):
        raise ValueError(f"band_order must be a permutation of 0..{q - 1}")
    plan = ShiftCircuitPlan.for_v_p(q, phase_sign)
    width = plan.total_qubits
    band = Circuit(width)
    for k in order:
        band.extend(u_p_gates(q, k, phase_sign))
    return (
        inverse_qft_circuit(q, plan.main, width),
        band,
        qft_circuit(q, plan.main, width),
    )


def v_p_circuit(
    q: int, phase_sign: int = PHASE_SIGN, band_order: Sequence[int] | None = None
) -> Circuit:
    inv, band, fwd = v_p_sections(q, phase_sign, band_order)
    return inv + band + fwd


def v_p_dense(n: int) -> np.ndarray:
    """Oracle ``diag(P**0, ..., P**(n-1))`` of size ``n*n``, block ``j`` at rows ``j*n .. j*n+n-1``."""
    if n < 2 or n & (n - 1):
        raise ValueError(f"n must be a power of two >= 2, got {n}")
    if n > V_P_DENSE_CAP:
        raise ValueError(f"v_p_dense capped at n={V_P_DENSE_CAP}")
    p = dense_shift(n)
    out = np.zeros((n * n, n * n), dtype=np.complex128)
    power = np.eye(n, dtype=np.complex128)
    for j in range(n):
        out[j * n:(j + 1) * n, j * n:(j + 1) * n] = power
        power = p @ power
    return out


def v_p_gate_budget(q: int) -> GateCounts:
    """Gate tally of the central controlled-phase band; ``num_qubits`` is the full ``2q`` width.

    The QFT and its inverse are costed separately via ``gate_counts(qft_circuit(q))``.
    """
    _, band, _ = v_p_sections(q)
    return gate_counts(band)
