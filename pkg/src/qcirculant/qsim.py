"""Minimal deterministic state-vector simulator.

Basis convention: qubit ``k`` is the ``2**k`` bit of the basis index, so for
``q`` qubits the amplitude of ``|b_{q-1} ... b_1 b_0>`` lives at index
``sum(b_k << k)``.

Gates are applied by reshaping the amplitude array so that the target qubit
becomes its own axis; every kernel works on a ``(dim, batch)`` array, which
lets :func:`circuit_unitary` push all basis columns through at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "HADAMARD",
    "PHASE",
    "CONTROLLED_PHASE",
    "SWAP",
    "Gate",
    "Circuit",
    "StateVector",
    "GateCounts",
    "apply_gate",
    "run_circuit",
    "circuit_unitary",
    "qft_circuit",
    "inverse_qft_circuit",
    "dft_matrix",
    "gate_counts",
    "UNITARY_QUBIT_CAP",
]

HADAMARD = "hadamard"
PHASE = "phase"
CONTROLLED_PHASE = "controlled_phase"
SWAP = "swap"
GATE_KINDS = (HADAMARD, PHASE, CONTROLLED_PHASE, SWAP)

UNITARY_QUBIT_CAP = 10

_SQRT1_2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Gate:
    """One gate of the fixed gate set.

    ``theta`` is carried by phase and controlled-phase gates and stored
    exactly as given. A swap uses ``target`` and ``target2``.
    """

    kind: str
    target: int
    theta: float | None = None
    controls: tuple[int, ...] = ()
    target2: int | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        if self.kind in (PHASE, CONTROLLED_PHASE):
            if self.theta is None or not math.isfinite(self.theta):
                raise ValueError(f"{self.kind} needs a finite theta, got {self.theta!r}")
        elif self.theta is not None:
            raise ValueError(f"{self.kind} takes no theta")
        want_controls = 1 if self.kind == CONTROLLED_PHASE else 0
        if len(self.controls) != want_controls:
            raise ValueError(f"{self.kind} needs exactly {want_controls} control(s)")
        if (self.kind == SWAP) != (self.target2 is not None):
            raise ValueError("target2 is required for swap and only for swap")
        qubits = self.qubits
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"gate qubits must be distinct, got {qubits}")
        if min(qubits) < 0:
            raise ValueError(f"negative qubit index in {qubits}")

    @property
    def qubits(self) -> tuple[int, ...]:
        extra = (self.target2,) if self.target2 is not None else ()
        return (self.target, *extra, *self.controls)

    def check(self, num_qubits: int) -> None:
        bad = [k for k in self.qubits if k >= num_qubits]
        if bad:
            raise IndexError(f"qubit index {bad[0]} out of range for {num_qubits} qubits")

    def inverse(self) -> "Gate":
        if self.theta is None:
            return self
        return Gate(self.kind, self.target, -self.theta, self.controls, self.target2)

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "target": self.target, "controls": list(self.controls)}
        if self.theta is not None:
            d["theta"] = self.theta
        if self.target2 is not None:
            d["target2"] = self.target2
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Gate":
        return cls(
            kind=d["kind"],
            target=int(d["target"]),
            theta=None if d.get("theta") is None else float(d["theta"]),
            controls=tuple(d.get("controls", ())),
            target2=None if d.get("target2") is None else int(d["target2"]),
        )


def hadamard(target: int) -> Gate:
    return Gate(HADAMARD, target)


def phase(target: int, theta: float) -> Gate:
    return Gate(PHASE, target, theta=theta)


def controlled_phase(control: int, target: int, theta: float) -> Gate:
    return Gate(CONTROLLED_PHASE, target, theta=theta, controls=(control,))


def swap(a: int, b: int) -> Gate:
    return Gate(SWAP, a, target2=b)


@dataclass
class Circuit:
    num_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        self.gates = list(self.gates)
        for g in self.gates:
            g.check(self.num_qubits)

    def append(self, gate: Gate) -> "Circuit":
        gate.check(self.num_qubits)
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> "Circuit":
        for g in gates:
            self.append(g)
        return self

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.num_qubits != self.num_qubits:
            raise ValueError("cannot concatenate circuits of different width")
        return Circuit(self.num_qubits, self.gates + other.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def inverse(self) -> "Circuit":
        return Circuit(self.num_qubits, [g.inverse() for g in reversed(self.gates)])

    def to_dict(self) -> dict:
        return {"num_qubits": self.num_qubits, "gates": [g.to_dict() for g in self.gates]}

    @classmethod
    def from_dict(cls, d: dict) -> "Circuit":
        return cls(int(d["num_qubits"]), [Gate.from_dict(g) for g in d["gates"]])


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex amplitudes of a ``num_qubits`` register; the array is read-only."""

    num_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 1 << self.num_qubits:
            raise ValueError(
                f"expected {1 << self.num_qubits} amplitudes for {self.num_qubits} qubits, "
                f"got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def basis(cls, num_qubits: int, index: int = 0) -> "StateVector":
        amps = np.zeros(1 << num_qubits, dtype=np.complex128)
        amps[index] = 1.0
        return cls(num_qubits, amps)

    @classmethod
    def from_amplitudes(cls, amps: Sequence[complex], normalize: bool = True) -> "StateVector":
        arr = np.asarray(amps, dtype=np.complex128).reshape(-1)
        q = arr.shape[0].bit_length() - 1
        if arr.shape[0] < 2 or 1 << q != arr.shape[0]:
            raise ValueError(f"amplitude count {arr.shape[0]} is not a power of two >= 2")
        if normalize:
            nrm = np.linalg.norm(arr)
            if nrm == 0:
                raise ValueError("cannot normalize the zero vector")
            arr = arr / nrm
        return cls(q, arr)

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def tensor(self, other: "StateVector") -> "StateVector":
        """``self`` on the high qubits, ``other`` on the low qubits."""
        return StateVector(self.num_qubits + other.num_qubits, np.kron(self.amps, other.amps))

    def to_dict(self) -> dict:
        return {
            "num_qubits": self.num_qubits,
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amps],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StateVector":
        amps = [complex(re, im) for re, im in d["amplitudes"]]
        return cls(int(d["num_qubits"]), np.asarray(amps))


@dataclass(frozen=True)
class GateCounts:
    num_qubits: int = 0
    hadamard: int = 0
    phase: int = 0
    controlled_phase: int = 0
    swap: int = 0

    @property
    def total(self) -> int:
        return self.hadamard + self.phase + self.controlled_phase + self.swap

    def __add__(self, other: "GateCounts") -> "GateCounts":
        return GateCounts(
            max(self.num_qubits, other.num_qubits),
            self.hadamard + other.hadamard,
            self.phase + other.phase,
            self.controlled_phase + other.controlled_phase,
            self.swap + other.swap,
        )

    def to_dict(self) -> dict:
        return {
            "num_qubits": self.num_qubits,
            "hadamard": self.hadamard,
            "phase": self.phase,
            "controlled_phase": self.controlled_phase,
            "swap": self.swap,
            "total": self.total,
        }


def _bit_mask(dim: int, qubit: int) -> np.ndarray:
    return ((np.arange(dim) >> qubit) & 1).astype(bool)


def _apply(arr: np.ndarray, gate: Gate, num_qubits: int) -> np.ndarray:
    """Return ``gate`` applied to each column of ``arr`` (shape ``(dim, batch)``)."""
    dim, batch = arr.shape
    t = gate.target
    if gate.kind == HADAMARD:
        v = arr.reshape(dim >> (t + 1), 2, 1 << t, batch)
        a, b = v[:, 0], v[:, 1]
        out = np.empty_like(v)
        out[:, 0] = (a + b) * _SQRT1_2
        out[:, 1] = (a - b) * _SQRT1_2
        return out.reshape(dim, batch)
    if gate.kind == PHASE:
        out = arr.copy()
        v = out.reshape(dim >> (t + 1), 2, 1 << t, batch)
        v[:, 1] *= np.exp(1j * gate.theta)
        return out
    if gate.kind == CONTROLLED_PHASE:
        out = arr.copy()
        sel = _bit_mask(dim, t) & _bit_mask(dim, gate.controls[0])
        out[sel] *= np.exp(1j * gate.theta)
        return out
    # swap: axis for qubit k in the C-ordered (2,)*q view is q-1-k
    v = arr.reshape((2,) * num_qubits + (batch,))
    v = np.swapaxes(v, num_qubits - 1 - t, num_qubits - 1 - gate.target2)
    return np.ascontiguousarray(v).reshape(dim, batch)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    gate.check(state.num_qubits)
    out = _apply(state.amps.reshape(-1, 1), gate, state.num_qubits)
    return StateVector(state.num_qubits, out[:, 0])


def run_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    if state.num_qubits != circuit.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    arr = state.amps.reshape(-1, 1)
    for g in circuit.gates:
        arr = _apply(arr, g, circuit.num_qubits)
    return StateVector(state.num_qubits, arr[:, 0])


def circuit_unitary(circuit: Circuit, max_qubits: int = UNITARY_QUBIT_CAP) -> np.ndarray:
    """Dense unitary whose column ``j`` is the circuit applied to ``|j>``."""
    if circuit.num_qubits > max_qubits:
        raise ValueError(
            f"dense extraction capped at {max_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    arr = np.eye(1 << circuit.num_qubits, dtype=np.complex128)
    for g in circuit.gates:
        arr = _apply(arr, g, circuit.num_qubits)
    return arr


def dft_matrix(n: int) -> np.ndarray:
    """Normalized DFT, ``F[j, k] = exp(2*pi*i*j*k/n) / sqrt(n)``."""
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jk / n) / math.sqrt(n)


def qft_circuit(q: int, qubits: Sequence[int] | None = None, num_qubits: int | None = None) -> Circuit:
    """QFT with the final bit-reversal swaps, so the unitary is exactly :func:`dft_matrix`.

    ``qubits`` lists the register bits from least to most significant;
    by default the circuit acts on qubits ``0..q-1`` of a ``q``-qubit circuit.
    """
    if q < 1:
        raise ValueError("qft needs q >= 1")
    reg = list(range(q)) if qubits is None else list(qubits)
    if len(reg) != q:
        raise ValueError(f"expected {q} register qubits, got {len(reg)}")
    width = q if num_qubits is None else num_qubits
    circ = Circuit(width)
    for t in range(q - 1, -1, -1):
        circ.append(hadamard(reg[t]))
        for c in range(t - 1, -1, -1):
            circ.append(controlled_phase(reg[c], reg[t], 2 * math.pi / (1 << (t - c + 1))))
    for t in range(q // 2):
        circ.append(swap(reg[t], reg[q - 1 - t]))
    return circ


def inverse_qft_circuit(q: int, qubits: Sequence[int] | None = None, num_qubits: int | None = None) -> Circuit:
    return qft_circuit(q, qubits, num_qubits).inverse()


def gate_counts(circuit: Circuit | Iterable[Gate], num_qubits: int | None = None) -> GateCounts:
    if isinstance(circuit, Circuit):
        gates, width = circuit.gates, circuit.num_qubits
    else:
        gates, width = list(circuit), num_qubits or 0
    tally = {k: 0 for k in GATE_KINDS}
    for g in gates:
        tally[g.kind] += 1
    return GateCounts(num_qubits=width, **tally)
