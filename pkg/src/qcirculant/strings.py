"""Amplitude-encoded strings, the rotation-superposition state, and classical oracles.

Encoding: the pad character gets code 0, ``'$'`` gets ``1 * boost`` and the
remaining distinct characters get 2, 3, ... in lexicographic order. Texts
are padded with :data:`PAD` (which sorts below ``'$'``) up to the next power
of two, and the main register holds ``codes / ||codes||``.

Applying ``V_P`` to ``H|0...0> (x) |c>`` leaves block ``j`` (ancilla value
``j``) equal to ``P**j c / sqrt(n)``, i.e. the text shifted down by ``j``:
``S_j[i] = text[(i - j) mod n]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .qsim import StateVector, run_circuit
from .shift_circuits import v_p_circuit, v_p_dense

__all__ = [
    "SENTINEL",
    "PAD",
    "SentinelError",
    "DecodingError",
    "char_rank",
    "sort_key",
    "EncodedString",
    "RotationDecoding",
    "SampleHistogram",
    "encode",
    "rotations",
    "rotation_state",
    "rotation_state_from_amplitudes",
    "decode_blocks",
    "bwt",
    "suffix_array",
    "bwt_from_rotations",
    "sample",
    "reconstruct_sentinels",
    "cyclically_consistent",
]

SENTINEL = "$"
PAD = "\x00"
DECODE_TOL = 1e-6
PHASE_TOL = 1e-8


class SentinelError(ValueError):
    pass


class DecodingError(ValueError):
    pass


def char_rank(ch: str) -> int:
    """Sort rank: pad < '$' < every other character (by code point)."""
    if ch == PAD:
        return 0
    if ch == SENTINEL:
        return 1
    return 2 + ord(ch)


def sort_key(s: str) -> tuple[int, ...]:
    return tuple(char_rank(ch) for ch in s)


def _check_text(text: str, allow_pad: bool = False) -> None:
    if not text:
        raise SentinelError("text is empty")
    count = text.count(SENTINEL)
    if count != 1:
        raise SentinelError(f"text must contain exactly one {SENTINEL!r}, found {count}")
    for ch in text:
        if ord(ch) > 0xFF:
            raise ValueError(f"character {ch!r} is outside the single-byte alphabet")
        if ch == PAD and not allow_pad:
            raise ValueError("text may not contain the pad character")


def _next_pow2(m: int) -> int:
    return 1 << (m - 1).bit_length()


@dataclass(frozen=True, eq=False)
class EncodedString:
    text: str
    codes: np.ndarray
    n: int
    boost: float
    alphabet_map: dict[str, float] = field(default_factory=dict)

    @property
    def num_qubits(self) -> int:
        return self.n.bit_length() - 1

    @property
    def padded_text(self) -> str:
        return self.text + PAD * (self.n - len(self.text))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.codes))

    @property
    def amplitudes(self) -> np.ndarray:
        return self.codes / self.norm

    def state(self) -> StateVector:
        return StateVector(self.num_qubits, self.amplitudes)

    def code_table(self) -> list[tuple[float, str]]:
        return sorted((code, ch) for ch, code in self.alphabet_map.items())


def encode(text: str, boost: float = 1.0) -> EncodedString:
    _check_text(text)
    if len(text) < 2:
        raise ValueError("text must have length >= 2")
    if not boost >= 1.0 or not math.isfinite(boost):
        raise ValueError(f"boost must be a finite real >= 1, got {boost!r}")
    n = _next_pow2(len(text))
    alphabet = sorted(set(text) - {SENTINEL}, key=char_rank)
    table: dict[str, float] = {ch: float(2 + i) for i, ch in enumerate(alphabet)}
    sentinel_code = float(boost)
    if sentinel_code in table.values():
        raise ValueError(f"boost {boost} makes the sentinel code collide with another character")
    table[SENTINEL] = sentinel_code
    if n > len(text):
        table[PAD] = 0.0
    padded = text + PAD * (n - len(text))
    codes = np.array([table[ch] for ch in padded], dtype=np.float64)
    codes.setflags(write=False)
    return EncodedString(text, codes, n, float(boost), table)


def rotations(text: str) -> list[str]:
    """All cyclic shifts, shift-down order: entry ``j`` satisfies ``S_j[i] = text[(i - j) mod n]``."""
    return [text[-j:] + text[:-j] if j else text for j in range(len(text))]


def rotation_state_from_amplitudes(amps: Sequence[float], method: str = "circuit") -> StateVector:
    """``V_P (H|0> (x) |amps>)`` for an already-normalized main-register vector."""
    main = StateVector.from_amplitudes(amps, normalize=False)
    q, n = main.num_qubits, main.dim
    ancilla = StateVector.from_amplitudes(np.ones(n))
    start = ancilla.tensor(main)
    if method == "circuit":
        return run_circuit(start, v_p_circuit(q))
    if method == "dense":
        return StateVector(2 * q, v_p_dense(n) @ start.amps)
    raise ValueError(f"unknown method {method!r}; use 'circuit' or 'dense'")


def rotation_state(enc: EncodedString, method: str = "circuit") -> StateVector:
    return rotation_state_from_amplitudes(enc.amplitudes, method)


@dataclass(frozen=True)
class RotationDecoding:
    blocks: tuple[str, ...]
    sentinel_pos: tuple[int, ...]

    def is_consistent(self) -> bool:
        n = len(self.blocks)
        return tuple(rotations(self.blocks[0])) == self.blocks and cyclically_consistent(
            self.sentinel_pos, n
        )


def _strip_global_phase(amps: np.ndarray) -> np.ndarray:
    pivot = amps[np.argmax(np.abs(amps))]
    out = amps * (abs(pivot) / pivot)
    if np.max(np.abs(out.imag)) > PHASE_TOL or np.min(out.real) < -PHASE_TOL:
        raise DecodingError("amplitudes are not real-nonnegative up to a global phase")
    return out.real


def decode_blocks(state: StateVector, enc: EncodedString) -> RotationDecoding:
    q, n = enc.num_qubits, enc.n
    if state.num_qubits != 2 * q:
        raise DecodingError(f"expected a {2 * q}-qubit state, got {state.num_qubits}")
    scaled = _strip_global_phase(state.amps).reshape(n, n) * (math.sqrt(n) * enc.norm)
    table = enc.code_table()
    codes = np.array([c for c, _ in table])
    chars = [ch for _, ch in table]
    dist = np.abs(scaled[..., None] - codes)
    nearest = np.argmin(dist, axis=-1)
    best = np.take_along_axis(dist, nearest[..., None], axis=-1)[..., 0]
    if np.max(best) > DECODE_TOL:
        j, i = np.unravel_index(np.argmax(best), best.shape)
        raise DecodingError(
            f"amplitude at block {j}, position {i} is {best[j, i]:.3g} from every code"
        )
    ties = np.sum(dist == best[..., None], axis=-1)
    if np.any(ties > 1):
        raise DecodingError("ambiguous amplitude: equidistant from two codes")
    blocks = tuple("".join(chars[k] for k in row) for row in nearest)
    return RotationDecoding(blocks, tuple(b.index(SENTINEL) for b in blocks))


def bwt(text: str) -> str:
    """Last column of the lexicographically sorted rotation matrix."""
    _check_text(text, allow_pad=True)
    rots = sorted(rotations(text), key=sort_key)
    return "".join(r[-1] for r in rots)


def suffix_array(text: str) -> list[int]:
    _check_text(text, allow_pad=True)
    return sorted(range(len(text)), key=lambda i: sort_key(text[i:]))


def bwt_from_rotations(decoding: RotationDecoding) -> str:
    return "".join(r[-1] for r in sorted(decoding.blocks, key=sort_key))


@dataclass(frozen=True, eq=False)
class SampleHistogram:
    """Measurement counts; ``counts[j, i]`` is the tally of outcome (block ``j``, position ``i``)."""

    shots: int
    counts: np.ndarray
    seed: int

    def __post_init__(self):
        if int(self.counts.sum()) != self.shots:
            raise ValueError("counts must sum to shots")

    @property
    def n(self) -> int:
        return self.counts.shape[0]

    def block_totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    def to_dict(self) -> dict:
        return {
            "shots": self.shots,
            "seed": self.seed,
            "n": self.n,
            "counts": self.counts.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SampleHistogram":
        return cls(int(d["shots"]), np.array(d["counts"], dtype=np.int64), int(d["seed"]))


def sample(state: StateVector, shots: int, seed: int) -> SampleHistogram:
    """Seeded multinomial draw of ``(block, position)`` outcomes from ``|amp|**2``."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    if state.num_qubits % 2:
        raise ValueError("expected an ancilla+main state with an even qubit count")
    n = 1 << (state.num_qubits // 2)
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs).reshape(n, n)
    return SampleHistogram(int(shots), counts.astype(np.int64), int(seed))


def cyclically_consistent(positions: Sequence[int | None], n: int) -> bool:
    """True iff every determined ``pos[j]`` equals ``(pos[j0] + j - j0) mod n`` for the first determined ``j0``."""
    known = [(j, p) for j, p in enumerate(positions) if p is not None]
    if not known:
        return False
    j0, p0 = known[0]
    return all(p == (p0 + j - j0) % n for j, p in known)


def reconstruct_sentinels(hist: SampleHistogram, enc: EncodedString | None = None) -> tuple[int | None, ...]:
    """Per-block argmax cell as the sentinel estimate; ``None`` marks an undetermined block.

    A block with no samples, or whose maximum count is shared, is undetermined.
    Raises :class:`DecodingError` when the determined positions are not the
    cyclic shifts of one another.
    """
    if hist.shots < 1:
        raise ValueError("histogram is empty")
    if enc is not None and enc.n != hist.n:
        raise ValueError(f"histogram has {hist.n} blocks, encoding has n={enc.n}")
    out: list[int | None] = []
    for row in hist.counts:
        top = row.max()
        if top == 0 or np.count_nonzero(row == top) > 1:
            out.append(None)
        else:
            out.append(int(np.argmax(row)))
    if not cyclically_consistent(out, hist.n):
        raise DecodingError(f"recovered sentinel positions {out} are not cyclically consistent")
    return tuple(out)
