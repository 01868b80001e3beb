"""Oracle-equivalence checks shared by the ``verify`` command and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circulant import apply_circulant, dense_circulant, eigenvalues, eigenvector, poly_reconstruct
from .qsim import circuit_unitary, dft_matrix, qft_circuit
from .shift_circuits import v_p_circuit, v_p_dense
from .sort_sim import blocks_from_text, odd_even_sort
from .strings import (
    bwt,
    bwt_from_rotations,
    decode_blocks,
    encode,
    rotation_state,
    sort_key,
)

__all__ = ["CheckResult", "random_complex", "random_sentinel_text", "run_verification"]

VERIFY_ALPHABET = "acgt"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    tol: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.value:.12g} (tol {self.tol:.12g})"


def random_complex(rng: np.random.Generator, size) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_sentinel_text(rng: np.random.Generator, length: int, alphabet: str = VERIFY_ALPHABET) -> str:
    body = rng.choice(list(alphabet), size=length - 1)
    return "".join(body) + "$"


def _max_err(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def check_vp(q: int) -> CheckResult:
    err = _max_err(circuit_unitary(v_p_circuit(q)), v_p_dense(1 << q))
    return CheckResult(f"vp_circuit_vs_dense q={q}", err <= 1e-10, err, 1e-10)


def check_qft(q: int) -> CheckResult:
    err = _max_err(circuit_unitary(qft_circuit(q)), dft_matrix(1 << q))
    return CheckResult(f"qft_vs_dft q={q}", err <= 1e-10, err, 1e-10)


def check_poly_identity(n: int, rng: np.random.Generator, cases: int = 20) -> CheckResult:
    err = max(_max_err(poly_reconstruct(c), dense_circulant(c)) for c in (random_complex(rng, n) for _ in range(cases)))
    return CheckResult(f"poly_identity n={n}", err <= 1e-12, err, 1e-12)


def check_eigen_identity(n: int, rng: np.random.Generator, cases: int = 20) -> CheckResult:
    err = 0.0
    for _ in range(cases):
        c = random_complex(rng, n)
        cmat, lam = dense_circulant(c), eigenvalues(c)
        for j in range(n):
            v = eigenvector(n, j)
            err = max(err, _max_err(cmat @ v, lam[j] * v))
    return CheckResult(f"eigen_identity n={n}", err <= 1e-10, err, 1e-10)


def check_apply_circulant(n: int, rng: np.random.Generator, cases: int = 50) -> CheckResult:
    err = 0.0
    for _ in range(cases):
        c, x = random_complex(rng, n), random_complex(rng, n)
        want = dense_circulant(c) @ x
        err = max(err, float(np.linalg.norm(apply_circulant(c, x) - want) / np.linalg.norm(want)))
    return CheckResult(f"apply_circulant_rel n={n}", err <= 1e-10, err, 1e-10)


def check_pipeline(n: int, rng: np.random.Generator, cases: int = 50) -> list[CheckResult]:
    mismatches = 0
    state_err = 0.0
    for _ in range(cases):
        text = random_sentinel_text(rng, n)
        enc = encode(text)
        circ_state = rotation_state(enc, "circuit")
        state_err = max(state_err, _max_err(circ_state.amps, rotation_state(enc, "dense").amps))
        if bwt_from_rotations(decode_blocks(circ_state, enc)) != bwt(enc.padded_text):
            mismatches += 1
    return [
        CheckResult(f"rotation_state_circuit_vs_dense n={n}", state_err <= 1e-10, state_err, 1e-10),
        CheckResult(f"pipeline_bwt_mismatches n={n}", mismatches == 0, float(mismatches), 0.0),
    ]


def check_sort(n: int, rng: np.random.Generator, cases: int = 20) -> CheckResult:
    bad = 0
    for _ in range(cases):
        blocks = blocks_from_text(random_sentinel_text(rng, n))
        got = [b.key for b in odd_even_sort(blocks)]
        if got != sorted((b.key for b in blocks), key=sort_key):
            bad += 1
    return CheckResult(f"odd_even_sort_mismatches n={n}", bad == 0, float(bad), 0.0)


def run_verification(n: int, seed: int = 0) -> list[CheckResult]:
    """All oracle suites at size ``n`` (a power of two, 2..32)."""
    if n < 2 or n & (n - 1) or n > 32:
        raise ValueError(f"--n must be a power of two between 2 and 32, got {n}")
    q = n.bit_length() - 1
    rng = np.random.default_rng(seed)
    results = [check_vp(q)]
    results += [check_qft(k) for k in range(1, q + 1)]
    results.append(check_poly_identity(n, rng))
    results.append(check_eigen_identity(n, rng))
    results.append(check_apply_circulant(n, rng))
    results += check_pipeline(n, rng)
    results.append(check_sort(n, rng))
    return results
