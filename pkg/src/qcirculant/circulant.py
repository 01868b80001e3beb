"""Classical circulant-matrix constructions.

``coeffs`` is the first *column* of ``C``: ``C[i, j] = c[(i - j) mod n]``.
With the shift-down permutation ``P`` (``P e_j = e_{j+1}``) this gives
``C = sum_j c_j P**j``.

Eigenpairs: the Fourier vector ``v_j = (w**(j*k))_k / sqrt(n)`` with
``w = exp(2*pi*i/n)`` has eigenvalue ``sum_k c_{(n-k) mod n} w**(k*j)``,
which is the unnormalized forward FFT (``exp(-...)`` kernel) of ``c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "CirculantSpec",
    "EigenPair",
    "dense_circulant",
    "dense_shift",
    "eigenvalues",
    "eigenvector",
    "eigenpairs",
    "poly_reconstruct",
    "apply_circulant",
]


@dataclass(frozen=True, eq=False)
class CirculantSpec:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if c.shape[0] < 1:
            raise ValueError("a circulant needs at least one coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return eigenvalues(self)

    def to_json(self) -> list[list[float]]:
        return [[float(z.real), float(z.imag)] for z in self.coeffs]

    @classmethod
    def from_json(cls, pairs: Sequence[Sequence[float]]) -> "CirculantSpec":
        return cls(np.array([complex(re, im) for re, im in pairs]))


@dataclass(frozen=True, eq=False)
class EigenPair:
    index: int
    value: complex
    vector: np.ndarray


def _as_spec(spec) -> CirculantSpec:
    return spec if isinstance(spec, CirculantSpec) else CirculantSpec(spec)


def dense_circulant(spec: CirculantSpec | Sequence[complex]) -> np.ndarray:
    c = _as_spec(spec).coeffs
    n = c.shape[0]
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return c[idx]


def dense_shift(n: int) -> np.ndarray:
    """Shift-down permutation: entry ``(i, j)`` is 1 iff ``i == (j + 1) mod n``."""
    if n < 2:
        raise ValueError("shift needs n >= 2")
    p = np.zeros((n, n), dtype=np.complex128)
    p[(np.arange(n) + 1) % n, np.arange(n)] = 1.0
    return p


def eigenvalues(spec: CirculantSpec | Sequence[complex]) -> np.ndarray:
    """``lam_j = c_0 + c_{n-1} w**j + c_{n-2} w**(2j) + ... + c_1 w**((n-1)j)``, evaluated term by term."""
    c = _as_spec(spec).coeffs
    n = c.shape[0]
    k = np.arange(n)
    # exponents reduced mod n so large n does not lose phase accuracy
    powers = np.exp(2j * np.pi * (np.outer(np.arange(n), k) % n) / n)
    return powers @ c[(n - k) % n]


def eigenvector(n: int, j: int) -> np.ndarray:
    if not 0 <= j < n:
        raise ValueError(f"eigenvector index {j} out of range for n={n}")
    return np.exp(2j * np.pi * ((j * np.arange(n)) % n) / n) / math.sqrt(n)


def eigenpairs(spec: CirculantSpec | Sequence[complex]) -> list[EigenPair]:
    spec = _as_spec(spec)
    lam = eigenvalues(spec)
    return [EigenPair(j, complex(lam[j]), eigenvector(spec.n, j)) for j in range(spec.n)]


def poly_reconstruct(spec: CirculantSpec | Sequence[complex]) -> np.ndarray:
    """``sum_j c_j P**j`` by repeated dense multiplication."""
    c = _as_spec(spec).coeffs
    n = c.shape[0]
    if n < 2:
        raise ValueError("polynomial form needs n >= 2")
    p = dense_shift(n)
    power = np.eye(n, dtype=np.complex128)
    out = np.zeros((n, n), dtype=np.complex128)
    for cj in c:
        out += cj * power
        power = p @ power
    return out


def apply_circulant(spec: CirculantSpec | Sequence[complex], x: Sequence[complex]) -> np.ndarray:
    """Matrix-free ``C @ x`` through the Fourier diagonalization.

    Both forward transforms are unnormalized; the single ``1/n`` sits in the
    inverse transform.
    """
    c = _as_spec(spec).coeffs
    x = np.asarray(x, dtype=np.complex128).reshape(-1)
    if x.shape[0] != c.shape[0]:
        raise ValueError(f"vector length {x.shape[0]} does not match circulant size {c.shape[0]}")
    return np.fft.ifft(np.fft.fft(c) * np.fft.fft(x))
