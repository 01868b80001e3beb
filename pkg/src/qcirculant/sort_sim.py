"""Classical model of parallel neighbour sorting over rotation blocks.

A round compares disjoint adjacent pairs (starting at index 0 for the even
phase, 1 for the odd phase) and swaps a pair only when left > right, so
equal keys keep their payload order. ``n`` alternating rounds sort any
``n`` items (odd-even transposition sort).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .strings import char_rank, rotations, sort_key

__all__ = [
    "SortableBlock",
    "BucketMap",
    "blocks_from_text",
    "compare_exchange_round",
    "odd_even_sort",
    "odd_even_trace",
    "bucket_hash",
    "build_bucket_map",
    "bucket_sort",
]

_HASH_BASE = 2 + 0x100 + 1  # one slot for "past the end", then every char_rank


@dataclass(frozen=True)
class SortableBlock:
    key: str
    payload: int

    def sort_key(self) -> tuple[int, ...]:
        return sort_key(self.key)


def blocks_from_text(text: str) -> list[SortableBlock]:
    return [SortableBlock(s, j) for j, s in enumerate(rotations(text))]


def compare_exchange_round(blocks: Sequence[SortableBlock], phase: str) -> list[SortableBlock]:
    if phase not in ("even", "odd"):
        raise ValueError(f"phase must be 'even' or 'odd', got {phase!r}")
    out = list(blocks)
    start = 0 if phase == "even" else 1
    # pairs are disjoint, so each exchange is independent of the others
    for i in range(start, len(out) - 1, 2):
        if out[i].sort_key() > out[i + 1].sort_key():
            out[i], out[i + 1] = out[i + 1], out[i]
    return out


def odd_even_trace(blocks: Sequence[SortableBlock], rounds: int | None = None) -> list[list[SortableBlock]]:
    """Snapshots after each round; ``rounds`` defaults to ``len(blocks)``."""
    rounds = len(blocks) if rounds is None else rounds
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    snaps = []
    cur = list(blocks)
    for r in range(rounds):
        cur = compare_exchange_round(cur, "even" if r % 2 == 0 else "odd")
        snaps.append(cur)
    return snaps


def odd_even_sort(blocks: Sequence[SortableBlock], rounds: int | None = None) -> list[SortableBlock]:
    trace = odd_even_trace(blocks, rounds)
    return trace[-1] if trace else list(blocks)


def bucket_hash(key: str, g: int) -> int:
    """Base-``_HASH_BASE`` integer of the first ``g`` character ranks.

    Keys shorter than ``g`` are filled with a digit below every rank, so a
    proper prefix hashes below its extensions, as in lexicographic order.
    """
    if g < 1:
        raise ValueError("granularity g must be >= 1")
    h = 0
    for i in range(g):
        digit = char_rank(key[i]) + 1 if i < len(key) else 0
        h = h * _HASH_BASE + digit
    return h


@dataclass(frozen=True)
class BucketMap:
    """Order-preserving map from ``g``-prefixes to dense bucket indices."""

    granularity: int
    buckets: dict[str, int] = field(default_factory=dict)

    def bucket(self, key: str) -> int:
        return self.buckets[key[: self.granularity]]


def build_bucket_map(keys: Iterable[str], g: int) -> BucketMap:
    if g < 1:
        raise ValueError("granularity g must be >= 1")
    prefixes = sorted({k[:g] for k in keys}, key=lambda p: bucket_hash(p, g))
    return BucketMap(g, {p: i for i, p in enumerate(prefixes)})


def bucket_sort(blocks: Sequence[SortableBlock], g: int) -> list[SortableBlock]:
    """k-sorted arrangement: buckets in order, input order kept inside each bucket."""
    return sorted(blocks, key=lambda b: bucket_hash(b.key, g))
