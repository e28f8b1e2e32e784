"""Deterministic random streams.

All randomness in the package flows through counter-based Philox generators
keyed by (seed, stream label), so independent subsystems can draw from
non-overlapping streams and runs are reproducible from a single 64-bit seed.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _label_key(label: str) -> int:
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def make_rng(seed: int, label: str = "", index: int = 0) -> np.random.Generator:
    """Philox generator for (seed, label, index); same arguments, same stream."""
    key = np.array(
        [np.uint64(seed & (2**64 - 1)), np.uint64((_label_key(label) ^ index) & (2**64 - 1))],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))


def randbelow(rng: np.random.Generator, n: int) -> int:
    """Uniform integer in [0, n) for arbitrarily large n (rejection on 64-bit chunks)."""
    if n <= 0:
        raise ValueError("randbelow needs n >= 1")
    if n <= 2**63:
        return int(rng.integers(0, n))
    bits = n.bit_length()
    words = (bits + 63) // 64
    while True:
        x = 0
        for _ in range(words):
            x = (x << 64) | int(rng.integers(0, 2**63) | (int(rng.integers(0, 2)) << 63))
        x &= (1 << bits) - 1
        if x < n:
            return x
