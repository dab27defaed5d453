"""Counter-based random streams.

Every stream is identified by a (master_seed, stream_id) pair feeding a
Philox generator, so the same pair always reproduces the same sequence and
distinct ids give independent streams by construction.  Derived streams mix
a child index into the id instead of consuming parent state, which keeps
episode / frame / batch streams independent of evaluation order.
"""

from __future__ import annotations

import hashlib

import numpy as np

_U64 = 0xFFFFFFFFFFFFFFFF


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _U64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _U64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _U64
    return x ^ (x >> 31)


def stable_hash64(*parts) -> int:
    """Stable 64-bit hash of a tuple of ints/floats/strings.

    Used to derive grid-point seeds; unlike builtin hash() it is identical
    across processes and runs.
    """
    h = hashlib.sha256()
    for p in parts:
        h.update(repr(p).encode())
        h.update(b"\x1f")
    return int.from_bytes(h.digest()[:8], "little")


class RngStream:
    """Seeded random stream with cheap independent children."""

    __slots__ = ("master_seed", "stream_id", "gen")

    def __init__(self, master_seed: int, stream_id: int = 0):
        self.master_seed = master_seed & _U64
        self.stream_id = stream_id & _U64
        key = np.array([self.master_seed, self.stream_id], dtype=np.uint64)
        self.gen = np.random.Generator(np.random.Philox(key=key))

    def derive(self, child: int) -> "RngStream":
        """Independent child stream; same (parent, child) -> same stream."""
        cid = _splitmix64(self.stream_id ^ _splitmix64(child & _U64))
        return RngStream(self.master_seed, cid)

    # Thin conveniences over the underlying Generator.
    def standard_normal(self, shape):
        return self.gen.standard_normal(shape)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self.gen.uniform(low, high, size)

    def integers(self, low, high=None, size=None):
        return self.gen.integers(low, high, size)

    def permutation(self, n: int):
        return self.gen.permutation(n)

    def raw_u64(self, n: int):
        return self.gen.integers(0, 1 << 64, size=n, dtype=np.uint64)

    def __repr__(self):
        return f"RngStream(master_seed={self.master_seed}, stream_id={self.stream_id})"
