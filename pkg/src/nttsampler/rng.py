"""Deterministic, seedable uniform bit stream shared by both samplers.

The stream is counter-mode output of a keyed BLAKE2b instance producing
64-bit blocks: block(i) = blake2b(key=seed_le64, data=i_le128)[0:8].
Bits are consumed most-significant-bit first within each block, so any
interleaving of next_bit / next_bits reads walks the same underlying
sequence.  Frozen test vectors live in tests/data/rng_vectors.json.
"""

from __future__ import annotations

import hashlib

_BLOCK_BITS = 64


class BitSource:
    """Single-owner stream of uniform bits, a pure function of the seed."""

    __slots__ = ("seed", "counter", "_buf", "_buf_bits", "bits_consumed", "_key")

    def __init__(self, seed: int):
        if not 0 <= seed < (1 << 64):
            raise ValueError("seed must fit in 64 bits")
        self.seed = seed
        self.counter = 0  # 128-bit block counter
        self._key = seed.to_bytes(8, "little")
        self._buf = 0
        self._buf_bits = 0
        self.bits_consumed = 0

    def _refill(self) -> None:
        block = hashlib.blake2b(self.counter.to_bytes(16, "little"),
                                key=self._key, digest_size=8).digest()
        self.counter += 1
        self._buf = int.from_bytes(block, "big")
        self._buf_bits = _BLOCK_BITS

    def next_bit(self) -> int:
        if self._buf_bits == 0:
            self._refill()
        self._buf_bits -= 1
        self.bits_consumed += 1
        return (self._buf >> self._buf_bits) & 1

    def next_bits(self, k: int) -> int:
        """k bits, MSB first, as an unsigned integer; 1 <= k <= 128."""
        if not 1 <= k <= 128:
            raise ValueError("k must be in [1, 128]")
        out = 0
        need = k
        while need:
            if self._buf_bits == 0:
                self._refill()
            take = need if need < self._buf_bits else self._buf_bits
            self._buf_bits -= take
            out = (out << take) | ((self._buf >> self._buf_bits) & ((1 << take) - 1))
            need -= take
        self.bits_consumed += k
        return out

    def uniform_below(self, bound: int) -> int:
        """Uniform integer in [0, bound] by rejection; consumes 0 bits if
        bound == 0."""
        if bound < 0:
            raise ValueError("bound must be >= 0")
        if bound == 0:
            return 0
        nbits = bound.bit_length()
        while True:
            v = self.next_bits(nbits)
            if v <= bound:
                return v
