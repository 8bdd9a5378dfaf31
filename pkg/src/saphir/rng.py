"""Deterministic seeded RNG (splitmix64).

Chosen over the stdlib generator because quiz sessions must be reproducible
bit-exactly in the browser client too; splitmix64 is a few lines in any
language and has no platform-dependent behavior.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SeededRng:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via 64-bit multiply-shift."""
        if n <= 0:
            raise ValueError("n must be positive")
        return (self.next_u64() * n) >> 64

    def choice(self, seq):
        if not seq:
            raise ValueError("empty sequence")
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
