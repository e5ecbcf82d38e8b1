"""Deterministic 64-bit PRNG for seeded matrix generation.

SplitMix64 (the reference generator published alongside the xoshiro
family). Chosen because the whole state is a single 64-bit word, the
update is four lines of integer arithmetic, and identical seeds
reproduce identical streams in any language, which is what makes
generated matrix files byte-reproducible.
"""

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream, seeded directly with a 64-bit integer."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        """Next raw 64-bit output."""
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n).

        Plain modulo reduction; the bias is below n / 2**64, which is
        irrelevant for the field orders used here (n <= 2**16) and keeps
        the draw trivially reproducible in other languages.
        """
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n
