"""Deterministic, platform-independent random streams.

A SplitMix64 generator (pure 64-bit integer arithmetic, fully specified
below) drives every randomized check in the package, so identical
(seed, samples) always reproduce identical reports on any platform.

Random rational coefficients are p/q with |p| <= 10 and 1 <= q <= 4, which
keeps all downstream exact arithmetic small.
"""

from gmpy2 import mpq as Q

_MASK = (1 << 64) - 1


class Stream:
    """SplitMix64: state += 0x9E3779B97F4A7C15; output = mix(state)."""

    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi] (inclusive); modulo bias is irrelevant
        at these tiny ranges."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def rational(self):
        """Random p/q with |p| <= 10, 1 <= q <= 4."""
        return Q(self.randint(-10, 10), self.randint(1, 4))

    def nonzero_rational(self):
        while True:
            r = self.rational()
            if r != 0:
                return r
