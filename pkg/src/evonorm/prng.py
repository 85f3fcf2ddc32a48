"""Deterministic seeded PRNG (splitmix64) for reproducible harnesses."""

MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream; identical output for identical seeds on any host."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi] via rejection-free modulo (tiny bias
        is irrelevant for test-data generation and keeps the stream simple)."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]
