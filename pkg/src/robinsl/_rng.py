"""Deterministic splitmix64 stream for reproducible sampling.

The generator is fixed (not platform RNG) so that reports citing a seed can
be regenerated bit-for-bit anywhere.
"""

import math

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z):
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, tag: int, index: int) -> int:
    """Stable per-(tag, index) sub-seed of a master seed."""
    s = _mix((seed & _MASK) ^ _mix(((tag + 1) * _GAMMA) & _MASK))
    return _mix((s + index) & _MASK)


class SplitMix64:
    """Scalar splitmix64 stream."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def next_unit(self) -> float:
        """Uniform double in (0, 1]."""
        return ((self.next_u64() >> 11) + 1) * 2.0**-53

    def next_abs_normal(self) -> float:
        """|N(0, 1)| via Box-Muller (two uniforms per draw)."""
        u1 = self.next_unit()
        u2 = self.next_unit()
        return abs(math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2))
