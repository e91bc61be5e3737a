"""Seeded PCG32 generator used for every random draw in the package.

PCG32 (XSH-RR variant, O'Neill) is implemented here rather than taken from
``random``/``numpy`` so that the draw sequence is a documented, stable
algorithm: the same (seed, stream) pair must yield the same points forever,
independent of interpreter or library versions.

Stream discipline: every logical purpose draws from its own stream so that
results do not depend on evaluation order.  ``stream_for(node_id, purpose)``
maps a refinement-tree node and a purpose to a stream id; top-level runs use
the ``STREAM_*`` constants directly.
"""

from __future__ import annotations

_MASK64 = 0xFFFF_FFFF_FFFF_FFFF
_MASK32 = 0xFFFF_FFFF
_MULT = 6364136223846793005

# Top-level stream ids (per-purpose, seed shared).
STREAM_INIT = 0      # initial generator placement
STREAM_ANGLES = 1    # rotational-perturbation angles
STREAM_SAMPLES = 2   # Monte Carlo / bound-verification sampling
STREAM_TRIALS = 3    # per-trial seed derivation in comparisons

_PURPOSES = 4


def stream_for(node_id: int, purpose: int) -> int:
    """Stream id for (tree node, purpose); keeps node subtrees independent."""
    return node_id * _PURPOSES + purpose


class PCG32:
    """Minimal PCG32: 64-bit state, 32-bit output, selectable stream."""

    def __init__(self, seed: int, stream: int = 0):
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must fit in 64 bits")
        self.state = 0
        self.inc = ((stream << 1) & _MASK64) | 1
        self._next_u32()
        self.state = (self.state + seed) & _MASK64
        self._next_u32()

    def _next_u32(self) -> int:
        old = self.state
        self.state = (old * _MULT + self.inc) & _MASK64
        xorshifted = (((old >> 18) ^ old) >> 27) & _MASK32
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & _MASK32

    def next_u32(self) -> int:
        return self._next_u32()

    def next_u64(self) -> int:
        hi = self._next_u32()
        return (hi << 32) | self._next_u32()

    def random(self) -> float:
        """Uniform double in [0, 1) with 32-bit resolution."""
        return self._next_u32() * 2.0**-32

    def uniform(self, a: float, b: float) -> float:
        """Uniform double in [a, b)."""
        return a + (b - a) * self.random()
