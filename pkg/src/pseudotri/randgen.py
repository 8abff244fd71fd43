"""Deterministic 64-bit generator and general-position point sampling.

The generator is splitmix-style with the usual published constants
(increment 0x9E3779B97F4A7C15, mix multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB), so any seeded sweep can be reproduced bit-for-bit on
any platform.
"""

from __future__ import annotations

from .geometry import PointSet

__all__ = ["SplitMix64", "random_point_set"]

_MASK64 = (1 << 64) - 1
_INCREMENT = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """64-bit splitmix generator; pure integer arithmetic, platform independent."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _INCREMENT) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        """Uniform draw from [0, bound) by rejection; no modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound


def random_point_set(n: int, seed: int, coord_max: int = 1000) -> PointSet:
    """Seeded general-position point set with coordinates uniform in [0, coord_max].

    Points are drawn one at a time; a draw that duplicates an earlier point
    or forms a collinear triple is rejected and redrawn, so the result is
    always a valid PointSet and is fully determined by (n, seed, coord_max).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = SplitMix64(seed)
    pts: list[tuple[int, int]] = []
    used: set[tuple[int, int]] = set()
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 20000 * n:
            raise RuntimeError("rejection sampling failed to make progress; grid too small for n")
        x = rng.randrange(coord_max + 1)
        y = rng.randrange(coord_max + 1)
        if (x, y) in used:
            continue
        collinear = False
        for i in range(len(pts)):
            xi, yi = pts[i]
            for j in range(i + 1, len(pts)):
                xj, yj = pts[j]
                if (xj - xi) * (y - yi) == (yj - yi) * (x - xi):
                    collinear = True
                    break
            if collinear:
                break
        if collinear:
            continue
        pts.append((x, y))
        used.add((x, y))
    return PointSet(tuple(pts))
