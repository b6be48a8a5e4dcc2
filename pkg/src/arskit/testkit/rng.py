"""Seeded random systems.

The generator is pinned so that goldens are portable: **xorshift64 with shift
triple (13, 7, 17)** (Marsaglia 2003), 64-bit state, seed 0 replaced by
``0x9E3779B97F4A7C15``.  Uniform floats take the top 53 bits of the next
state.  ``random_ars(seed, n, p)`` visits the ordered pairs ``(i, j)`` in
row-major order (self-loops included) and keeps a pair when the next float
is ``< p``.
"""

from __future__ import annotations

from ..relations import FiniteArs, Lasso

ALGORITHM = "xorshift64-13-7-17"
_MASK = (1 << 64) - 1


class XorShift64:
    def __init__(self, seed: int):
        self.state = (seed & _MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= (x << 13) & _MASK
        x ^= x >> 7
        x ^= (x << 17) & _MASK
        self.state = x
        return x

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        return self.next_u64() % n


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n))


def random_ars(seed: int, n: int, p: float) -> FiniteArs:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 < p <= 1:
        raise ValueError("p must lie in (0, 1]")
    rng = XorShift64(seed)
    return _draw(rng, n, p)


def _draw(rng: XorShift64, n: int, p: float) -> FiniteArs:
    steps = [(i, j) for i in range(n) for j in range(n) if rng.random() < p]
    return FiniteArs(default_names(n), tuple(steps))


def instance_stream(seed: int, count: int, max_size: int, densities):
    """``count`` systems with sizes uniform in ``1..max_size`` and densities
    cycling through ``densities``, all drawn from one generator."""
    rng = XorShift64(seed)
    densities = list(densities)
    for k in range(count):
        n = 1 + rng.below(max_size)
        yield _draw(rng, n, densities[k % len(densities)])


def random_walk_lasso(ars: FiniteArs, rng: XorShift64, start: int) -> Lasso | None:
    """Walk from ``start`` taking uniformly chosen steps until an element repeats.

    The walk closes into a lasso on the first revisit; reaching a normal form
    first gives ``None``.
    """
    path = [start]
    seen = {start: 0}
    while True:
        succ = ars.successors[path[-1]]
        if not succ:
            return None
        nxt = succ[rng.below(len(succ))]
        if nxt in seen:
            i = seen[nxt]
            return Lasso(tuple(path[:i]), tuple(path[i:]))
        seen[nxt] = len(path)
        path.append(nxt)
