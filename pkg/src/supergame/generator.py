"""Random audited stage games and random strategy profiles.

Values live on the grid ``low, low + step, ..., high``.  The defect row is
drawn first as ``n`` distinct grid points above ``low``; each cooperative
value is then drawn strictly below both the next defect value and the
previous cooperative value, leaving room for the values still to come.
The result passes both structural audits by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InfeasibleRange
from .game import StageGame, audit, to_rational
from .simulator import Profile


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    value_range: tuple = (0, 20)
    resolution: object = 1
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise InfeasibleRange(f"n must be >= 2, got {self.n}")
        low, high = (to_rational(v) for v in self.value_range)
        step = to_rational(self.resolution)
        if step <= 0:
            raise InfeasibleRange(f"resolution must be positive, got {step}")
        if high - low < (2 * self.n + 1) * step:
            raise InfeasibleRange(
                f"range [{low}, {high}] holds fewer than {2 * self.n + 1} steps of {step}"
            )
        object.__setattr__(self, "value_range", (low, high))
        object.__setattr__(self, "resolution", step)

    @property
    def grid_size(self) -> int:
        low, high = self.value_range
        return int((high - low) // self.resolution) + 1


def random_game(config: GeneratorConfig) -> StageGame:
    n = config.n
    low, _ = config.value_range
    step = config.resolution
    rng = np.random.default_rng(config.seed)
    top = config.grid_size - 1  # grid index of the highest value

    # defect row: n distinct indices in 1..top, descending
    d = sorted((int(k) for k in rng.choice(np.arange(1, top + 1), size=n, replace=False)),
               reverse=True)
    c = []
    prev = None
    for b in range(n):
        hi = d[b] - 1 if prev is None else min(d[b] - 1, prev - 1)
        lo = n - 1 - b
        if hi < lo:
            raise InfeasibleRange(f"no grid room for the cooperative value at [{b}]")
        prev = int(rng.integers(lo, hi + 1))
        c.append(prev)
    value = lambda k: low + k * step  # noqa: E731
    game = StageGame(n, tuple(value(k) for k in c), tuple(value(k) for k in d))
    for a in audit(game):
        if not a.passed:
            raise AssertionError(f"generator emitted a game failing {a.property}: {a.violations}")
    return game


def random_games(n: int, count: int, seed: int = 0, value_range=None, resolution=1):
    """``count`` games, the i-th drawn with seed ``seed + i``."""
    if value_range is None:
        value_range = default_range(n)
    return [random_game(GeneratorConfig(n, value_range, resolution, seed + i)) for i in range(count)]


def random_profile(n: int, seed: int) -> Profile:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rng = np.random.default_rng(seed)
    return Profile(tuple(int(x) for x in rng.integers(0, 2, size=n)))


def default_range(n: int) -> tuple[Fraction, Fraction]:
    """A range giving each row generous room on the integer grid."""
    return Fraction(0), Fraction(4 * n + 4)
