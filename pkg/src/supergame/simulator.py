"""Finite-horizon play of the supergame along a solved transition graph.

Round 0 is the initial profile as given.  In every later round the state
moves along one edge of the graph; when that edge leaves the state, one
eligible agent (a cooperator for an upward edge, a defector for a
downward one) is drawn uniformly and flips.  Every agent is paid
``u(own action, realised state)`` each round.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidProfile
from .game import COOPERATE, DEFECT, StageGame, format_rational, utility
from .solver import TransitionGraph


@dataclass(frozen=True)
class Profile:
    strategies: tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(x) for x in self.strategies)
        if any(x not in (0, 1) for x in s):
            raise InvalidProfile(f"strategies must be 0 or 1, got {self.strategies!r}")
        object.__setattr__(self, "strategies", s)

    @classmethod
    def from_string(cls, bits: str) -> "Profile":
        bits = bits.strip()
        if not bits or any(ch not in "01" for ch in bits):
            raise InvalidProfile(f"profile must be a string of 0/1 characters, got {bits!r}")
        return cls(tuple(int(ch) for ch in bits))

    @classmethod
    def at_state(cls, n: int, j: int) -> "Profile":
        """The profile in which the last ``j`` agents defect."""
        return cls((0,) * (n - j) + (1,) * j)

    @property
    def n(self) -> int:
        return len(self.strategies)

    @property
    def state(self) -> int:
        return sum(self.strategies)

    def __str__(self):
        return "".join(map(str, self.strategies))


@dataclass(frozen=True)
class Round:
    round: int
    state: int
    switcher: Optional[int]
    payoffs: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "state": self.state,
            "switcher": self.switcher,
            "payoffs": [format_rational(p) for p in self.payoffs],
        }


@dataclass(frozen=True)
class Trace:
    game: StageGame
    rounds: tuple[Round, ...]
    absorbed_at: Optional[int]
    seed: int
    final_profile: Profile

    def __len__(self):
        return len(self.rounds)

    @property
    def states(self) -> list[int]:
        return [r.state for r in self.rounds]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_json()) + "\n" for r in self.rounds)

    def write_jsonl(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_jsonl())


def _payoffs(game: StageGame, strategies: Sequence[int], state: int) -> tuple[Fraction, ...]:
    return tuple(utility(game, s, state) for s in strategies)


def run(game: StageGame, graph: TransitionGraph, initial: Profile, rounds: int, seed: int) -> Trace:
    """Play ``rounds`` rounds from ``initial`` with a seeded PRNG.

    The switching agent is picked by rank among the eligible agents (in
    agent-id order), so relabelling agents relabels the trace.
    """
    if initial.n != game.n:
        raise InvalidProfile(f"profile has {initial.n} agents, game has {game.n}")
    if graph.n != game.n:
        raise ValueError(f"graph has n={graph.n}, game has n={game.n}")
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    rng = np.random.default_rng(seed)
    strategies = list(initial.strategies)
    state = initial.state
    out = [Round(0, state, None, _payoffs(game, strategies, state))]
    absorbed_at = 0 if graph.lead[state] == state else None
    for r in range(1, rounds):
        target = graph.lead[state]
        switcher = None
        if target != state:
            role = COOPERATE if target > state else DEFECT
            eligible = [i for i, s in enumerate(strategies) if s == role]
            switcher = eligible[int(rng.integers(len(eligible)))]
            strategies[switcher] = 1 - role
            state = target
        out.append(Round(r, state, switcher, _payoffs(game, strategies, state)))
        if absorbed_at is None and graph.lead[state] == state:
            absorbed_at = r
    return Trace(game, tuple(out), absorbed_at, seed, Profile(tuple(strategies)))


@dataclass(frozen=True)
class ConvergenceCheck:
    per_agent_running_mean: tuple[Fraction, ...]
    target: tuple[Fraction, ...]
    max_deviation: Fraction


def empirical_limit_mean(trace: Trace, upto: Optional[int] = None) -> ConvergenceCheck:
    """Exact per-agent mean over rounds ``0..upto-1`` against the payoff each
    agent receives forever after, given its role in the final state."""
    if upto is None:
        upto = len(trace)
    if not 1 <= upto <= len(trace):
        raise ValueError(f"upto must lie in 1..{len(trace)}, got {upto}")
    game = trace.game
    n = game.n
    totals = [Fraction(0)] * n
    for rec in trace.rounds[:upto]:
        for i, p in enumerate(rec.payoffs):
            totals[i] += p
    means = tuple(t / upto for t in totals)
    final_state = trace.rounds[-1].state
    target = tuple(utility(game, s, final_state) for s in trace.final_profile.strategies)
    dev = max(abs(m - t) for m, t in zip(means, target))
    return ConvergenceCheck(means, target, dev)


def transient_bound(trace: Trace, upto: int) -> Fraction:
    """Upper bound ``absorbed_at * spread / upto`` on the convergence error,
    where ``spread`` is the range of all utility values."""
    values = trace.game.coop_utility + trace.game.defect_utility
    spread = max(values) - min(values)
    return Fraction(trace.absorbed_at or 0) * spread / upto
