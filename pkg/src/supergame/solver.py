"""Leading relation, chained equilibria and their classification.

The solved form of a supergame is a :class:`TransitionGraph`: a total map
sending each state ``[b]`` to the state it leads to.  On games that pass
both structural audits the map only ever moves up by one defector or stays
put, and ``[n]`` always stays put, so it can be built by a single backward
pass from ``[n]`` down to ``[0]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CycleLengthViolation, PropertyViolation
from .game import COOPERATE, DEFECT, StageGame, audit, utility

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"


@dataclass(frozen=True)
class TransitionGraph:
    """``lead[b]`` is the state that ``[b]`` leads to."""

    n: int
    lead: tuple[int, ...]

    def __post_init__(self):
        lead = tuple(int(c) for c in self.lead)
        if len(lead) != self.n + 1:
            raise ValueError(f"lead map needs {self.n + 1} entries, got {len(lead)}")
        for b, c in enumerate(lead):
            if not (0 <= c <= self.n and abs(c - b) <= 1):
                raise ValueError(f"[{b}] cannot lead to [{c}]: one switch moves at most one step")
        object.__setattr__(self, "lead", lead)

    def __getitem__(self, b: int) -> int:
        return self.lead[b]

    @property
    def self_loops(self) -> list[int]:
        return [b for b, c in enumerate(self.lead) if b == c]

    def edges(self) -> list[tuple[int, int]]:
        return list(enumerate(self.lead))

    def with_edge(self, b: int, c: int) -> "TransitionGraph":
        lead = list(self.lead)
        lead[b] = c
        return TransitionGraph(self.n, tuple(lead))


def chain_path(graph: TransitionGraph, start: int) -> list[int]:
    """States visited from ``start`` up to and including its equilibrium."""
    if not 0 <= start <= graph.n:
        raise ValueError(f"state [{start}] outside [0]..[{graph.n}]")
    path = [start]
    seen = {start}
    b = start
    while graph.lead[b] != b:
        b = graph.lead[b]
        if b in seen:
            path.append(b)
            raise CycleLengthViolation(start, path)
        seen.add(b)
        path.append(b)
    return path


def absorb(graph: TransitionGraph, start: int) -> int:
    """The equilibrium state that ``start`` is chained to."""
    return chain_path(graph, start)[-1]


def solve(game: StageGame) -> TransitionGraph:
    """Compute the leading relation of an audited game.

    A cooperator at ``[b]`` who defects moves the game to ``[b+1]``, from
    where it is carried up to ``e = absorb([b+1])`` while still defecting.
    It switches exactly when ``u(1,[e]) > u(0,[b])``; ties keep ``[b]``.

    Raises :class:`PropertyViolation` when either audit fails, since the
    relation is not guaranteed to be single-valued there.
    """
    audits = audit(game)
    if not all(a.passed for a in audits):
        raise PropertyViolation([a for a in audits if not a.passed])
    n = game.n
    lead = [0] * (n + 1)
    basin = [0] * (n + 1)
    lead[n] = basin[n] = n
    for b in range(n - 1, -1, -1):
        e = basin[b + 1]
        if utility(game, DEFECT, e) > utility(game, COOPERATE, b):
            lead[b], basin[b] = b + 1, e
        else:
            lead[b], basin[b] = b, b
    return TransitionGraph(n, tuple(lead))


@dataclass(frozen=True)
class Equilibrium:
    state: int
    kind: str
    coop_payoff: Optional[Fraction]
    defect_payoff: Optional[Fraction]

    @property
    def symmetric(self) -> bool:
        return self.kind == SYMMETRIC


@dataclass(frozen=True)
class EquilibriumReport:
    equilibria: tuple[Equilibrium, ...]
    basin: tuple[int, ...]

    @property
    def states(self) -> list[int]:
        return [e.state for e in self.equilibria]

    def get(self, state: int) -> Equilibrium:
        for e in self.equilibria:
            if e.state == state:
                return e
        raise KeyError(state)


def equilibria(game: StageGame, graph: TransitionGraph) -> EquilibriumReport:
    n = game.n
    found = []
    for e in graph.self_loops:
        kind = SYMMETRIC if e in (0, n) else ASYMMETRIC
        coop = utility(game, COOPERATE, e) if e < n else None
        defect = utility(game, DEFECT, e) if e > 0 else None
        found.append(Equilibrium(e, kind, coop, defect))
    basin = tuple(absorb(graph, b) for b in range(n + 1))
    return EquilibriumReport(tuple(found), basin)


def equilibrium_payoff_vector(game: StageGame, e: int) -> list[Fraction]:
    """Per-agent payoffs at ``[e]``, cooperative agents listed first."""
    coop = [utility(game, COOPERATE, e)] * (game.n - e) if e < game.n else []
    defect = [utility(game, DEFECT, e)] * e if e > 0 else []
    return coop + defect
