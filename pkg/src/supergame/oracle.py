"""Brute-force verification of the leading relation.

Every map ``lead: b -> {b-1, b, b+1}`` (clipped to ``[0, n]``) is a
candidate.  A candidate is *consistent* when

(a) every cycle of its functional graph is a self-loop;
(b) each upward edge ``[b] -> [b+1]`` strictly profits the cooperator who
    defects, judged by its role and payoff at the equilibrium the chain
    from ``[b+1]`` settles in, against ``u(0,[b])``;
(c) each downward edge ``[b] -> [b-1]`` likewise strictly profits the
    defector who cooperates, against ``u(1,[b])``;
(d) at each self-loop ``[b]`` neither kind of single switch would profit.

The deviator's role is tracked along the continuation chain: it keeps its
new role unless the chain steps back against its own move, in which case it
is the agent undoing its switch.

None of this reuses the solver's reasoning, so enumeration can falsify it.
Utilities enter only through strict comparisons, which lets the search run
on integer ranks of the exact values and be vectorised over all candidates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import PropertyViolation, SearchTooLarge
from .game import COOPERATE, DEFECT, StageGame, is_audited, utility
from .solver import TransitionGraph, solve

MAX_N = 12


# -- exhaustive enumeration --------------------------------------------------

def _options(b: int, n: int) -> list[int]:
    return [c for c in (b - 1, b, b + 1) if 0 <= c <= n]


@lru_cache(maxsize=None)
def _candidates(n: int) -> np.ndarray:
    """All clipped lead vectors, lexicographically ordered, one per row."""
    rows = itertools.product(*(_options(b, n) for b in range(n + 1)))
    return np.array(list(rows), dtype=np.int16)


def _ranks(game: StageGame) -> tuple[np.ndarray, np.ndarray]:
    """Order-preserving integer ranks for both utility rows.

    Undefined cells get a rank below every defined value; consistent
    candidates never read them.
    """
    values = sorted(set(game.coop_utility) | set(game.defect_utility))
    rank = {v: i + 1 for i, v in enumerate(values)}
    coop = np.zeros(game.n + 1, dtype=np.int32)
    defect = np.zeros(game.n + 1, dtype=np.int32)
    for j in range(game.n):
        coop[j] = rank[game.coop_utility[j]]
        defect[j + 1] = rank[game.defect_utility[j]]
    return coop, defect


def consistent_mask(game: StageGame, leads: np.ndarray) -> np.ndarray:
    """Boolean mask over rows of ``leads`` marking consistent candidates."""
    n = game.n
    size = n + 1
    coop, defect = _ranks(game)
    rows = np.arange(leads.shape[0])[:, None]

    # After n+1 steps every walk sits on the cycle it ends in.
    x = np.broadcast_to(np.arange(size), leads.shape).copy()
    for _ in range(size):
        x = leads[rows, x]
    ok = np.all(leads[rows, x] == x, axis=1)
    terminal = x

    up_gain = np.zeros(leads.shape, dtype=bool)
    down_gain = np.zeros(leads.shape, dtype=bool)
    for b in range(size):
        if b < n:
            t = terminal[:, b + 1]
            # t == b means the chain came back and the deviator undid its switch
            payoff = np.where(t > b, defect[t], coop[np.minimum(t, n - 1)])
            up_gain[:, b] = payoff > coop[b]
        if b > 0:
            t = terminal[:, b - 1]
            payoff = np.where(t < b, coop[np.minimum(t, n - 1)], defect[np.maximum(t, 1)])
            down_gain[:, b] = payoff > defect[b]

    states = np.arange(size)
    up = leads == states + 1
    down = leads == states - 1
    stay = leads == states
    edge_ok = (up & up_gain) | (down & down_gain) | (stay & ~up_gain & ~down_gain)
    return ok & np.all(edge_ok, axis=1)


def enumerate_consistent_graphs(game: StageGame, max_n: int = MAX_N) -> list[TransitionGraph]:
    """Every candidate transition graph consistent with the leading semantics."""
    if game.n > max_n:
        raise SearchTooLarge(
            f"exhaustive search over 3^{game.n + 1} candidates refused for n={game.n} "
            f"(cap n <= {max_n})"
        )
    leads = _candidates(game.n)
    mask = consistent_mask(game, leads)
    return [TransitionGraph(game.n, tuple(int(c) for c in row)) for row in leads[mask]]


# -- single-graph consistency, with witnesses ---------------------------------

def _walk(graph: TransitionGraph, start: int) -> tuple[list[int], bool]:
    """Path from ``start``; the flag is False if it closes a longer cycle."""
    path = [start]
    seen = {start}
    b = start
    while graph.lead[b] != b:
        b = graph.lead[b]
        path.append(b)
        if b in seen:
            return path, False
        seen.add(b)
    return path, True


def deviation_payoff(game: StageGame, graph: TransitionGraph, b: int, action: int):
    """Equilibrium payoff of a single agent at ``[b]`` who switches away from
    ``action``, or ``None`` if the continuation never settles."""
    target = b + 1 if action == COOPERATE else b - 1
    path, settles = _walk(graph, target)
    if not settles:
        return None
    role = 1 - action
    prev = target
    for s in path[1:]:
        stepped_back = (s < prev) if action == COOPERATE else (s > prev)
        if stepped_back and role != action:
            role = action
        prev = s
    return utility(game, role, path[-1])


@dataclass(frozen=True)
class Witness:
    check: str
    state: int
    detail: str

    def render(self) -> str:
        return f"{self.check} at [{self.state}]: {self.detail}"


def check_graph(game: StageGame, graph: TransitionGraph) -> list[Witness]:
    """Consistency violations of one graph; empty iff it is consistent."""
    if graph.n != game.n:
        raise ValueError(f"graph has n={graph.n}, game has n={game.n}")
    n = game.n
    out = []
    for b in range(n + 1):
        path, settles = _walk(graph, b)
        if not settles:
            out.append(Witness(
                "cycle", b,
                "chain " + " -> ".join(f"[{s}]" for s in path) + " closes a cycle longer than one state",
            ))
    if out:
        return out

    for b in range(n + 1):
        c = graph.lead[b]
        up = deviation_payoff(game, graph, b, COOPERATE) if b < n else None
        down = deviation_payoff(game, graph, b, DEFECT) if b > 0 else None
        up_gain = up is not None and up > utility(game, COOPERATE, b)
        down_gain = down is not None and down > utility(game, DEFECT, b)
        if c == b + 1 and not up_gain:
            out.append(Witness(
                "upward_edge", b,
                f"cooperator switching to defect ends with {up}, not > u(0,[{b}]) = "
                f"{utility(game, COOPERATE, b)}",
            ))
        elif c == b - 1 and not down_gain:
            out.append(Witness(
                "downward_edge", b,
                f"defector switching to cooperate ends with {down}, not > u(1,[{b}]) = "
                f"{utility(game, DEFECT, b)}",
            ))
        elif c == b:
            if up_gain:
                out.append(Witness(
                    "self_loop", b,
                    f"cooperator can defect and end with {up} > u(0,[{b}]) = "
                    f"{utility(game, COOPERATE, b)}",
                ))
            if down_gain:
                out.append(Witness(
                    "self_loop", b,
                    f"defector can cooperate and end with {down} > u(1,[{b}]) = "
                    f"{utility(game, DEFECT, b)}",
                ))
    return out


# -- theorem checks -----------------------------------------------------------

@dataclass(frozen=True)
class TheoremResult:
    passed: bool
    witness: Optional[str] = None
    vacuous: bool = False

    def render(self) -> str:
        if self.passed:
            return "pass (vacuous)" if self.vacuous else "pass"
        return f"fail: {self.witness}"


def _pass(vacuous=False):
    return TheoremResult(True, None, vacuous)


def _fail(witness):
    return TheoremResult(False, witness)


def verify_theorems(game: StageGame, graph: TransitionGraph) -> dict[str, TheoremResult]:
    """Check each structural claim about audited games literally on ``graph``."""
    n = game.n
    u = lambda a, s: utility(game, a, s)  # noqa: E731
    walks = {b: _walk(graph, b) for b in range(n + 1)}
    term = {b: (p[-1] if ok else None) for b, (p, ok) in walks.items()}
    broken = [b for b in term if term[b] is None]
    results: dict[str, TheoremResult] = {}

    bad = [b for b in range(n + 1) if graph.lead[b] not in _options(b, n)]
    results["unique_lead"] = _fail(f"[{bad[0]}] leads to [{graph.lead[bad[0]]}]") if bad else _pass()

    if broken:
        p = walks[broken[0]][0]
        results["one_cycle_of_length_one"] = _fail(
            "cycle " + " -> ".join(f"[{s}]" for s in p))
    else:
        results["one_cycle_of_length_one"] = _pass()

    def chain_failure(b):
        return f"chain from [{b}] never settles"

    # monotone chains
    res = _pass()
    for b in range(n + 1):
        p, ok = walks[b]
        if not ok:
            res = _fail(chain_failure(b))
            break
        steps = [y - x for x, y in zip(p, p[1:])]
        if steps and not (all(s == 1 for s in steps) or all(s == -1 for s in steps)):
            res = _fail("non-monotone chain " + " -> ".join(f"[{s}]" for s in p))
            break
    results["monotone_chains"] = res

    # absorbed payoff dominates the starting role's payoff
    res, applied = _pass(), False
    for b in range(n + 1):
        c = term[b]
        if c is None:
            res = _fail(chain_failure(b))
            break
        if c > b:
            applied = True
            if not u(1, c) > u(0, b):
                res = _fail(f"[{b}] => [{c}] but u(1,[{c}]) = {u(1, c)} not > u(0,[{b}]) = {u(0, b)}")
                break
        elif c < b:
            applied = True
            if not u(0, c) > u(1, b):
                res = _fail(f"[{b}] => [{c}] but u(0,[{c}]) = {u(0, c)} not > u(1,[{b}]) = {u(1, b)}")
                break
    results["chained_gain"] = res if not res.passed else _pass(not applied)

    # each edge's equilibrium dominates every state the chain passes through
    res, applied = _pass(), False
    for b in range(n + 1):
        c = graph.lead[b]
        if c == b:
            continue
        applied = True
        e = term[c]
        if e is None:
            res = _fail(chain_failure(c))
            break
        if c == b + 1:
            if e < b + 1:
                res = _fail(f"[{b}] -> [{b + 1}] settles at [{e}] below [{b + 1}]")
                break
            d = next((d for d in range(b, e) if not u(1, e) > u(0, d)), None)
            if d is not None:
                res = _fail(f"[{b}] -> [{b + 1}] => [{e}] but u(1,[{e}]) = {u(1, e)} not > u(0,[{d}]) = {u(0, d)}")
                break
        else:
            if e > b - 1:
                res = _fail(f"[{b}] -> [{b - 1}] settles at [{e}] above [{b - 1}]")
                break
            d = next((d for d in range(e + 1, b + 1) if not u(0, e) > u(1, d)), None)
            if d is not None:
                res = _fail(f"[{b}] -> [{b - 1}] => [{e}] but u(0,[{e}]) = {u(0, e)} not > u(1,[{d}]) = {u(1, d)}")
                break
    results["edge_dominance"] = res if not res.passed else _pass(not applied)

    # an upward edge is followed by a run of upward edges into an equilibrium
    res, applied = _pass(), False
    for b in range(n):
        if graph.lead[b] != b + 1:
            continue
        applied = True
        p, ok = walks[b + 1]
        if not ok or any(y != x + 1 for x, y in zip(p, p[1:])):
            res = _fail(f"[{b}] -> [{b + 1}] not followed by an upward run into an equilibrium")
            break
    results["upward_run"] = res if not res.passed else _pass(not applied)

    results["top_state_equilibrium"] = (
        _pass() if graph.lead[n] == n else _fail(f"[{n}] leads to [{graph.lead[n]}]"))

    results["symmetric_equilibrium_exists"] = (
        _pass() if graph.lead[0] == 0 or graph.lead[n] == n
        else _fail(f"neither [0] nor [{n}] is a self-loop"))

    down = [b for b in range(1, n + 1) if graph.lead[b] == b - 1]
    results["no_downward_edges"] = (
        _fail(f"[{down[0]}] -> [{down[0] - 1}]") if down else _pass())

    # states whose cooperators envy the all-defect payoff chain to the top
    res, applied = _pass(), False
    for b in range(n):
        if u(1, n) > u(0, b):
            applied = True
            if term[b] != n:
                where = "never settles" if term[b] is None else f"settles at [{term[b]}]"
                res = _fail(f"u(1,[{n}]) = {u(1, n)} > u(0,[{b}]) = {u(0, b)} but [{b}] {where}")
                break
    results["chain_to_top"] = res if not res.passed else _pass(not applied)

    return results


# -- bundled cross-check ------------------------------------------------------

@dataclass
class ConsistencyReport:
    consistent_graphs: list[TransitionGraph]
    solver_graph: Optional[TransitionGraph] = None
    theorem_results: dict[str, TheoremResult] = field(default_factory=dict)
    candidate: Optional[TransitionGraph] = None
    candidate_witnesses: list[Witness] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return len(self.consistent_graphs) == 1

    @property
    def matches_solver(self) -> Optional[bool]:
        if not self.unique or self.solver_graph is None:
            return None
        return self.consistent_graphs[0] == self.solver_graph

    @property
    def theorems_pass(self) -> bool:
        return all(r.passed for r in self.theorem_results.values())

    @property
    def candidate_accepted(self) -> Optional[bool]:
        if self.candidate is None:
            return None
        return self.unique and self.candidate == self.consistent_graphs[0] and not self.candidate_witnesses

    @property
    def ok(self) -> bool:
        if not (self.unique and self.matches_solver and self.theorems_pass):
            return False
        return self.candidate is None or bool(self.candidate_accepted)

    def witnesses(self) -> list[str]:
        """Every concrete reason the report is not clean."""
        out = [w.render() for w in self.candidate_witnesses]
        out += [f"{name}: {r.witness}" for name, r in self.theorem_results.items() if not r.passed]
        if not self.unique:
            out.append(f"{len(self.consistent_graphs)} consistent graphs, expected exactly one")
        elif self.matches_solver is False:
            out.append(f"solver graph {list(self.solver_graph.lead)} differs from "
                       f"consistent graph {list(self.consistent_graphs[0].lead)}")
        return out


def cross_check(game: StageGame, graph: Optional[TransitionGraph] = None,
                max_n: int = MAX_N) -> ConsistencyReport:
    """Enumerate, solve and verify; with ``graph`` also judge that graph.

    On games failing the audits the solver refuses and theorem checks are
    skipped; the consistent graphs are still reported as found.
    """
    graphs = enumerate_consistent_graphs(game, max_n=max_n)
    try:
        solved = solve(game)
    except PropertyViolation:
        solved = None
    report = ConsistencyReport(graphs, solved)
    checked = graph if graph is not None else solved
    if checked is not None and is_audited(game):
        report.theorem_results = verify_theorems(game, checked)
    if graph is not None:
        report.candidate = graph
        report.candidate_witnesses = check_graph(game, graph)
    return report
