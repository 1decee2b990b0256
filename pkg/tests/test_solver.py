from fractions import Fraction

import pytest
from hypothesis import given, settings

from supergame import (
    ASYMMETRIC,
    SYMMETRIC,
    CycleLengthViolation,
    PropertyViolation,
    StageGame,
    TransitionGraph,
    absorb,
    chain_path,
    equilibria,
    equilibrium_payoff_vector,
    solve,
    utility,
)

from strategies import audited_games


def test_example1_graph(example1):
    assert solve(example1).lead == (0, 2, 3, 3)


def test_example2_graph(example2):
    assert solve(example2).lead == (1, 1, 3, 3)


def test_small_game_graph():
    # frozen from exhaustive enumeration (see test_oracle): a cooperator at [0]
    # who defects is carried to [2], where it earns 2 < 4
    g = StageGame.from_rows([4, 1], [5, 2])
    assert solve(g).lead == (0, 2, 2)


def test_solve_refuses_unaudited():
    g = StageGame.from_rows([3, 3], [7, 5])
    with pytest.raises(PropertyViolation) as info:
        solve(g)
    assert "monotone_decreasing" in str(info.value)


def test_ties_keep_state():
    # u(1,[absorb(1)]) = u(1,[2]) = 3 equals u(0,[0]) = 3 -> no switch
    g = StageGame.from_rows([3, 1], [4, 3])
    assert solve(g).lead == (0, 2, 2)


def test_absorb_and_chain_path(example1, example2):
    g1, g2 = solve(example1), solve(example2)
    assert absorb(g1, 1) == 3
    assert absorb(g1, 0) == 0
    assert chain_path(g1, 1) == [1, 2, 3]
    assert chain_path(g2, 0) == [0, 1]
    for e in g1.self_loops:
        assert absorb(g1, e) == e
        assert chain_path(g1, e) == [e]


def test_absorb_rejects_longer_cycle():
    g = TransitionGraph(3, (0, 2, 1, 3))
    with pytest.raises(CycleLengthViolation):
        absorb(g, 1)
    assert absorb(g, 3) == 3


def test_graph_rejects_jumps():
    with pytest.raises(ValueError):
        TransitionGraph(3, (2, 1, 2, 3))
    with pytest.raises(ValueError):
        TransitionGraph(3, (0, 1, 2))
    with pytest.raises(ValueError):
        TransitionGraph(3, (0, 1, 2, 4))


def test_equilibria_example1(example1):
    report = equilibria(example1, solve(example1))
    assert report.states == [0, 3]
    e0, e3 = report.equilibria
    assert (e0.kind, e0.coop_payoff, e0.defect_payoff) == (SYMMETRIC, 6, None)
    assert (e3.kind, e3.coop_payoff, e3.defect_payoff) == (SYMMETRIC, None, 4)
    assert report.basin == (0, 3, 3, 3)


def test_equilibria_example2(example2):
    report = equilibria(example2, solve(example2))
    assert report.states == [1, 3]
    e1, e3 = report.equilibria
    assert (e1.kind, e1.coop_payoff, e1.defect_payoff) == (ASYMMETRIC, 3, 7)
    assert (e3.kind, e3.defect_payoff) == (SYMMETRIC, Fraction(3, 2))
    assert report.basin == (1, 1, 3, 3)


def test_payoff_vectors(example1, example2):
    assert equilibrium_payoff_vector(example1, 1) == [3, 3, 7]
    assert equilibrium_payoff_vector(example1, 2) == [1, 5, 5]
    assert equilibrium_payoff_vector(example2, 3) == [Fraction(3, 2)] * 3
    assert equilibrium_payoff_vector(example1, 0) == [6, 6, 6]


@settings(max_examples=300, deadline=None)
@given(audited_games())
def test_graph_invariants(game):
    graph = solve(game)
    n = game.n
    u = lambda a, s: utility(game, a, s)  # noqa: E731
    assert graph.lead[n] == n
    assert all(graph.lead[b] in (b, b + 1) for b in range(n))
    report = equilibria(game, graph)
    assert n in report.states
    for e in report.equilibria:
        assert (e.kind == SYMMETRIC) == (e.state in (0, n))
    for b in range(n + 1):
        path = chain_path(graph, b)
        assert all(y == x + 1 for x, y in zip(path, path[1:]))
        c = path[-1]
        assert report.basin[b] == c
        if c > b:
            assert u(1, c) > u(0, b)
        if b < n and u(1, n) > u(0, b):
            assert c == n
        if graph.lead[b] == b + 1:
            e = absorb(graph, b + 1)
            assert all(u(1, e) > u(0, d) for d in range(b, e))
    assert solve(game) == graph
