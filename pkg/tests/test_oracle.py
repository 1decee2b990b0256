import numpy as np
import pytest
from hypothesis import given, settings

from supergame import (
    SearchTooLarge,
    StageGame,
    TransitionGraph,
    check_graph,
    cross_check,
    enumerate_consistent_graphs,
    solve,
    verify_theorems,
)
from supergame.oracle import _candidates, consistent_mask

from strategies import any_games, audited_games


def test_candidate_space_is_complete_and_ordered():
    for n in range(2, 6):
        leads = _candidates(n)
        assert leads.shape == (4 * 3 ** (n - 1), n + 1)
        rows = [tuple(r) for r in leads]
        assert rows == sorted(rows)
        assert len(set(rows)) == len(rows)
        assert np.all(np.abs(leads - np.arange(n + 1)) <= 1)
        assert leads.min() == 0 and leads.max() == n


def test_example1_unique(example1):
    graphs = enumerate_consistent_graphs(example1)
    assert [g.lead for g in graphs] == [(0, 2, 3, 3)]


def test_example2_unique(example2):
    graphs = enumerate_consistent_graphs(example2)
    assert [g.lead for g in graphs] == [(1, 1, 3, 3)]


def test_small_game():
    g = StageGame.from_rows([4, 1], [5, 2])
    assert [x.lead for x in enumerate_consistent_graphs(g)] == [(0, 2, 2)]


def test_unaudited_game_reports_every_graph():
    # [1] profits both ways: its defector by cooperating (0 -> 1) and its
    # cooperator by defecting (0 -> 1), so two graphs are consistent
    g = StageGame.from_rows([1, 0], [0, 1])
    report = cross_check(g)
    assert [x.lead for x in report.consistent_graphs] == [(0, 0, 2), (0, 2, 2)]
    assert not report.unique
    assert report.solver_graph is None
    assert report.matches_solver is None
    assert report.theorem_results == {}
    assert not report.ok


def test_search_cap():
    g = StageGame.from_rows(range(26, 0, -2), range(27, 1, -2))
    with pytest.raises(SearchTooLarge):
        enumerate_consistent_graphs(g)
    with pytest.raises(SearchTooLarge):
        enumerate_consistent_graphs(StageGame.from_rows([6, 3, 1], [7, 5, 4]), max_n=2)


@settings(max_examples=150, deadline=None)
@given(any_games(max_n=4))
def test_vectorised_search_matches_scalar_checker(game):
    leads = _candidates(game.n)
    mask = consistent_mask(game, leads)
    for row, accepted in zip(leads, mask):
        graph = TransitionGraph(game.n, tuple(int(c) for c in row))
        assert accepted == (not check_graph(game, graph)), graph.lead


@settings(max_examples=100, deadline=None)
@given(audited_games(max_n=6))
def test_vectorised_search_matches_scalar_checker_audited(game):
    leads = _candidates(game.n)
    mask = consistent_mask(game, leads)
    scalar = [not check_graph(game, TransitionGraph(game.n, tuple(int(c) for c in r))) for r in leads]
    assert list(mask) == scalar


@settings(max_examples=200, deadline=None)
@given(audited_games(max_n=7))
def test_unique_and_matches_solver(game):
    report = cross_check(game)
    assert report.unique
    assert report.matches_solver
    assert report.theorems_pass, report.witnesses()
    graph = report.consistent_graphs[0]
    assert all(graph.lead[b] >= b for b in range(game.n + 1))


def test_theorems_pass_on_examples(example1, example2):
    for g in (example1, example2):
        results = verify_theorems(g, solve(g))
        assert all(r.passed for r in results.values()), results


def test_chain_to_top_applies_only_at_2_in_example2(example2):
    # u(1,[3]) = 3/2 exceeds u(0,[2]) = 1 only
    res = verify_theorems(example2, solve(example2))["chain_to_top"]
    assert res.passed and not res.vacuous
    bad = solve(example2).with_edge(2, 2)
    res = verify_theorems(example2, bad)["chain_to_top"]
    assert not res.passed and "[2]" in res.witness


def test_corrupted_top_state(example1):
    bad = TransitionGraph(3, (0, 2, 3, 2))
    results = verify_theorems(example1, bad)
    top = results["top_state_equilibrium"]
    assert not top.passed
    assert "[3]" in top.witness
    assert not results["one_cycle_of_length_one"].passed


def test_check_graph_witnesses(example1):
    assert check_graph(example1, solve(example1)) == []
    w = check_graph(example1, TransitionGraph(3, (1, 2, 3, 3)))
    assert [(x.check, x.state) for x in w] == [("upward_edge", 0)]
    w = check_graph(example1, TransitionGraph(3, (0, 1, 3, 3)))
    # with [1] now an equilibrium, defecting at [0] pays 7 > 6 as well
    assert [(x.check, x.state) for x in w] == [("self_loop", 0), ("self_loop", 1)]
    w = check_graph(example1, TransitionGraph(3, (0, 2, 1, 3)))
    assert {x.check for x in w} == {"cycle"}


def _mutations(graph):
    n = graph.n
    for b in range(n + 1):
        for c in (b - 1, b, b + 1):
            if 0 <= c <= n and c != graph.lead[b]:
                yield graph.with_edge(b, c)


@settings(max_examples=60, deadline=None)
@given(audited_games(max_n=5))
def test_every_single_edge_mutation_is_rejected(game):
    graph = solve(game)
    for bad in _mutations(graph):
        report = cross_check(game, bad)
        assert not report.ok
        assert report.candidate_witnesses, bad.lead
