from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import chisquare

from supergame import (
    GeneratorConfig,
    InfeasibleRange,
    StageGame,
    check_locally_noncooperative,
    check_monotone_decreasing,
    random_game,
    random_profile,
    solve,
)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**64 - 1),
       st.sampled_from([1, "1/2", "0.1"]), st.integers(0, 10))
def test_games_pass_both_audits(n, seed, step, slack):
    step = Fraction(step)
    config = GeneratorConfig(n, (-3, -3 + (2 * n + 1 + slack) * step), step, seed)
    game = random_game(config)
    assert check_locally_noncooperative(game).passed
    assert check_monotone_decreasing(game).passed
    low, high = config.value_range
    values = game.coop_utility + game.defect_utility
    assert all(low <= v <= high for v in values)
    assert all((v - low) % step == 0 for v in values)


def test_deterministic():
    c = GeneratorConfig(5, (0, 30), 1, 42)
    assert random_game(c) == random_game(c)
    assert random_profile(4, 9) == random_profile(4, 9)


def test_tight_range_is_feasible():
    game = random_game(GeneratorConfig(4, (0, 9), 1, 0))
    assert check_monotone_decreasing(game).passed


@pytest.mark.parametrize("config", [
    dict(n=3, value_range=(0, 6), resolution=1),
    dict(n=3, value_range=(0, 7), resolution=2),
    dict(n=3, value_range=(5, 0), resolution=1),
    dict(n=1, value_range=(0, 100), resolution=1),
    dict(n=3, value_range=(0, 100), resolution=0),
])
def test_infeasible_ranges(config):
    with pytest.raises(InfeasibleRange):
        GeneratorConfig(**config)


def test_example1_is_in_the_family():
    # seed found by scanning seeds 0..29999 on this grid (17 hits)
    game = random_game(GeneratorConfig(3, (0, 7), 1, 744))
    assert game == StageGame.from_rows([6, 3, 1], [7, 5, 4])


def test_profile_length():
    for seed in range(20):
        assert random_profile(2, seed).n == 2


def test_profile_states_are_binomial():
    counts = Counter(random_profile(3, seed).state for seed in range(10_000))
    observed = [counts[j] for j in range(4)]
    expected = [10_000 * comb(3, j) / 8 for j in range(4)]
    assert chisquare(observed, expected).pvalue > 1e-3


def test_both_regimes_occur_at_n3():
    kinds = Counter()
    for seed in range(1000):
        game = random_game(GeneratorConfig(3, (0, 16), 1, seed))
        loops = solve(game).self_loops
        kinds["mixed" if any(0 < e < 3 for e in loops) else "symmetric-only"] += 1
    assert kinds["mixed"] > 0 and kinds["symmetric-only"] > 0
