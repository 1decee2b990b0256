"""Solver, verifier and simulator for symmetric n-player prisoners' dilemma
supergames under limit-of-means payoffs."""

from .errors import (
    CycleLengthViolation,
    EmptyCycle,
    GameSpecError,
    InfeasibleRange,
    InvalidProfile,
    PropertyViolation,
    SearchTooLarge,
    SupergameError,
    UndefinedUtility,
)
from .game import (
    COOPERATE,
    DEFECT,
    AuditResult,
    StageGame,
    Violation,
    audit,
    check_locally_noncooperative,
    check_monotone_decreasing,
    is_audited,
    limit_of_means,
    load_game,
    loads_game,
    utility,
)
from .generator import GeneratorConfig, random_game, random_games, random_profile
from .oracle import (
    ConsistencyReport,
    check_graph,
    cross_check,
    enumerate_consistent_graphs,
    verify_theorems,
)
from .simulator import ConvergenceCheck, Profile, Trace, empirical_limit_mean, run
from .solver import (
    ASYMMETRIC,
    SYMMETRIC,
    Equilibrium,
    EquilibriumReport,
    TransitionGraph,
    absorb,
    chain_path,
    equilibria,
    equilibrium_payoff_vector,
    solve,
)

__version__ = "0.1.0"
