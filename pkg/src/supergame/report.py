"""JSON and Graphviz renderings of solved games.

Rationals are always written as ``"p/q"`` strings so that reports survive a
round trip exactly.  Output ordering depends only on state indices, which
keeps every rendering byte-stable for a fixed game.
"""

from __future__ import annotations

import json

from .game import StageGame, audit, format_rational, game_from_spec
from .solver import EquilibriumReport, TransitionGraph, equilibria, equilibrium_payoff_vector, solve


def _opt(v):
    return None if v is None else format_rational(v)


def audit_to_json(game: StageGame) -> dict:
    return {
        a.property: {
            "passed": a.passed,
            "violations": [v.render() for v in a.violations],
        }
        for a in audit(game)
    }


def equilibria_to_json(report: EquilibriumReport) -> dict:
    return {
        "equilibria": [
            {
                "state": e.state,
                "kind": e.kind,
                "coop_payoff": _opt(e.coop_payoff),
                "defect_payoff": _opt(e.defect_payoff),
            }
            for e in report.equilibria
        ],
        "basin": list(report.basin),
    }


def solve_report(game: StageGame, graph: TransitionGraph) -> dict:
    eq = equilibria(game, graph)
    return {
        "game": game.to_spec(),
        "audits": audit_to_json(game),
        "graph": {"n": graph.n, "lead": list(graph.lead)},
        **equilibria_to_json(eq),
        "payoff_vectors": {
            str(b): [format_rational(p) for p in equilibrium_payoff_vector(game, b)]
            for b in game.states
        },
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_matches(report: dict) -> bool:
    """Re-solve the game echoed in ``report`` and compare field by field."""
    game = game_from_spec(report["game"])
    fresh = solve_report(game, solve(game))
    return json.loads(dumps_report(fresh)) == report


def state_label(game: StageGame, b: int) -> str:
    payoffs = ", ".join(str(p) for p in equilibrium_payoff_vector(game, b))
    return f"[{b}]\\n({payoffs})"


def to_dot(game: StageGame, graph: TransitionGraph) -> str:
    """Graphviz digraph with one payoff-labelled node per state and one edge
    per lead; equilibria appear as self-loops."""
    lines = ["digraph supergame {", "  node [shape=circle];"]
    for b in game.states:
        lines.append(f'  s{b} [label="{state_label(game, b)}"];')
    for b, c in graph.edges():
        lines.append(f"  s{b} -> s{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
