"""Command-line entry point: ``supergame {audit,solve,check,simulate,generate}``.

Exit codes are shared by every subcommand: 0 success, 1 semantic refusal
or failed check, 2 input error, 3 resource cap or infeasible request.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import GameSpecError, InfeasibleRange, InvalidProfile, SearchTooLarge
from .game import audit, dumps_game, load_game
from .generator import GeneratorConfig, default_range, random_game
from .oracle import MAX_N, cross_check
from .report import dumps_report, solve_report, to_dot
from .simulator import Profile, empirical_limit_mean, run
from .solver import TransitionGraph, absorb, solve

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _load(path):
    try:
        return load_game(path)
    except OSError as exc:
        raise GameSpecError(f"{path}: {exc.strerror}") from exc


def _print_violations(audits):
    for a in audits:
        for v in a.violations:
            print(v.render())


def _refuse_unaudited(game) -> bool:
    audits = audit(game)
    if all(a.passed for a in audits):
        return False
    print("refusing: game fails structural audits")
    _print_violations(audits)
    return True


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_audit(args) -> int:
    game = _load(args.path)
    audits = audit(game)
    _print_violations(audits)
    if all(a.passed for a in audits):
        print("ok: locally non-cooperative and monotone decreasing")
        return EXIT_OK
    return EXIT_REFUSED


def cmd_solve(args) -> int:
    game = _load(args.path)
    if _refuse_unaudited(game):
        return EXIT_REFUSED
    graph = solve(game)
    report = solve_report(game, graph)
    for b, c in graph.edges():
        print(f"[{b}] -> [{c}]")
    for e in report["equilibria"]:
        print(f"equilibrium [{e['state']}] {e['kind']}")
    if args.dot:
        _write(args.dot, to_dot(game, graph))
    if args.json:
        _write(args.json, dumps_report(report))
    return EXIT_OK


def _parse_graph(text, n):
    try:
        lead = tuple(int(tok) for tok in text.split(","))
        return TransitionGraph(n, lead)
    except ValueError as exc:
        raise GameSpecError(f"--graph {text!r}: {exc}") from exc


def cmd_check(args) -> int:
    game = _load(args.path)
    graph = _parse_graph(args.graph, game.n) if args.graph else None
    report = cross_check(game, graph, max_n=args.max_n)
    print(f"consistent graphs: {len(report.consistent_graphs)}")
    for g in report.consistent_graphs:
        print("  lead " + ",".join(map(str, g.lead)))
    print(f"unique: {report.unique}")
    print(f"matches solver: {report.matches_solver}")
    for name, res in report.theorem_results.items():
        print(f"{name}: {res.render()}")
    if report.candidate is not None:
        print(f"candidate accepted: {report.candidate_accepted}")
    for w in report.witnesses():
        print(f"witness: {w}")
    return EXIT_OK if report.ok else EXIT_REFUSED


def cmd_simulate(args) -> int:
    game = _load(args.path)
    if _refuse_unaudited(game):
        return EXIT_REFUSED
    try:
        initial = Profile.from_string(args.initial) if args.initial else Profile((0,) * game.n)
        if initial.n != game.n:
            raise InvalidProfile(f"profile {args.initial!r} has {initial.n} agents, game has {game.n}")
    except InvalidProfile as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    graph = solve(game)
    trace = run(game, graph, initial, args.rounds, args.seed)
    check = empirical_limit_mean(trace)
    print(f"absorbed_at: {trace.absorbed_at}")
    print(f"absorbed state: [{absorb(graph, initial.state)}]")
    print("running means: " + ", ".join(str(m) for m in check.per_agent_running_mean))
    print("targets: " + ", ".join(str(t) for t in check.target))
    print(f"max_deviation: {check.max_deviation}")
    if args.trace:
        trace.write_jsonl(args.trace)
    return EXIT_OK


def cmd_generate(args) -> int:
    low = args.low if args.low is not None else default_range(args.n)[0]
    high = args.high if args.high is not None else default_range(args.n)[1]
    configs = [GeneratorConfig(args.n, (low, high), args.resolution, args.seed + i)
               for i in range(args.count)]
    games = [random_game(c) for c in configs]
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, g in enumerate(games):
            _write(os.path.join(args.out, f"game_{i:05d}.json"), dumps_game(g))
    print(f"generated {len(games)} game(s) with n={args.n}")
    if not args.cross_check:
        return EXIT_OK
    failures = 0
    regimes = {"symmetric-only": 0, "mixed": 0}
    for i, g in enumerate(games):
        report = cross_check(g, max_n=args.max_n)
        if not report.ok:
            failures += 1
            print(f"instance {i} failed: " + "; ".join(report.witnesses()))
        loops = report.consistent_graphs[0].self_loops if report.unique else []
        regimes["mixed" if any(0 < e < g.n for e in loops) else "symmetric-only"] += 1
    print(f"cross-check: {len(games) - failures}/{len(games)} passed "
          f"(symmetric-only {regimes['symmetric-only']}, mixed {regimes['mixed']})")
    return EXIT_OK if failures == 0 else EXIT_REFUSED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supergame",
        description="Solve and verify symmetric n-player prisoners' dilemma supergames.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("audit", help="check both structural properties of a game spec")
    p.add_argument("path")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("solve", help="compute the transition graph and equilibria")
    p.add_argument("path")
    p.add_argument("--dot", help="write a Graphviz diagram here")
    p.add_argument("--json", help="write a JSON report here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="cross-check the solver against exhaustive search")
    p.add_argument("path")
    p.add_argument("--max-n", type=int, default=MAX_N)
    p.add_argument("--graph", help="comma-separated lead vector to judge instead of the solver's")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simulate", help="play the supergame and report limit-of-means convergence")
    p.add_argument("path")
    p.add_argument("--rounds", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--initial", help="initial profile as a 0/1 string, one char per agent")
    p.add_argument("--trace", help="write the round-by-round trace as JSON lines here")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("generate", help="write random audited game specs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for the spec files")
    p.add_argument("--low", help="lowest grid value")
    p.add_argument("--high", help="highest grid value")
    p.add_argument("--resolution", default="1", help="grid step")
    p.add_argument("--max-n", type=int, default=MAX_N)
    p.add_argument("--cross-check", action="store_true",
                   help="run the oracle on every generated game")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rounds", 1) < 1:
        parser.error("--rounds must be >= 1")
    try:
        return args.func(args)
    except GameSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SearchTooLarge, InfeasibleRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
