"""
Checking the solver against exhaustive search
=============================================

The solver makes one backward pass.  The oracle instead scores every
candidate map b -> {b-1, b, b+1} and keeps the ones that are
self-consistent.  The two should agree on every audited game.
"""

import time
from collections import Counter

from supergame import cross_check, random_games

# %%
summary = Counter()
start = time.perf_counter()
for n in range(2, 8):
    for game in random_games(n, 200, seed=n):
        report = cross_check(game)
        summary["ok" if report.ok else "failed"] += 1
        loops = report.solver_graph.self_loops
        summary["mixed" if any(0 < e < n for e in loops) else "symmetric-only"] += 1
print(dict(summary), f"{time.perf_counter() - start:.1f} s")

# %%
# Outside the audited class the relation may be multi-valued.  Here the
# middle state profits in both directions, so two graphs survive.
from supergame import StageGame

odd = StageGame.from_rows([1, 0], [0, 1])
print([g.lead for g in cross_check(odd).consistent_graphs])

# %%
# A planted fault is caught with a concrete reason.
first = StageGame.from_rows([6, 3, 1], [7, 5, 4])
bad = cross_check(first).solver_graph.with_edge(0, 1)
for line in cross_check(first, bad).witnesses():
    print(line)
