"""
Solving the two three-player example games
==========================================

Both games share the cooperative row (6, 3, 1).  They differ only in the
all-defect payoff: 4 in the first, 3/2 in the second.  That single change
turns the upper-middle state [1] into an asymmetric equilibrium.
"""

from supergame import StageGame, equilibria, equilibrium_payoff_vector, solve
from supergame.report import to_dot

first = StageGame.from_rows([6, 3, 1], [7, 5, 4])
second = StageGame.from_rows([6, 3, 1], [7, 5, "3/2"])

# %%
# The transition graph maps each state to the state it leads to.
for name, game in (("first", first), ("second", second)):
    graph = solve(game)
    print(name, "lead:", dict(enumerate(graph.lead)))
    for e in equilibria(game, graph).equilibria:
        payoffs = ", ".join(str(p) for p in equilibrium_payoff_vector(game, e.state))
        print(f"  [{e.state}] {e.kind:10s} ({payoffs})")

# %%
# In the second game a cooperator at [1] who defects starts the run
# [2] -> [3] and ends at 3/2, so it stays put.  The lone defector already
# earns 7, so [1] is an equilibrium and [0] flows into it.
#
# Graphviz output; pipe it through ``dot -Tpng`` to draw the diagram.
print(to_dot(second, solve(second)))
