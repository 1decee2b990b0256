"""
Playing the supergame
=====================

One agent switches per round, drawn uniformly among those whose switch the
graph prescribes.  Running means converge to the payoffs of the absorbing
state, and the transient's weight shrinks like 1/rounds.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from supergame import Profile, StageGame, run, solve

game = StageGame.from_rows([6, 3, 1], [7, 5, "3/2"])
trace = run(game, solve(game), Profile.from_string("000"), 400, seed=2024)
print("states:", trace.states[:6], "absorbed at round", trace.absorbed_at)

# %%
payoffs = np.array([[float(p) for p in r.payoffs] for r in trace.rounds])
means = np.cumsum(payoffs, axis=0) / np.arange(1, len(payoffs) + 1)[:, None]

fig, ax = plt.subplots()
for i in range(game.n):
    ax.plot(means[:, i], label=f"agent {i}")
ax.set_xlabel("round")
ax.set_ylabel("running mean payoff")
ax.legend()
fig.savefig("running_means.png", dpi=100)
print("final means:", means[-1].round(4))
