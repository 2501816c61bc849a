"""
Online panchromatic colouring through the symmetric chip game
=============================================================

Presenter reveals vertices of a k-uniform hypergraph one at a time, each
in a chosen set of edges; Colorer colours it on the spot and wants every
edge to see all r colours.  Presenting a vertex in edges J is the same as
pushing labels J in every column of the symmetric chip game, and colouring
it i is removing column i.
"""

from chipgame.solver import Value
from chipgame.symmetric import (
    SymmetricSolver,
    pancolor_adapter,
    pol_bounds,
    random_colorer,
    random_pusher,
    symmetric_evaluate,
)

# Bounds on the least number of edges Presenter needs.
for k, r in [(1, 2), (3, 2), (2, 3), (5, 2)]:
    lo, hi = pol_bounds(k, r)
    print(f"k={k} r={r}: {lo} <= p <= {hi}")

# Smallest n where Presenter wins, two colours.
for k in (1, 2, 3):
    n = 1
    while symmetric_evaluate(k, n, 2) is Value.REMOVER_WINS:
        n += 1
    print(f"k={k}: Presenter first wins with {n} edges")

# Watch a winning Presenter at work.
solver = SymmetricSolver(2, 3, 2)
t = pancolor_adapter(2, 3, 2, solver.pusher_strategy, random_colorer(seed=4))
print("\n".join(t.lines()))

# And a winning Colorer.
solver = SymmetricSolver(2, 2, 2)
t = pancolor_adapter(2, 2, 2, random_pusher(seed=1), solver.remover_strategy)
print("\n".join(t.lines()))
