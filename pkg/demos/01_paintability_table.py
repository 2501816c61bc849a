"""
Paintability of small complete multipartite graphs
==================================================

A graph K_{n1,...,nm} is r-paintable exactly when Remover wins the chip
game with threshold r on columns of n1, ..., nm chips.  We scan the
threshold upward until Remover wins.
"""

from chipgame.core import GameSpec
from chipgame.known import TABLE1, graph_name
from chipgame.solver import evaluate, paintability

# The smallest interesting case: four parts of size three.
# Pusher still wins at threshold 4, Remover wins at 5.
for gamma in (4, 5):
    result = evaluate(GameSpec(gamma, (3, 3, 3, 3)))
    print(f"threshold {gamma}: {result.value.value:12s} "
          f"{result.stats.nodes} nodes, {len(result.closures.winning)} winning and "
          f"{len(result.closures.losing)} losing states stored")

# Known families make good sanity checks.  Complete graphs K_m need m,
# and K_{2*n} needs n.
for sizes in [(1, 1, 1), (1, 1, 1, 1), (2, 2), (2, 2, 2), (2, 2, 3)]:
    print(f"{graph_name(sizes):14s} {paintability(sizes, low=1)}")

# K_{2,3} is a curious one: Painter gets away with two colours.
print(f"{graph_name((2, 3)):14s} {paintability((2, 3), low=1)}")

# The table of published bounds sits beside the computed value; only the
# first row is cheap enough to recompute here.
lower, known, upper = TABLE1[(3, 3, 3, 3)]
print(f"K_{{3*4}}: bounds {lower}..{upper}, computed {paintability((3, 3, 3, 3))}")
