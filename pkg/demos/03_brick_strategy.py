"""
The brick strategy for Pusher
=============================

With m equal columns Pusher groups chips into bricks whose size f(r)
depends on the row, and each round pushes the most advanced brick of every
column.  The column Remover picks loses its brick; every other column
keeps a full brick one row further on plus a fraction, and m-1 fractions
merge into a new brick.  So the brick count never drops, and a brick
eventually reaches the target.
"""

from chipgame.bricks import BrickBoard, brick_tables, exhaustive_brick_check, simulate_brick_game

for m in (2, 3, 4):
    cfg = brick_tables(m, 6)
    print(f"m={m}: f={cfg.f} g={cfg.g}")

# One game against a random Remover, with the round-by-round log.
res = simulate_brick_game(3, 2, "random", seed=11, keep_log=True)
cfg = brick_tables(3, 2)
print(f"\n{cfg.chips_per_column} chips per column, "
      f"{BrickBoard.initial(cfg).brick_count()} bricks at the start")
for line in res.log:
    print(" ", line)
print(res.outcome, "after", res.rounds, "rounds")

# And against every possible Remover.
for m, k in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (3, 3)]:
    ex = exhaustive_brick_check(m, k)
    print(f"(m={m}, k={k}) exhaustive: {ex.outcome}, {ex.positions} positions")

# With fewer chips than m(k+1)f(k) per column, things can go wrong.
for chips in (3, 6, 9):
    r = simulate_brick_game(3, 2, "greedy", chips=chips)
    print(f"{chips} chips per column against greedy: {r.outcome} {r.failure or ''}")
