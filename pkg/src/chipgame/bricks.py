"""Brick strategy for Pusher in the chip game with ``m`` equal columns.

Rows here count down: chips start on row ``k`` and Pusher wins by getting
one to row 0.  A brick on row ``r`` is ``f(r)`` chips; a fraction brick
is ``g(r) = ceil(f(r) / (m - 1))`` chips.  Each turn Pusher pushes, in
every column, the full brick closest to row 0.  A pushed brick arrives
one row lower as a full brick plus a fraction; ``m - 1`` fractions in
the same place merge into a full brick and surplus chips are dropped
from the bookkeeping.  Game-core rows are ``k - r``, with threshold ``k``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .core import GameSpec, GameState, Outcome, PusherMove, apply_pusher, apply_remover, terminal


@dataclass(frozen=True)
class BrickConfig:
    m: int
    k: int
    f: tuple
    g: tuple

    @property
    def chips_per_column(self):
        return self.m * (self.k + 1) * self.f[self.k]


def claim_bound(m, k):
    """``sum_{j<=k} (m/(m-1))**j`` as an exact fraction."""
    ratio = Fraction(m, m - 1)
    return sum(ratio ** j for j in range(k + 1))


def brick_tables(m, k) -> BrickConfig:
    if m < 2:
        raise ValueError(f"need at least 2 columns, got {m}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    f = [1]
    g = [-(-1 // (m - 1))]
    for _ in range(k):
        f.append(f[-1] + g[-1])
        g.append(-(-f[-1] // (m - 1)))
    ratio = Fraction(m, m - 1)
    for r in range(k + 1):
        if not f[r] <= claim_bound(m, r) < m * ratio ** r:
            raise AssertionError(f"brick size f({r})={f[r]} breaks the growth bound for m={m}")
    return BrickConfig(m, k, tuple(f), tuple(g))


class StrategyInapplicable(RuntimeError):
    """Some column has no full brick left to push."""

    def __init__(self, message, board):
        super().__init__(message)
        self.board = board


@dataclass
class BrickBoard:
    """Full bricks and fraction bricks per column, keyed by row."""

    cfg: BrickConfig
    full: list
    frac: list
    spilled: int = 0

    @classmethod
    def initial(cls, cfg: BrickConfig, chips=None):
        chips = cfg.chips_per_column if chips is None else chips
        bricks = chips // cfg.f[cfg.k]
        full = [Counter({cfg.k: bricks}) if bricks else Counter() for _ in range(cfg.m)]
        frac = [Counter() for _ in range(cfg.m)]
        spilled = cfg.m * (chips - bricks * cfg.f[cfg.k])
        return cls(cfg, full, frac, spilled)

    def copy(self):
        return BrickBoard(self.cfg, [Counter(c) for c in self.full],
                          [Counter(c) for c in self.frac], self.spilled)

    def key(self):
        cols = sorted(
            (tuple(sorted((r, n) for r, n in full.items() if n)),
             tuple(sorted((r, n) for r, n in frac.items() if n)))
            for full, frac in zip(self.full, self.frac))
        return tuple(cols)

    def lead_row(self, column):
        """Row of the full brick nearest row 0, or None."""
        rows = [r for r, n in self.full[column].items() if n]
        return min(rows) if rows else None

    def row_bricks(self, column, row):
        return self.full[column][row] + Fraction(self.frac[column][row], self.cfg.m - 1)

    def brick_count(self):
        return sum(self.row_bricks(c, r) for c in range(self.cfg.m)
                   for r in set(self.full[c]) | set(self.frac[c]))

    def chips_at(self, column, row):
        return self.full[column][row] * self.cfg.f[row] + self.frac[column][row] * self.cfg.g[row]

    def pusher_won(self):
        return any(self.full[c][0] or self.frac[c][0] for c in range(self.cfg.m))

    def shape_violations(self):
        """Columns breaking the brick-position claim, with a reason each."""
        out = []
        k = self.cfg.k
        for c in range(self.cfg.m):
            lead = self.lead_row(c)
            if lead is None or lead == k:
                continue
            if self.row_bricks(c, lead) > 2:
                out.append((c, f"row {lead} holds {self.row_bricks(c, lead)} bricks"))
            for row in range(lead + 1, k):
                if self.row_bricks(c, row) > 1:
                    out.append((c, f"row {row} holds {self.row_bricks(c, row)} bricks"))
        return out


def brick_pusher_move(board: BrickBoard, cfg: BrickConfig | None = None) -> PusherMove:
    """Push the lead full brick of every column (game-core rows)."""
    cfg = cfg or board.cfg
    pushes = []
    for c in range(cfg.m):
        lead = board.lead_row(c)
        if lead is None:
            raise StrategyInapplicable(f"column {c} has no full brick", board.copy())
        pushes.append({cfg.k - lead: cfg.f[lead]})
    return PusherMove.from_counts(pushes)


def advance_bricks(board: BrickBoard, removed: int) -> BrickBoard:
    """Brick bookkeeping for one round in which ``removed`` was the removed column."""
    cfg = board.cfg
    out = board.copy()
    for c in range(cfg.m):
        lead = board.lead_row(c)
        if lead is None:
            raise StrategyInapplicable(f"column {c} has no full brick", board.copy())
        out.full[c][lead] -= 1
        if c == removed:
            continue
        row = lead - 1
        out.full[c][row] += 1
        out.frac[c][row] += 1
        while out.frac[c][row] >= cfg.m - 1:
            out.frac[c][row] -= cfg.m - 1
            out.full[c][row] += 1
            out.spilled += (cfg.m - 1) * cfg.g[row] - cfg.f[row]
    return out


# --- Remover policies ----------------------------------------------------
# A policy sees the Remover-to-move game state (columns in fixed order)
# and returns a 0-based column.

def uniform_random(seed=None):
    rng = random.Random(seed)
    return lambda state: rng.randrange(len(state.board))


def greedy_most_advanced(state: GameState):
    """Remove the column whose pushed chips are highest, most chips breaking ties."""
    best, best_key = 0, None
    for c, pushed in enumerate(state.pending.pushes):
        key = (max((r for r, _ in pushed), default=-1), sum(n for _, n in pushed))
        if best_key is None or key > best_key:
            best, best_key = c, key
    return best


def round_robin():
    turn = [0]

    def choose(state):
        c = turn[0] % len(state.board)
        turn[0] += 1
        return c

    return choose


POLICIES = {
    "random": uniform_random,
    "greedy": lambda seed=None: greedy_most_advanced,
    "round-robin": lambda seed=None: round_robin(),
}


# --- simulation ------------------------------------------------------------

@dataclass
class SimulationResult:
    outcome: str
    rounds: int
    initial_bricks: Fraction
    min_bricks: Fraction
    spilled: int
    failure_round: int | None = None
    failure: str | None = None
    log: list = field(default_factory=list)


def _check_round(board, real, previous_bricks, initial_bricks):
    """Reason the brick invariants fail after a round, or None."""
    count = board.brick_count()
    if count < previous_bricks or count < initial_bricks:
        return f"brick count fell to {count}"
    violations = board.shape_violations()
    if violations:
        return "; ".join(f"column {c}: {why}" for c, why in violations)
    cfg = board.cfg
    for c in range(cfg.m):
        for row in set(board.full[c]) | set(board.frac[c]):
            have = real.board[c].count(cfg.k - row)
            if have < board.chips_at(c, row):
                return f"column {c} row {row} tracks more chips than the board holds"
    return None


def simulate_brick_game(m, k, remover, chips=None, seed=None, keep_log=False) -> SimulationResult:
    """Play the brick strategy against ``remover`` until the game ends.

    ``remover`` is a policy callable or one of ``POLICIES``.  The brick
    invariants are checked after every round; any breach, or Pusher
    running out of full bricks, ends the game as a strategy failure.
    """
    cfg = brick_tables(m, k)
    if isinstance(remover, str):
        remover = POLICIES[remover](seed)
    chips = cfg.chips_per_column if chips is None else chips
    spec = GameSpec(max(k, 1), (chips,) * m)
    real = GameState(tuple((0,) * chips for _ in range(m)), spec)
    board = BrickBoard.initial(cfg, chips)
    initial = board.brick_count()
    lowest = initial
    result = SimulationResult("Ongoing", 0, initial, initial, board.spilled)
    if k == 0:
        result.outcome = "PusherWin"
        return result
    while terminal(real) is Outcome.ONGOING:
        result.rounds += 1
        try:
            move = brick_pusher_move(board, cfg)
        except StrategyInapplicable as exc:
            result.outcome, result.failure_round, result.failure = "StrategyFailure", result.rounds, str(exc)
            return result
        pending = apply_pusher(real, move)
        column = remover(pending)
        real = apply_remover(pending, column, canonical=False)
        previous = board.brick_count()
        board = advance_bricks(board, column)
        if keep_log:
            result.log.append(f"round {result.rounds}: removed column {column + 1}; "
                              f"bricks {board.brick_count()}")
        why = _check_round(board, real, previous, initial)
        if why:
            result.outcome, result.failure_round, result.failure = "StrategyFailure", result.rounds, why
            return result
        lowest = min(lowest, board.brick_count())
        if board.pusher_won() and terminal(real) is not Outcome.PUSHER_WIN:
            result.outcome, result.failure_round = "StrategyFailure", result.rounds
            result.failure = "bricks reached row 0 but the board shows no win"
            return result
    result.min_bricks = lowest
    result.spilled = board.spilled
    result.outcome = "PusherWin" if terminal(real) is Outcome.PUSHER_WIN else "StrategyFailure"
    if result.outcome == "StrategyFailure":
        result.failure_round, result.failure = result.rounds, "all chips were removed"
    return result


@dataclass
class ExhaustiveResult:
    outcome: str
    positions: int
    max_rounds: int
    failure: str | None = None


def exhaustive_brick_check(m, k, chips=None) -> ExhaustiveResult:
    """Follow the brick strategy against every Remover line of play.

    Positions are merged up to column permutation; chips dropped from the
    bookkeeping never move, so the brick board decides the rest of the game.
    """
    cfg = brick_tables(m, k)
    board = BrickBoard.initial(cfg, chips)
    initial = board.brick_count()
    seen = set()
    deepest = 0
    if k == 0:
        return ExhaustiveResult("PusherWin", 1, 0)
    stack = [(board, 0)]
    while stack:
        board, depth = stack.pop()
        deepest = max(deepest, depth)
        key = board.key()
        if key in seen:
            continue
        seen.add(key)
        if board.pusher_won():
            continue
        if any(board.lead_row(c) is None for c in range(m)):
            return ExhaustiveResult("StrategyFailure", len(seen), deepest,
                                    f"a column ran out of full bricks after {depth} rounds")
        previous = board.brick_count()
        tried = set()
        for column in range(m):
            sig = (tuple(sorted(board.full[column].items())), tuple(sorted(board.frac[column].items())))
            if sig in tried:
                continue
            tried.add(sig)
            nxt = advance_bricks(board, column)
            count = nxt.brick_count()
            if count < previous or count < initial:
                return ExhaustiveResult("StrategyFailure", len(seen), deepest,
                                        f"brick count fell to {count}")
            bad = nxt.shape_violations()
            if bad:
                return ExhaustiveResult("StrategyFailure", len(seen), deepest, str(bad))
            stack.append((nxt, depth + 1))
    return ExhaustiveResult("PusherWin", len(seen), deepest)
