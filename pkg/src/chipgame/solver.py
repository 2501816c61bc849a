"""Exact minimax for chip games with domination lookups and move pruning.

Only Pusher-to-move canonical boards are memoised.  A board is winning
(``True``) when Pusher can force a chip to the threshold row.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    GameSpec,
    GameState,
    Player,
    PusherMove,
    apply_pusher,
    apply_remover,
    board_geq,
    canonicalize,
    column_patterns,
    columns_comparable,
    initial_state,
    lemma_pruned,
    state_key,
    top_row,
)
from .domination import BoardSet


class Value(enum.Enum):
    PUSHER_WINS = "PusherWins"
    REMOVER_WINS = "RemoverWins"


class Classification(enum.Enum):
    WINNING = "Winning"
    LOSING = "Losing"
    UNKNOWN = "Unknown"


class Inconclusive(RuntimeError):
    """The search hit a node or state budget before reaching a verdict."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


class PaintabilityRangeError(RuntimeError):
    def __init__(self, message, evaluated):
        super().__init__(message)
        self.evaluated = evaluated


@dataclass
class SolverConfig:
    prune_pusher: bool = True
    prune_remover: bool = True
    use_domination: bool = True
    compact: bool = False
    node_budget: int | None = None
    state_budget: int | None = None


@dataclass
class SolveStats:
    nodes: int = 0
    memo_hits: int = 0
    dominated_wins: int = 0
    dominated_losses: int = 0
    pusher_moves_pruned: int = 0
    remover_moves_pruned: int = 0
    seconds: float = 0.0

    def as_dict(self):
        return dict(self.__dict__)


class ClosureStore:
    """Resolved Pusher-to-move boards of one game, split into winning and losing.

    With ``compact`` only minimal winning and maximal losing boards are
    kept, since the others follow from them by domination.
    """

    def __init__(self, spec: GameSpec, compact=False):
        self.spec = spec
        self.compact = compact
        self._sets = {True: BoardSet(spec), False: BoardSet(spec)}

    @property
    def winning(self):
        return self._sets[True]

    @property
    def losing(self):
        return self._sets[False]

    def __len__(self):
        return len(self.winning) + len(self.losing)

    def add(self, board, winning: bool):
        board = canonicalize(board)
        if board in self._sets[not winning]:
            raise ValueError(f"board {board} already stored with the opposite value")
        target = self._sets[winning]
        if board in target:
            return
        if self.compact:
            if (target.find_below(board) if winning else target.find_above(board)) is not None:
                return
            target.discard_comparable(board, below=not winning)
        target.add(board)

    def pin(self, board, winning: bool):
        """Store ``board`` even if compaction would skip it."""
        self._sets[winning].add(canonicalize(board))

    def lookup(self, board, use_domination=True):
        """``True``/``False`` if the board's value follows from the store, else ``None``."""
        if board in self.winning:
            return True
        if board in self.losing:
            return False
        if not use_domination:
            return None
        if self.winning.find_below(board) is not None:
            return True
        if self.losing.find_above(board) is not None:
            return False
        return None

    def states(self, winning: bool):
        return list(self._sets[winning])


def classify_by_closure(state: GameState, store: ClosureStore) -> Classification:
    if state.to_move is not Player.PUSHER:
        raise ValueError("closures hold Pusher-to-move states only")
    board = canonicalize(state.board)
    if board in store.winning:
        return Classification.WINNING
    if board in store.losing:
        return Classification.LOSING
    if any(board_geq(board, w) for w in store.winning):
        return Classification.WINNING
    if any(board_geq(l, board) for l in store.losing):
        return Classification.LOSING
    return Classification.UNKNOWN


# --- pruning on public move objects ------------------------------------

def prune_pusher_moves(state: GameState, moves):
    """Drop moves giving two identical columns comparable, unequal results."""
    if state.to_move is not Player.PUSHER:
        raise ValueError("Pusher is not to move")
    return [m for m in moves if not lemma_pruned(state.board, m)]


def prune_remover_moves(state: GameState, moves):
    """Drop removals whose result dominates another removal's result.

    Among removals with equal results the first is kept.
    """
    if state.to_move is not Player.REMOVER:
        raise ValueError("Remover is not to move")
    moves = list(moves)
    children = [canonicalize(apply_remover(state, m).board) for m in moves]
    keep = []
    for i, ci in enumerate(children):
        drop = False
        for j, cj in enumerate(children):
            if i == j:
                continue
            if ci == cj:
                if j < i:
                    drop = True
                    break
            elif board_geq(ci, cj):
                drop = True
                break
        if not drop:
            keep.append(moves[i])
    return keep


# --- the search ----------------------------------------------------------

@lru_cache(maxsize=None)
def _group_options(col, count, threshold, prune):
    """Pattern multisets for ``count`` identical columns.

    Each option is a tuple of ``(pattern, advanced, reduced)`` entries.
    With ``prune`` any option with comparable, unequal results is dropped.
    """
    entries = column_patterns(col, threshold)
    options = []
    for combo in itertools.combinations_with_replacement(entries, count):
        if prune and count > 1:
            results = {e[1] for e in combo}
            if any(columns_comparable(x, y) for x, y in itertools.combinations(results, 2)):
                continue
        options.append(combo)
    return tuple(options)


def _pushed(pattern):
    return sum(k for _, k in pattern)


class Solver:
    """Depth-first minimax over one game with a shared closure store."""

    def __init__(self, spec: GameSpec, config: SolverConfig | None = None):
        self.spec = spec
        self.config = config or SolverConfig()
        self.store = ClosureStore(spec, compact=self.config.compact)
        self.stats = SolveStats()
        self._memo = {}

    # moves as (total pushed, [(pattern, adv, red), ...] per column)
    def _moves(self, board):
        threshold = self.spec.threshold
        prune = self.config.prune_pusher
        groups = [(col, len(list(run))) for col, run in itertools.groupby(board)]
        per_group = [_group_options(col, n, threshold, prune) for col, n in groups]
        if prune:
            full = 1
            for col, n in groups:
                full *= len(_group_options(col, n, threshold, False))
        moves = []
        for choice in itertools.product(*per_group):
            flat = [e for option in choice for e in option]
            total = sum(_pushed(e[0]) for e in flat)
            if total:
                moves.append((total, flat))
        if prune:
            self.stats.pusher_moves_pruned += full - 1 - len(moves)
        moves.sort(key=lambda m: -m[0])
        return moves

    def _children(self, flat):
        """Boards Remover can leave, or ``None`` if Pusher wins against every removal."""
        threshold = self.spec.threshold
        advs = [e[1] for e in flat]
        hot = [j for j, e in enumerate(flat) if e[0] and e[1][0] >= threshold]
        if len(hot) >= 2:
            return None
        if hot:
            candidates = hot
        elif self.config.prune_remover:
            # removing an untouched column leaves a board dominating the others
            candidates = [j for j, e in enumerate(flat) if e[0]]
        else:
            candidates = range(len(flat))
        seen = set()
        children = []
        for i in candidates:
            key = (flat[i][0], advs[i])
            if key in seen:
                continue
            seen.add(key)
            child = list(advs)
            child[i] = flat[i][2]
            children.append((_pushed(flat[i][0]), canonicalize(child)))
        children.sort(key=lambda c: -c[0])
        boards = [c[1] for c in children]
        if self.config.prune_remover and len(boards) > 1:
            boards = self._prune_children(boards)
        return boards

    def _prune_children(self, boards):
        def sig(b):
            return (sum(len(c) for c in b), sum(r + 1 for c in b for r in c))

        sigs = [sig(b) for b in boards]
        keep = []
        for i, bi in enumerate(boards):
            drop = False
            for j, bj in enumerate(boards):
                if i == j:
                    continue
                if sigs[i][0] < sigs[j][0] or sigs[i][1] < sigs[j][1]:
                    continue
                if bi == bj:
                    drop = j < i
                elif board_geq(bi, bj):
                    drop = True
                if drop:
                    break
            if drop:
                self.stats.remover_moves_pruned += 1
            else:
                keep.append(bi)
        return keep

    def value(self, board) -> bool:
        """Value of a canonical Pusher-to-move board."""
        threshold = self.spec.threshold
        if top_row(board) >= threshold:
            return True
        if not any(board):
            return False
        hit = self._memo.get(board)
        if hit is not None:
            self.stats.memo_hits += 1
            return hit
        if self.config.use_domination:
            known = self.store.lookup(board)
            if known is not None:
                if known:
                    self.stats.dominated_wins += 1
                else:
                    self.stats.dominated_losses += 1
                self._record(board, known)
                return known
        self.stats.nodes += 1
        budget = self.config.node_budget
        if budget is not None and self.stats.nodes > budget:
            raise Inconclusive(f"node budget {budget} exhausted", self.stats)
        result = False
        for _, flat in self._moves(board):
            children = self._children(flat)
            if children is None or all(self.value(c) for c in children):
                result = True
                break
        self._record(board, result)
        return result

    def _record(self, board, result):
        if not self.config.compact:
            self._memo[board] = result
        self.store.add(board, result)
        limit = self.config.state_budget
        if limit is not None and len(self.store) > limit:
            raise Inconclusive(f"state budget {limit} exhausted", self.stats)


@dataclass
class SolveResult:
    value: Value
    closures: ClosureStore
    stats: SolveStats = field(default_factory=SolveStats)
    initial_board: tuple = ()


def evaluate(spec: GameSpec, config: SolverConfig | None = None) -> SolveResult:
    """Solve the chip game from its initial state.

    Raises ``Inconclusive`` when a budget in ``config`` runs out.
    """
    solver = Solver(spec, config)
    start = time.perf_counter()
    board = initial_state(spec).board
    try:
        won = solver.value(board)
    finally:
        solver.stats.seconds = time.perf_counter() - start
    value = Value.PUSHER_WINS if won else Value.REMOVER_WINS
    solver.store.pin(board, won)
    return SolveResult(value, solver.store, solver.stats, board)


def evaluate_state(state: GameState, config: SolverConfig | None = None) -> bool:
    """True iff Pusher wins from a Pusher-to-move state."""
    if state.to_move is not Player.PUSHER:
        raise ValueError("evaluate_state expects Pusher to move")
    return Solver(state.spec, config).value(canonicalize(state.board))


def default_bounds(column_sizes):
    """Search range for paintability: number of parts up to a known upper bound."""
    sizes = list(column_sizes)
    low = len(sizes)
    if all(n == 3 for n in sizes):
        high = max(low, (3 * len(sizes)) // 2)
    elif all(n in (2, 3) for n in sizes):
        high = len(sizes) + sizes.count(3)
    else:
        high = sum(sizes)
    return low, high


def paintability(column_sizes, low=None, high=None, config=None, on_result=None):
    """Smallest threshold at which Remover wins the chip game.

    Thresholds are tried upward from ``low``; Pusher winning at a
    threshold implies winning at every smaller one.
    """
    d_low, d_high = default_bounds(column_sizes)
    low = d_low if low is None else low
    high = d_high if high is None else high
    if low > high:
        raise ValueError(f"empty threshold range [{low}, {high}]")
    evaluated = {}
    for gamma in range(max(1, low), high + 1):
        result = evaluate(GameSpec(gamma, tuple(column_sizes)), config)
        evaluated[gamma] = result.value
        if on_result is not None:
            on_result(gamma, result)
        if result.value is Value.REMOVER_WINS:
            return gamma
    raise PaintabilityRangeError(
        f"Pusher still wins at threshold {high}; paintability exceeds the range", evaluated)


def winning_pusher_move(solver: Solver, state: GameState):
    """A Pusher move from ``state`` after which every removal stays winning, or None."""
    for move in _ordered_moves(state):
        after = apply_pusher(state, move)
        if all(solver.value(canonicalize(apply_remover(after, c).board))
               for c in range(len(state.board))):
            return move
    return None


def refuting_removal(solver: Solver, state: GameState):
    """A column whose removal leaves Pusher losing, or None."""
    for c in range(len(state.board)):
        if not solver.value(canonicalize(apply_remover(state, c).board)):
            return c
    return None


def _ordered_moves(state):
    from .core import legal_pusher_moves

    moves = legal_pusher_moves(state)
    return sorted(moves, key=lambda m: -m.total)


__all__ = [
    "ClosureStore",
    "Classification",
    "Inconclusive",
    "PaintabilityRangeError",
    "SolveResult",
    "SolveStats",
    "Solver",
    "SolverConfig",
    "Value",
    "classify_by_closure",
    "evaluate",
    "evaluate_state",
    "paintability",
    "prune_pusher_moves",
    "prune_remover_moves",
    "state_key",
]
