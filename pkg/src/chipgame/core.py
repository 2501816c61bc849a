"""Chip game states, moves and the domination order.

A column is a tuple of the rows of its live chips, sorted descending.
Removed chips are not stored; comparisons pad with row -1 instead.
A board is a tuple of columns.  Canonical boards sort their columns
descending under tuple order, so a longer column precedes any of its
prefixes.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .matching import has_perfect_matching

Column = tuple
Board = tuple


class Player(enum.Enum):
    PUSHER = "Pusher"
    REMOVER = "Remover"


class Outcome(enum.Enum):
    PUSHER_WIN = "PusherWin"
    PUSHER_LOSS = "PusherLoss"
    ONGOING = "Ongoing"


@dataclass(frozen=True)
class GameSpec:
    """Target row ``threshold`` and the initial chip count of each column."""

    threshold: int
    column_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.column_sizes)
        object.__setattr__(self, "column_sizes", sizes)
        if self.threshold < 1:
            raise ValueError(f"threshold must be >= 1, got {self.threshold}")
        if not sizes:
            raise ValueError("a chip game needs at least one column")
        if any(n < 1 for n in sizes):
            raise ValueError(f"column sizes must be positive, got {sizes}")

    @property
    def num_columns(self):
        return len(self.column_sizes)

    @property
    def max_size(self):
        return max(self.column_sizes)

    @property
    def sizes_key(self):
        """Column sizes in canonical (descending) order."""
        return tuple(sorted(self.column_sizes, reverse=True))


@dataclass(frozen=True)
class PusherMove:
    """Chips pushed per column, as ``((row, count), ...)`` with rows ascending."""

    pushes: tuple

    def __post_init__(self):
        norm = []
        for col in self.pushes:
            items = col.items() if isinstance(col, Mapping) else col
            merged = {}
            for row, count in items:
                if count < 0:
                    raise ValueError("push counts must be non-negative")
                if count:
                    merged[int(row)] = merged.get(int(row), 0) + int(count)
            norm.append(tuple(sorted(merged.items())))
        object.__setattr__(self, "pushes", tuple(norm))

    @classmethod
    def from_counts(cls, counts: Sequence[Mapping[int, int]]):
        return cls(tuple(counts))

    @property
    def total(self):
        return sum(c for col in self.pushes for _, c in col)

    def column_total(self, index):
        return sum(c for _, c in self.pushes[index])

    def count(self, index, row):
        return dict(self.pushes[index]).get(row, 0)


@dataclass(frozen=True)
class GameState:
    board: tuple
    spec: GameSpec
    to_move: Player = Player.PUSHER
    pending: PusherMove | None = field(default=None)

    def __post_init__(self):
        board = tuple(tuple(sorted((int(r) for r in col), reverse=True)) for col in self.board)
        object.__setattr__(self, "board", board)
        if len(board) != self.spec.num_columns:
            raise ValueError(
                f"board has {len(board)} columns, spec has {self.spec.num_columns}")
        for col in board:
            if col and (col[-1] < 0 or col[0] > self.spec.threshold):
                raise ValueError(f"column {list(col)} has rows outside [0, {self.spec.threshold}]")
        if (self.pending is not None) != (self.to_move is Player.REMOVER):
            raise ValueError("pending must be present exactly when Remover is to move")
        if self.pending is not None:
            if len(self.pending.pushes) != len(board):
                raise ValueError("pending move does not match the board's columns")
            for col, pushed in zip(board, self.pending.pushes):
                for row, count in pushed:
                    if col.count(row + 1) < count:
                        raise ValueError("pending move exceeds the chips on the board")


def canonical_column(rows: Iterable[int]) -> Column:
    return tuple(sorted(rows, reverse=True))


def canonicalize(board: Iterable[Iterable[int]]) -> Board:
    """Sort rows within columns and columns within the board (both descending)."""
    return tuple(sorted((canonical_column(c) for c in board), reverse=True))


def initial_state(spec: GameSpec) -> GameState:
    board = canonicalize((0,) * n for n in spec.column_sizes)
    return GameState(board, spec)


def live_chips(board: Board) -> int:
    return sum(len(c) for c in board)


def top_row(board: Board) -> int:
    """Highest occupied row, or -1 for an empty board."""
    return max((c[0] for c in board if c), default=-1)


def terminal(state: GameState) -> Outcome:
    if state.to_move is not Player.PUSHER:
        raise ValueError("terminal() is defined only for Pusher-to-move states")
    return classify_board(state.board, state.spec.threshold)


def classify_board(board: Board, threshold: int) -> Outcome:
    if top_row(board) >= threshold:
        return Outcome.PUSHER_WIN
    if not any(board):
        return Outcome.PUSHER_LOSS
    return Outcome.ONGOING


# --- moves -----------------------------------------------------------------

def _row_counts(col: Column):
    """``[(row, count), ...]`` for a canonical column, rows ascending."""
    counts = {}
    for r in col:
        counts[r] = counts.get(r, 0) + 1
    return sorted(counts.items())


def _advance(col: Column, pattern) -> Column:
    pushed = dict(pattern)
    out = []
    for row, count in _row_counts(col):
        k = pushed.get(row, 0)
        out.extend([row + 1] * k)
        out.extend([row] * (count - k))
    return canonical_column(out)


def _reduce(col: Column, pattern) -> Column:
    pushed = dict(pattern)
    out = []
    for row, count in _row_counts(col):
        out.extend([row] * (count - pushed.get(row, 0)))
    return canonical_column(out)


@lru_cache(maxsize=None)
def column_patterns(col: Column, threshold: int):
    """All push patterns of one column, empty pattern first.

    Each entry is ``(pattern, advanced, reduced)``: the pattern as
    ``((row, count), ...)``, the column after the pushed chips moved up,
    and the column after they were removed.  Chips at rows >= threshold
    are never pushed.
    """
    groups = [(r, c) for r, c in _row_counts(col) if r < threshold]
    out = []
    for counts in itertools.product(*(range(c + 1) for _, c in groups)):
        pattern = tuple((r, k) for (r, _), k in zip(groups, counts) if k)
        out.append((pattern, _advance(col, pattern), _reduce(col, pattern)))
    out.sort(key=lambda e: (sum(k for _, k in e[0]) != 0, e[0]))
    return tuple(out)


def column_geq(a: Column, b: Column, sizes=None) -> bool:
    """Componentwise dominance of descending rows padded with -1.

    ``sizes`` optionally gives the initial chip counts of the two columns;
    the result does not depend on the padding length.
    """
    if sizes is not None and (len(a) > sizes[0] or len(b) > sizes[1]):
        raise ValueError("column holds more chips than its initial size")
    return _dominates(tuple(a), tuple(b))


@lru_cache(maxsize=1 << 16)
def _dominates(a, b):
    if len(a) < len(b):
        return False
    return all(x >= y for x, y in zip(a, b))


def columns_comparable(a: Column, b: Column) -> bool:
    return column_geq(a, b) or column_geq(b, a)


def board_geq(a: Board, b: Board) -> bool:
    """True iff some column pairing makes every column of ``a`` dominate its partner in ``b``."""
    if len(a) != len(b):
        raise ValueError(f"boards have {len(a)} and {len(b)} columns")
    adj = [[j for j, cb in enumerate(b) if _dominates(ca, cb)] for ca in a]
    return has_perfect_matching(adj, len(b))


def identical_column_groups(board: Board):
    """Positions of each distinct column, in order of first appearance."""
    groups = {}
    for i, col in enumerate(board):
        groups.setdefault(col, []).append(i)
    return list(groups.values())


def lemma_pruned(board: Board, move: PusherMove) -> bool:
    """True if two identical columns receive pushes whose results are comparable but unequal.

    Such a move is never better than the one that copies the dominating
    column's pushes onto the dominated one.
    """
    for positions in identical_column_groups(board):
        if len(positions) < 2:
            continue
        col = board[positions[0]]
        results = {_advance(col, move.pushes[i]) for i in positions}
        for x, y in itertools.combinations(results, 2):
            if columns_comparable(x, y):
                return True
    return False


def legal_pusher_moves(state: GameState, prune=False, reduce_symmetry=True):
    """Nonempty Pusher moves of an ongoing state.

    With ``reduce_symmetry`` identical columns receive a multiset of
    patterns, so moves that differ by swapping identical columns appear
    once.  With ``prune`` moves dominated by a same-column rearrangement
    are dropped as well.
    """
    if state.to_move is not Player.PUSHER:
        raise ValueError("Pusher is not to move")
    board = state.board
    threshold = state.spec.threshold
    n = len(board)
    if reduce_symmetry:
        groups = identical_column_groups(board)
    else:
        groups = [[i] for i in range(n)]
    per_group = []
    for positions in groups:
        patterns = [p for p, _, _ in column_patterns(board[positions[0]], threshold)]
        per_group.append(list(itertools.combinations_with_replacement(patterns, len(positions))))
    moves = []
    for choice in itertools.product(*per_group):
        pushes = [()] * n
        for positions, assigned in zip(groups, choice):
            for i, pat in zip(positions, assigned):
                pushes[i] = pat
        if not any(pushes):
            continue
        move = PusherMove(tuple(pushes))
        if prune and lemma_pruned(board, move):
            continue
        moves.append(move)
    return moves


def apply_pusher(state: GameState, move: PusherMove) -> GameState:
    if state.to_move is not Player.PUSHER:
        raise ValueError("Pusher is not to move")
    if len(move.pushes) != len(state.board):
        raise ValueError("move does not match the board's columns")
    if move.total == 0:
        raise ValueError("Pusher must push at least one chip")
    board = []
    for col, pattern in zip(state.board, move.pushes):
        for row, count in pattern:
            if col.count(row) < count:
                raise ValueError(f"cannot push {count} chips from row {row} of column {list(col)}")
        board.append(_advance(col, pattern))
    return GameState(tuple(board), state.spec, Player.REMOVER, move)


def apply_remover(state: GameState, column: int, canonical=True) -> GameState:
    """Remove the just-pushed chips of ``column`` (0-based)."""
    if state.to_move is not Player.REMOVER:
        raise ValueError("Remover is not to move")
    if not 0 <= column < len(state.board):
        raise ValueError(f"column index {column} out of range")
    board = list(state.board)
    lifted = tuple((row + 1, count) for row, count in state.pending.pushes[column])
    board[column] = _reduce(board[column], lifted)
    board = canonicalize(board) if canonical else tuple(board)
    return GameState(board, state.spec, Player.PUSHER, None)


def legal_remover_moves(state: GameState):
    if state.to_move is not Player.REMOVER:
        raise ValueError("Remover is not to move")
    return list(range(len(state.board)))


# --- keys and text encoding ----------------------------------------------

def state_key(state: GameState):
    if state.to_move is not Player.PUSHER:
        raise ValueError("only Pusher-to-move states have keys")
    return (state.spec.threshold, state.spec.sizes_key, canonicalize(state.board))


def encode_board(board: Board) -> str:
    return "[" + ",".join("[" + ",".join(map(str, c)) + "]" for c in canonicalize(board)) + "]"


def encode_state(state: GameState) -> str:
    sizes = ",".join(map(str, state.spec.sizes_key))
    return f"Γ={state.spec.threshold}; sizes={sizes}; board={encode_board(state.board)}"


_STATE_RE = re.compile(r"^Γ=(\d+); sizes=(\d+(?:,\d+)*); board=(\[.*\])$")
_BOARD_RE = re.compile(r"^\[(\[(?:\d+(?:,\d+)*)?\](?:,\[(?:\d+(?:,\d+)*)?\])*)?\]$")


def decode_board(text: str) -> Board:
    text = text.strip()
    if not _BOARD_RE.match(text):
        raise ValueError(f"malformed board encoding: {text!r}")
    cols = re.findall(r"\[([\d,]*)\]", text[1:-1])
    return tuple(tuple(int(x) for x in c.split(",") if x) for c in cols)


def decode_state(line: str) -> GameState:
    m = _STATE_RE.match(line.strip())
    if not m:
        raise ValueError(f"malformed state line: {line!r}")
    spec = GameSpec(int(m.group(1)), tuple(int(x) for x in m.group(2).split(",")))
    board = decode_board(m.group(3))
    return GameState(board, spec)
