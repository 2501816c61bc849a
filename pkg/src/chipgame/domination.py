"""Sets of boards searchable by domination.

A ``BoardSet`` answers "is some member below this board" and "is some
member above this board" with an exact-key fast path followed by a
vectorised linear scan.  Each board is stored as a row of column ids;
a precomputed column-dominance table turns every comparison into array
lookups, and candidates are confirmed by perfect matching.
"""

import itertools
from functools import lru_cache

import numpy as np

from .core import GameSpec, canonicalize, column_geq
from .matching import has_perfect_matching

# boards with at most this many columns are matched by trying every pairing
PERM_LIMIT = 6


@lru_cache(maxsize=None)
def column_universe(threshold, max_size):
    """Every column with at most ``max_size`` chips on rows below ``threshold``."""
    cols = []
    for size in range(max_size + 1):
        for combo in itertools.combinations_with_replacement(range(threshold), size):
            cols.append(tuple(sorted(combo, reverse=True)))
    cols.sort(reverse=True)
    return tuple(cols)


@lru_cache(maxsize=None)
def dominance_table(threshold, max_size):
    """``table[i, j]`` is True iff universe column ``i`` dominates column ``j``."""
    universe = column_universe(threshold, max_size)
    table = np.array([[column_geq(a, b) for b in universe] for a in universe], dtype=bool)
    return table.reshape(len(universe), len(universe))


@lru_cache(maxsize=None)
def _perms(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def matchable(rel):
    """Indices ``c`` whose relation ``rel[c]`` (an n-by-n boolean) has a perfect matching."""
    if not len(rel):
        return np.zeros(0, dtype=np.intp)
    n = rel.shape[1]
    if n <= PERM_LIMIT:
        perms = _perms(n)
        ok = rel[:, perms, np.arange(n)].all(axis=2).any(axis=1)
        return np.flatnonzero(ok)
    hits = []
    for c in range(len(rel)):
        adj = [np.flatnonzero(rel[c, i]).tolist() for i in range(n)]
        if has_perfect_matching(adj, n):
            hits.append(c)
    return np.array(hits, dtype=np.intp)


class BoardSet:
    """Canonical boards of one game, in insertion order.

    Boards that are terminal (a chip at the threshold, or no chips)
    are kept for membership but not scanned; callers classify those
    directly.
    """

    def __init__(self, spec: GameSpec):
        self.spec = spec
        self.universe = column_universe(spec.threshold, spec.max_size)
        self.col_id = {c: i for i, c in enumerate(self.universe)}
        self.dom = dominance_table(spec.threshold, spec.max_size)
        self.n_cols = spec.num_columns
        self.members = {}
        self._rows = np.zeros((64, self.n_cols), dtype=np.int32)
        self._indexed = []
        self._size = 0

    def __len__(self):
        return len(self.members)

    def __contains__(self, board):
        return board in self.members

    def __iter__(self):
        return iter(self.members)

    def _ids(self, board):
        ids = [self.col_id.get(c) for c in board]
        return None if None in ids else ids

    def add(self, board):
        board = canonicalize(board)
        if board in self.members:
            return
        self.members[board] = None
        ids = self._ids(board) if len(board) == self.n_cols and any(board) else None
        if ids is None:
            return
        if self._size == len(self._rows):
            self._rows = np.concatenate([self._rows, np.zeros_like(self._rows)])
        self._rows[self._size] = ids
        self._indexed.append(board)
        self._size += 1

    def discard_comparable(self, board, below):
        """Drop indexed members below (or above) ``board``; return how many went."""
        ids = self._ids(board)
        if ids is None or not self._size:
            return 0
        mask = np.zeros(self._size, dtype=bool)
        mask[matchable(self._relation(ids, self._rows[: self._size], below))] = True
        if not mask.any():
            return 0
        for i in np.flatnonzero(mask):
            del self.members[self._indexed[i]]
        keep = ~mask
        kept = self._rows[: self._size][keep]
        self._rows[: len(kept)] = kept
        self._indexed = [b for b, k in zip(self._indexed, keep) if k]
        self._size = len(kept)
        return int(mask.sum())

    def _relation(self, ids, stored, below):
        q = np.asarray(ids)
        if below:
            # rel[c, i, j]: query column i dominates stored column j
            return self.dom[q][:, stored].transpose(1, 0, 2)
        # rel[c, i, j]: stored column i dominates query column j
        return self.dom[stored][:, :, q]

    def _find(self, board, below):
        if board in self.members:
            return board
        ids = self._ids(board)
        if ids is None or not self._size:
            return None
        stored = self._rows[: self._size]
        q = np.asarray(ids)
        if below:
            reach = self.dom[q].any(axis=0)
        else:
            reach = self.dom[:, q].any(axis=1)
        ok = np.flatnonzero(reach[stored].all(axis=1))
        if not len(ok):
            return None
        rel = self._relation(ids, stored[ok], below)
        cover = rel.any(axis=2).all(axis=1) & rel.any(axis=1).all(axis=1)
        ok, rel = ok[cover], rel[cover]
        hits = matchable(rel)
        return self._indexed[ok[hits[0]]] if len(hits) else None

    def find_below(self, board):
        """A member ``m`` with ``board >= m``, or None."""
        return self._find(canonicalize(board), below=True)

    def find_above(self, board):
        """A member ``m`` with ``m >= board``, or None."""
        return self._find(canonicalize(board), below=False)
