"""The symmetric chip game and its on-line panchromatic colouring counterpart.

In the symmetric ``(k, n * r)`` game every column holds chips labelled
``1..n`` and Pusher picks a set of labels, pushing that label's chip in
every column where it survives.  All surviving chips of one label
therefore share a row, so a state is, per label, a row and the set of
columns still holding that label's chip.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .solver import Inconclusive, Value


@dataclass(frozen=True)
class SymmetricState:
    """Rows and surviving columns (0-based) per label; labels are 1-based positions."""

    k: int
    r: int
    rows: tuple
    live: tuple

    @classmethod
    def initial(cls, k, n, r):
        if k < 1 or n < 1 or r < 1:
            raise ValueError("k, n and r must be positive")
        return cls(k, r, (0,) * n, (frozenset(range(r)),) * n)

    @property
    def n(self):
        return len(self.rows)

    def live_labels(self):
        return [j + 1 for j, cols in enumerate(self.live) if cols]

    def outcome(self):
        if any(cols and row >= self.k for row, cols in zip(self.rows, self.live)):
            return "PusherWin"
        if not any(self.live):
            return "PusherLoss"
        return "Ongoing"

    def check_push(self, labels):
        labels = frozenset(labels)
        if not labels:
            raise ValueError("Pusher must push at least one label")
        for j in labels:
            if not 1 <= j <= self.n:
                raise ValueError(f"label {j} does not exist")
            if not self.live[j - 1]:
                raise ValueError(f"label {j} has no chips left")
        return labels

    def play(self, labels, column):
        """One round: push ``labels`` everywhere, then remove them from ``column``."""
        labels = self.check_push(labels)
        if not 0 <= column < self.r:
            raise ValueError(f"column {column} out of range")
        rows = list(self.rows)
        live = list(self.live)
        for j in labels:
            rows[j - 1] += 1
            live[j - 1] = live[j - 1] - {column}
        return SymmetricState(self.k, self.r, tuple(rows), tuple(live))

    def key(self):
        """Canonical form up to relabelling chips and permuting columns."""
        best = None
        for perm in itertools.permutations(range(self.r)):
            form = tuple(sorted(
                (row, tuple(sorted(perm[c] for c in cols)))
                for row, cols in zip(self.rows, self.live) if cols))
            if best is None or form < best:
                best = form
        return best


def symmetric_pusher_moves(state: SymmetricState):
    """Label sets up to interchanging labels with the same row and columns."""
    classes = {}
    for j in state.live_labels():
        classes.setdefault((state.rows[j - 1], state.live[j - 1]), []).append(j)
    groups = list(classes.values())
    moves = []
    for counts in itertools.product(*(range(len(g) + 1) for g in groups)):
        labels = frozenset(j for g, c in zip(groups, counts) for j in g[:c])
        if labels:
            moves.append(labels)
    moves.sort(key=lambda s: (-len(s), sorted(s)))
    return moves


class SymmetricSolver:
    def __init__(self, k, n, r, node_budget=None):
        self.k, self.n, self.r = k, n, r
        self.node_budget = node_budget
        self.nodes = 0
        self._memo = {}

    def value(self, state: SymmetricState) -> bool:
        """True iff Pusher wins from ``state``."""
        outcome = state.outcome()
        if outcome != "Ongoing":
            return outcome == "PusherWin"
        key = state.key()
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise Inconclusive(f"node budget {self.node_budget} exhausted")
        result = any(
            all(self.value(state.play(labels, c)) for c in range(state.r))
            for labels in symmetric_pusher_moves(state))
        self._memo[key] = result
        return result

    def pusher_strategy(self, state: SymmetricState):
        """A winning label set if one exists, else any legal one."""
        moves = symmetric_pusher_moves(state)
        for labels in moves:
            if all(self.value(state.play(labels, c)) for c in range(state.r)):
                return labels
        return moves[0]

    def remover_strategy(self, state: SymmetricState, labels):
        """A column whose removal leaves Pusher losing if one exists, else column 0."""
        for c in range(state.r):
            if not self.value(state.play(labels, c)):
                return c
        return 0


def symmetric_evaluate(k, n, r, node_budget=None) -> Value:
    solver = SymmetricSolver(k, n, r, node_budget)
    won = solver.value(SymmetricState.initial(k, n, r))
    return Value.PUSHER_WINS if won else Value.REMOVER_WINS


def pol_bounds(k, r):
    """Exact lower and upper bounds on the on-line panchromatic number.

    ``(r/(r-1))**(k-1) <= p_OL(k, r) <= r**3 * (k+1) * (r/(r-1))**k``.
    """
    if r < 2:
        raise ValueError(f"need at least 2 colours, got {r}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    ratio = Fraction(r, r - 1)
    return ratio ** (k - 1), r ** 3 * (k + 1) * ratio ** k


# --- random strategies for the symmetric game ---------------------------

def random_pusher(seed=None):
    rng = random.Random(seed)

    def choose(state):
        live = state.live_labels()
        size = rng.randint(1, len(live))
        return frozenset(rng.sample(live, size))

    return choose


def random_colorer(seed=None):
    rng = random.Random(seed)

    def choose(state, labels):
        return rng.randrange(state.r)

    return choose


# --- the pancolouring game driven by chip-game strategies ----------------

@dataclass
class PancolorRound:
    vertex: int
    edges: tuple
    colour: int
    chip_state: SymmetricState

    def line(self):
        edges = ",".join(f"e{j}" for j in self.edges)
        return f"v{self.vertex} in {{{edges}}} coloured {self.colour + 1}"


@dataclass
class Transcript:
    k: int
    n: int
    r: int
    rounds: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    colours: dict = field(default_factory=dict)
    chip_outcome: str = "Ongoing"
    winner: str | None = None
    error: str | None = None

    def missing_colours(self, j):
        present = {self.colours[v] for v in self.edges[j - 1]}
        return sorted(set(range(self.r)) - present)

    def lines(self):
        out = [f"pancolor k={self.k} n={self.n} r={self.r}"]
        for i, rnd in enumerate(self.rounds, start=1):
            out.append(f"round {i}: {rnd.line()}")
        if self.error:
            out.append(f"error: {self.error}")
        out.append(f"chip game: {self.chip_outcome}; winner: {self.winner}")
        return out


def _check_correspondence(transcript, state):
    """Chip (label j, column i) survives iff edge j has no vertex of colour i,
    and a surviving label's row equals its edge size."""
    for j in range(1, transcript.n + 1):
        missing = set(transcript.missing_colours(j))
        if set(state.live[j - 1]) != missing:
            raise AssertionError(f"edge e{j} misses colours {sorted(missing)} "
                                 f"but label {j} survives in {sorted(state.live[j - 1])}")
        if state.live[j - 1] and state.rows[j - 1] != len(transcript.edges[j - 1]):
            raise AssertionError(f"label {j} is on row {state.rows[j - 1]} "
                                 f"but edge e{j} has {len(transcript.edges[j - 1])} vertices")


def pancolor_adapter(k, n, r, pusher_strategy, colorer_strategy) -> Transcript:
    """Play the pancolouring game with Presenter following a symmetric-game
    Pusher strategy and Colorer following a Remover strategy.

    Presenting a vertex in edges ``J`` is pushing labels ``J``; colouring
    it ``i`` is removing column ``i``.  Once the chip game ends the
    remaining edges are filled with fresh vertices, coloured 1.
    """
    t = Transcript(k, n, r, edges=[[] for _ in range(n)])
    state = SymmetricState.initial(k, n, r)
    vertex = 0
    while state.outcome() == "Ongoing":
        try:
            labels = state.check_push(pusher_strategy(state))
        except ValueError as exc:
            t.error = f"illegal presenter move: {exc}"
            return t
        colour = colorer_strategy(state, labels)
        if not isinstance(colour, int) or not 0 <= colour < r:
            t.error = f"illegal colour {colour!r}"
            return t
        vertex += 1
        for j in labels:
            t.edges[j - 1].append(vertex)
        t.colours[vertex] = colour
        state = state.play(labels, colour)
        t.rounds.append(PancolorRound(vertex, tuple(sorted(labels)), colour, state))
        _check_correspondence(t, state)
    t.chip_outcome = state.outcome()
    for j in range(1, n + 1):
        while len(t.edges[j - 1]) < k:
            vertex += 1
            t.edges[j - 1].append(vertex)
            t.colours[vertex] = 0
            t.rounds.append(PancolorRound(vertex, (j,), 0, state))
    spoiled = any(t.missing_colours(j) for j in range(1, n + 1))
    t.winner = "Presenter" if spoiled else "Colorer"
    if (t.winner == "Presenter") != (t.chip_outcome == "PusherWin"):
        raise AssertionError("pancolouring outcome disagrees with the chip game")
    return t
