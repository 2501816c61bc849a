"""Independent checks that a set of states is a winning or losing closure.

Only the game rules, move generation and board domination are used
here; nothing from the solver.
"""

from dataclasses import dataclass, field

from .closures import ClosureFile
from .core import (
    GameState,
    Outcome,
    PusherMove,
    apply_pusher,
    apply_remover,
    encode_state,
    legal_pusher_moves,
    terminal,
)
from .domination import BoardSet


@dataclass
class Verdict:
    """Outcome of a verification; falsy when some state is bad."""

    ok: bool
    bad_state: tuple | None = None
    reason: str = ""
    pusher_move: PusherMove | None = None
    bad_states: list = field(default_factory=list)
    checked: int = 0

    def __bool__(self):
        return self.ok

    def describe(self, spec):
        if self.ok:
            return f"verified {self.checked} states"
        line = encode_state(GameState(self.bad_state, spec))
        text = f"bad state: {line}\nreason: {self.reason}"
        if self.pusher_move is not None:
            text += f"\nunanswered pusher move: {format_move(self.pusher_move)}"
        return text


def format_move(move: PusherMove):
    return "; ".join(
        f"col{i + 1}:" + ",".join(f"{r}x{c}" for r, c in pushes)
        for i, pushes in enumerate(move.pushes) if pushes
    )


def _members(closure: ClosureFile):
    members = BoardSet(closure.spec)
    for board in closure.states:
        members.add(board)
    return members


def _winning_reason(state, members):
    """None if the state is good for a winning closure, else why not."""
    outcome = terminal(state)
    if outcome is Outcome.PUSHER_WIN:
        return None
    if outcome is Outcome.PUSHER_LOSS:
        return "no chips left"
    for move in legal_pusher_moves(state):
        after = apply_pusher(state, move)
        for column in range(len(state.board)):
            child = apply_remover(after, column)
            if terminal(child) is Outcome.PUSHER_WIN:
                continue
            if members.find_below(child.board) is None:
                break
        else:
            return None
    return "no pusher move keeps every removal above a member"


def _losing_reason(state, members):
    """``(reason, move)`` if the state is bad for a losing closure, else None."""
    outcome = terminal(state)
    if outcome is Outcome.PUSHER_WIN:
        return "a chip has reached the threshold row", None
    if outcome is Outcome.PUSHER_LOSS:
        return None
    for move in legal_pusher_moves(state):
        after = apply_pusher(state, move)
        for column in range(len(state.board)):
            child = apply_remover(after, column)
            if terminal(child) is Outcome.PUSHER_LOSS:
                break
            if members.find_above(child.board) is not None:
                break
        else:
            return "no removal answers this pusher move", move
    return None


def _verify(closure, expected_kind, scan_all):
    if closure.kind != expected_kind:
        raise ValueError(f"expected a {expected_kind} closure, got {closure.kind}")
    members = _members(closure)
    verdict = Verdict(True)
    for board in closure.states:
        state = GameState(board, closure.spec)
        if expected_kind == "winning":
            reason, move = _winning_reason(state, members), None
        else:
            reason, move = _losing_reason(state, members) or (None, None)
        verdict.checked += 1
        if reason is None:
            continue
        if verdict.ok:
            verdict.ok = False
            verdict.bad_state, verdict.reason, verdict.pusher_move = board, reason, move
        verdict.bad_states.append(board)
        if not scan_all:
            break
    return verdict


def verify_winning(closure: ClosureFile, scan_all=False) -> Verdict:
    """Every state must let Pusher force the next position above some member."""
    return _verify(closure, "winning", scan_all)


def verify_losing(closure: ClosureFile, scan_all=False) -> Verdict:
    """Every state must let Remover answer each Pusher move below some member."""
    return _verify(closure, "losing", scan_all)


def verify(closure: ClosureFile, scan_all=False) -> Verdict:
    if closure.kind == "winning":
        return verify_winning(closure, scan_all)
    return verify_losing(closure, scan_all)
