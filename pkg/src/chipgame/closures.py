"""Closure files: a header line and one canonical state line per entry.

::

    chip-closure v1; kind=losing; Γ=5; sizes=3,3,3,3
    Γ=5; sizes=3,3,3,3; board=[[4,0],[3,3,1],[2],[]]
    ...

State lines are sorted byte-wise, so equal sets give identical files.
"""

import re
from dataclasses import dataclass, field
from pathlib import Path

from .core import GameSpec, GameState, canonicalize, decode_state, encode_state

KINDS = ("winning", "losing")
_HEADER_RE = re.compile(r"^chip-closure v1; kind=(winning|losing); Γ=(\d+); sizes=(\d+(?:,\d+)*)$")


class ClosureFormatError(ValueError):
    pass


@dataclass
class ClosureFile:
    kind: str
    spec: GameSpec
    states: list = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ClosureFormatError(f"unknown closure kind {self.kind!r}")
        self.states = [canonicalize(b) for b in self.states]

    def header(self):
        sizes = ",".join(map(str, self.spec.sizes_key))
        return f"chip-closure v1; kind={self.kind}; Γ={self.spec.threshold}; sizes={sizes}"

    def lines(self):
        encoded = {encode_state(GameState(b, self.spec)) for b in self.states}
        return [self.header()] + sorted(encoded, key=lambda s: s.encode("utf-8"))

    def dumps(self):
        return "\n".join(self.lines()) + "\n"

    def write(self, path):
        Path(path).write_bytes(self.dumps().encode("utf-8"))


def loads(text: str) -> ClosureFile:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ClosureFormatError("empty closure file")
    m = _HEADER_RE.match(lines[0].strip())
    if not m:
        raise ClosureFormatError(f"malformed header: {lines[0]!r}")
    kind = m.group(1)
    spec = GameSpec(int(m.group(2)), tuple(int(x) for x in m.group(3).split(",")))
    states = []
    for n, line in enumerate(lines[1:], start=2):
        try:
            state = decode_state(line)
        except ValueError as exc:
            raise ClosureFormatError(f"line {n}: {exc}") from None
        if state.spec.threshold != spec.threshold or state.spec.sizes_key != spec.sizes_key:
            raise ClosureFormatError(f"line {n}: state does not match the header's game")
        lengths = sorted((len(c) for c in state.board), reverse=True)
        if any(k > size for k, size in zip(lengths, spec.sizes_key)):
            raise ClosureFormatError(f"line {n}: more chips than the game starts with")
        states.append(state.board)
    return ClosureFile(kind, spec, states)


def read(path) -> ClosureFile:
    return loads(Path(path).read_bytes().decode("utf-8"))


def from_result(result, kind) -> ClosureFile:
    """Closure of one side of a solved game."""
    store = result.closures
    states = store.states(kind == "winning")
    return ClosureFile(kind, store.spec, states)
