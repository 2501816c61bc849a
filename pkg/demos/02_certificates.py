"""
Certificates that can be checked without trusting the search
============================================================

Every solve leaves behind the positions it resolved.  Written out as
closure files they form a proof: each winning position has a Pusher move
that lands above another winning position whatever Remover does, and
each losing position has a Remover answer to every Pusher move.
"""

import tempfile
from pathlib import Path

from chipgame import closures
from chipgame.closures import ClosureFile
from chipgame.core import GameSpec, canonicalize
from chipgame.solver import SolverConfig, evaluate
from chipgame.verifier import verify

spec = GameSpec(3, (2, 2, 2))
result = evaluate(spec, SolverConfig(compact=True))
print("K_{2*3} at threshold 3:", result.value.value)

folder = Path(tempfile.mkdtemp())
for kind in closures.KINDS:
    path = folder / f"{kind}.clo"
    closures.from_result(result, kind).write(path)
    closure = closures.read(path)
    print(f"{kind:8s} {len(closure.states):3d} states -> {bool(verify(closure))}")

# A peek at the file format.
print((folder / "losing.clo").read_text(encoding="utf-8").splitlines()[:3])

# Now sabotage the losing closure: push one chip of one state up a row.
losing = closures.read(folder / "losing.clo")
victim = max(losing.states, key=lambda b: sum(map(len, b)))
col = next(i for i, c in enumerate(victim) if c)
raised = list(victim)
raised[col] = (victim[col][0] + 1,) + victim[col][1:]
states = [b for b in losing.states if b != victim] + [canonicalize(raised)]
verdict = verify(ClosureFile("losing", spec, states))
print("tampered closure accepted?", bool(verdict))
if not verdict:
    print(verdict.describe(spec))
