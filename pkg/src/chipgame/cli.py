"""Command-line front end.

Every run prints human-readable lines followed by one JSON summary line.
Exit codes: 0 success, 1 usage error, 2 verification failed,
3 inconclusive (a budget ran out).
"""

import argparse
import json
import sys
import time
from pathlib import Path

from . import closures, known, verifier
from .bricks import POLICIES, exhaustive_brick_check, simulate_brick_game
from .core import (
    GameSpec,
    GameState,
    Outcome,
    PusherMove,
    apply_pusher,
    apply_remover,
    encode_state,
    initial_state,
    legal_pusher_moves,
    terminal,
)
from .oracle import painter_wins, part_profiles
from .solver import (
    Inconclusive,
    PaintabilityRangeError,
    Solver,
    SolverConfig,
    Value,
    default_bounds,
    evaluate,
    paintability,
    refuting_removal,
    winning_pusher_move,
)
from .symmetric import pol_bounds, symmetric_evaluate

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sizes(text):
    try:
        sizes = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _config(args):
    return SolverConfig(
        prune_pusher=not args.no_prune_pusher,
        prune_remover=not args.no_prune_remover,
        use_domination=not args.no_domination,
        compact=args.compact,
        node_budget=args.node_budget,
        state_budget=args.state_budget,
    )


def _emit(out, summary):
    out.write(json.dumps(summary, sort_keys=True, default=str) + "\n")


def cmd_solve(args, out):
    spec = GameSpec(args.gamma, args.sizes)
    result = evaluate(spec, _config(args))
    out.write(f"{known.graph_name(args.sizes)} with threshold {args.gamma}: {result.value.value}\n")
    files = {}
    if args.out_dir:
        folder = Path(args.out_dir)
        folder.mkdir(parents=True, exist_ok=True)
        for kind in closures.KINDS:
            path = folder / f"{kind}.clo"
            closures.from_result(result, kind).write(path)
            files[kind] = str(path)
            out.write(f"wrote {path}\n")
    summary = {
        "command": "solve", "gamma": args.gamma, "sizes": list(args.sizes),
        "value": result.value.value, "winning_states": len(result.closures.winning),
        "losing_states": len(result.closures.losing), "files": files,
        "nodes": result.stats.nodes,
    }
    return EXIT_OK, summary


def cmd_paint(args, out):
    key = tuple(sorted(args.sizes, reverse=True))
    low, high = default_bounds(args.sizes)
    low = args.low if args.low is not None else low
    high = args.high if args.high is not None else high
    evaluated = {}

    def progress(gamma, result):
        evaluated[gamma] = result.value.value
        out.write(f"  threshold {gamma}: {result.value.value} ({result.stats.nodes} nodes)\n")

    try:
        value = paintability(args.sizes, low, high, _config(args), on_result=progress)
    except PaintabilityRangeError as exc:
        out.write(f"{exc}\n")
        return EXIT_INCONCLUSIVE, {"command": "paint", "sizes": list(args.sizes),
                                   "value": None, "evaluated": evaluated}
    lower, _, upper = known.TABLE1.get(key, (None, None, None))
    show = lambda v: "-" if v is None else str(v)
    out.write("graph | known lower bound | computed value | known upper bound\n")
    out.write(f"{known.graph_name(args.sizes)} | {show(lower)} | {value} | {show(upper)}\n")
    summary = {"command": "paint", "sizes": list(args.sizes), "value": value,
               "known_lower": lower, "known_upper": upper, "evaluated": evaluated}
    return EXIT_OK, summary


def cmd_verify(args, out):
    try:
        closure = closures.read(args.file)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc))
    start = time.perf_counter()
    verdict = verifier.verify(closure, scan_all=args.scan_all)
    out.write(f"{closure.kind} closure, {len(closure.states)} states: "
              f"{'VALID' if verdict else 'INVALID'}\n")
    out.write(verdict.describe(closure.spec) + "\n")
    out.write(f"took {time.perf_counter() - start:.2f}s\n")
    summary = {
        "command": "verify", "file": args.file, "kind": closure.kind,
        "states": len(closure.states), "valid": verdict.ok,
        "bad_state": None if verdict.ok else encode_state(GameState(verdict.bad_state, closure.spec)),
    }
    return (EXIT_OK if verdict else EXIT_REJECTED), summary


def cmd_brick_sim(args, out):
    if args.remover == "exhaustive":
        res = exhaustive_brick_check(args.m, args.k, args.chips)
        out.write(f"exhaustive Remover: {res.outcome} over {res.positions} positions\n")
        summary = {"command": "brick-sim", "m": args.m, "k": args.k, "remover": "exhaustive",
                   "outcome": res.outcome, "positions": res.positions, "failure": res.failure}
        return EXIT_OK if res.outcome == "PusherWin" else EXIT_REJECTED, summary
    wins = 0
    failures = []
    for trial in range(args.trials):
        res = simulate_brick_game(args.m, args.k, args.remover, args.chips, seed=args.seed + trial,
                                  keep_log=args.trials == 1)
        for line in res.log:
            out.write(line + "\n")
        if res.outcome == "PusherWin":
            wins += 1
        else:
            failures.append({"trial": trial, "round": res.failure_round, "reason": res.failure})
    out.write(f"{args.remover} Remover: Pusher won {wins} of {args.trials} games\n")
    summary = {"command": "brick-sim", "m": args.m, "k": args.k, "remover": args.remover,
               "trials": args.trials, "wins": wins, "failures": failures[:10]}
    return EXIT_OK if not failures else EXIT_REJECTED, summary


def cmd_bounds(args, out):
    lower, upper = pol_bounds(args.k, args.r)
    out.write(f"p_OL({args.k}, {args.r}): lower {lower}, upper {upper}\n")
    return EXIT_OK, {"command": "bounds", "k": args.k, "r": args.r,
                     "lower": str(lower), "upper": str(upper)}


def cmd_sym_solve(args, out):
    value = symmetric_evaluate(args.k, args.n, args.r, args.node_budget)
    out.write(f"symmetric ({args.k}, {args.n}*{args.r}) chip game: {value.value}\n")
    return EXIT_OK, {"command": "sym-solve", "k": args.k, "n": args.n, "r": args.r,
                     "value": value.value}


def cmd_oracle_check(args, out):
    start = time.perf_counter()
    mismatches = []
    games = 0
    out.write("parts          " + " ".join(f"r={r}" for r in range(1, args.max_r + 1)) + "\n")
    for parts in part_profiles(args.max_vertices):
        cells = []
        for r in range(1, args.max_r + 1):
            paint = painter_wins(parts, r, max_vertices=args.max_vertices)
            chips = evaluate(GameSpec(r, parts)).value is Value.REMOVER_WINS
            games += 1
            if paint != chips:
                mismatches.append({"parts": list(parts), "r": r, "painter": paint, "remover": chips})
            cells.append(("P" if paint else "L") + ("" if paint == chips else "!"))
        out.write(f"{','.join(map(str, parts)):<14} " + "   ".join(cells) + "\n")
    out.write(f"{games} games, {len(mismatches)} mismatches (P = Painter wins, L = Lister wins) "
              f"in {time.perf_counter() - start:.2f}s\n")
    summary = {"command": "oracle-check", "games": games, "mismatches": mismatches}
    return EXIT_OK if not mismatches else EXIT_REJECTED, summary


# --- interactive play ----------------------------------------------------

def _show(state, out):
    for i, col in enumerate(state.board, start=1):
        out.write(f"  column {i}: {list(col)}\n")


def parse_pusher_move(text, state):
    """``"1:0=2 3:1=1"`` pushes two chips from row 0 of column 1 and one from row 1 of column 3."""
    pushes = [dict() for _ in state.board]
    for token in text.split():
        try:
            col, rest = token.split(":")
            row, count = rest.split("=")
            col, row, count = int(col), int(row), int(count)
        except ValueError:
            raise ValueError(f"cannot read {token!r}; use column:row=count")
        if not 1 <= col <= len(state.board):
            raise ValueError(f"column {col} does not exist")
        if row >= state.spec.threshold:
            raise ValueError(f"chips on row {row} cannot be pushed")
        pushes[col - 1][row] = pushes[col - 1].get(row, 0) + count
    move = PusherMove.from_counts(pushes)
    if move.total == 0:
        raise ValueError("Pusher must push at least one chip")
    return move


def cmd_play(args, out, inp):
    spec = GameSpec(args.gamma, args.sizes)
    solver = Solver(spec)
    state = initial_state(spec)
    human = args.side
    out.write(f"You play {human}. Pusher needs a chip on row {spec.threshold}.\n")
    rounds = 0
    while terminal(state) is Outcome.ONGOING:
        rounds += 1
        _show(state, out)
        if human == "pusher":
            while True:
                out.write("push> ")
                out.flush()
                line = inp.readline()
                if not line:
                    return EXIT_OK, {"command": "play", "result": "abandoned", "rounds": rounds}
                try:
                    pending = apply_pusher(state, parse_pusher_move(line, state))
                    break
                except ValueError as exc:
                    out.write(f"illegal move: {exc}\n")
            column = refuting_removal(solver, pending)
            column = 0 if column is None else column
            out.write(f"engine removes column {column + 1}\n")
        else:
            move = winning_pusher_move(solver, state)
            if move is None:
                move = max(legal_pusher_moves(state), key=lambda m: m.total)
            pending = apply_pusher(state, move)
            out.write(f"engine pushes {verifier.format_move(move)}\n")
            _show(pending, out)
            while True:
                out.write("remove column> ")
                out.flush()
                line = inp.readline()
                if not line:
                    return EXIT_OK, {"command": "play", "result": "abandoned", "rounds": rounds}
                try:
                    if not line.strip().isdigit():
                        raise ValueError(f"enter a column number, got {line.strip()!r}")
                    column = int(line.strip()) - 1
                    if not 0 <= column < len(state.board):
                        raise ValueError(f"choose a column from 1 to {len(state.board)}")
                    break
                except ValueError as exc:
                    out.write(f"illegal move: {exc}\n")
        state = apply_remover(pending, column)
    winner = "Pusher" if terminal(state) is Outcome.PUSHER_WIN else "Remover"
    _show(state, out)
    out.write(f"{winner} wins after {rounds} rounds\n")
    return EXIT_OK, {"command": "play", "result": winner, "rounds": rounds}


# --- argument parsing ----------------------------------------------------

def _solver_flags(p):
    p.add_argument("--no-prune-pusher", action="store_true")
    p.add_argument("--no-prune-remover", action="store_true")
    p.add_argument("--no-domination", action="store_true")
    p.add_argument("--compact", action="store_true",
                   help="keep only minimal winning and maximal losing states")
    p.add_argument("--node-budget", type=_positive)
    p.add_argument("--state-budget", type=_positive)


def build_parser():
    parser = _Parser(prog="chipgame", description=__doc__.splitlines()[0])
    parser.add_argument("--summary", help="also append the JSON summary to this file")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one chip game and export its closures")
    p.add_argument("--gamma", type=_positive, required=True)
    p.add_argument("--sizes", type=_sizes, required=True)
    p.add_argument("--out-dir")
    _solver_flags(p)

    p = sub.add_parser("paint", help="paintability of a complete multipartite graph")
    p.add_argument("--sizes", type=_sizes, required=True)
    p.add_argument("--low", type=_positive)
    p.add_argument("--high", type=_positive)
    _solver_flags(p)

    p = sub.add_parser("verify", help="check a closure file")
    p.add_argument("--file", required=True)
    p.add_argument("--scan-all", action="store_true")

    p = sub.add_parser("brick-sim", help="play the brick strategy against a Remover policy")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--remover", choices=["exhaustive", *POLICIES], default="random")
    p.add_argument("--trials", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chips", type=_positive, help="chips per column instead of m(k+1)f(k)")

    p = sub.add_parser("bounds", help="bounds on the on-line panchromatic number")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("sym-solve", help="solve a symmetric chip game")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--node-budget", type=_positive)

    p = sub.add_parser("oracle-check", help="compare the chip game with Lister/Painter brute force")
    p.add_argument("--max-vertices", type=_positive, default=7)
    p.add_argument("--max-r", type=_positive, default=4)

    p = sub.add_parser("play", help="play against the engine")
    p.add_argument("--gamma", type=_positive, required=True)
    p.add_argument("--sizes", type=_sizes, required=True)
    p.add_argument("--side", choices=["pusher", "remover"], default="pusher")
    return parser


COMMANDS = {
    "solve": cmd_solve, "paint": cmd_paint, "verify": cmd_verify, "brick-sim": cmd_brick_sim,
    "bounds": cmd_bounds, "sym-solve": cmd_sym_solve, "oracle-check": cmd_oracle_check,
}


def run(argv=None, out=None, inp=None):
    out = out or sys.stdout
    inp = inp or sys.stdin
    args = build_parser().parse_args(argv)
    try:
        if args.command == "play":
            code, summary = cmd_play(args, out, inp)
        else:
            code, summary = COMMANDS[args.command](args, out)
    except Inconclusive as exc:
        code, summary = EXIT_INCONCLUSIVE, {"command": args.command, "inconclusive": str(exc)}
        out.write(f"inconclusive: {exc}\n")
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"chipgame: error: {exc}\n")
        code, summary = EXIT_USAGE, {"command": args.command, "error": str(exc)}
    summary["exit_code"] = code
    _emit(out, summary)
    if args.summary:
        with open(args.summary, "a", encoding="utf-8") as fh:
            _emit(fh, summary)
    return code


def main(argv=None):
    try:
        return run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
