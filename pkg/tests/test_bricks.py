import math
from collections import Counter
from fractions import Fraction

import pytest

from chipgame.bricks import (
    POLICIES,
    BrickBoard,
    StrategyInapplicable,
    advance_bricks,
    brick_pusher_move,
    brick_tables,
    claim_bound,
    exhaustive_brick_check,
    greedy_most_advanced,
    simulate_brick_game,
)


def test_tables_m2_double():
    cfg = brick_tables(2, 4)
    assert cfg.f == (1, 2, 4, 8, 16)
    assert cfg.g == cfg.f


def test_tables_m3():
    cfg = brick_tables(3, 3)
    assert cfg.f == (1, 2, 3, 5)
    assert cfg.g == (1, 1, 2, 3)


@pytest.mark.parametrize("m", range(2, 7))
def test_growth_bound(m):
    cfg = brick_tables(m, 20)
    q = Fraction(m, m - 1)
    for k in range(21):
        assert cfg.f[0] == 1
        assert cfg.g[k] == math.ceil(Fraction(cfg.f[k], m - 1))
        if k:
            assert cfg.f[k] == cfg.f[k - 1] + cfg.g[k - 1]
        assert cfg.f[k] <= claim_bound(m, k) < m * q ** k
        assert (m - 1) * cfg.g[k] >= cfg.f[k]


def test_table_errors():
    with pytest.raises(ValueError):
        brick_tables(1, 2)
    with pytest.raises(ValueError):
        brick_tables(3, -1)


def test_first_move_pushes_a_top_brick_everywhere():
    cfg = brick_tables(3, 2)
    board = BrickBoard.initial(cfg)
    assert cfg.chips_per_column == 3 * 3 * cfg.f[2]
    assert board.brick_count() == 3 * 3 * 3
    move = brick_pusher_move(board)
    assert [move.count(c, 0) for c in range(3)] == [cfg.f[2]] * 3


def test_fractions_merge():
    cfg = brick_tables(3, 2)
    board = advance_bricks(BrickBoard.initial(cfg), 2)
    assert board.frac[0][1] == 1 and board.full[0][1] == 1
    board = BrickBoard(cfg, [Counter({2: 1}), Counter({2: 1}), Counter({2: 1})],
                       [Counter({1: 1}), Counter(), Counter()])
    merged = advance_bricks(board, 2)
    assert merged.frac[0][1] == 0 and merged.full[0][1] == 2
    assert merged.spilled == 2 * cfg.g[1] - cfg.f[1]


def test_row_zero_brick_is_a_win():
    cfg = brick_tables(2, 1)
    board = BrickBoard.initial(cfg)
    assert not board.pusher_won()
    board = advance_bricks(board, 0)
    assert board.pusher_won()


def test_empty_column_is_inapplicable():
    cfg = brick_tables(2, 2)
    board = BrickBoard(cfg, [Counter({2: 1}), Counter()], [Counter(), Counter()])
    with pytest.raises(StrategyInapplicable) as info:
        brick_pusher_move(board)
    assert info.value.board.full[0][2] == 1


def test_k_zero_is_immediate():
    res = simulate_brick_game(2, 0, "random", seed=0)
    assert res.outcome == "PusherWin" and res.rounds == 0


@pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (4, 1)])
def test_exhaustive_remover(m, k):
    res = exhaustive_brick_check(m, k)
    assert res.outcome == "PusherWin", res.failure


@pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_random_removers(m, k):
    for seed in range(250):
        res = simulate_brick_game(m, k, "random", seed=seed)
        assert res.outcome == "PusherWin", (seed, res.failure)
        assert res.min_bricks >= res.initial_bricks


@pytest.mark.parametrize("policy", ["greedy", "round-robin"])
@pytest.mark.parametrize("m,k", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_deterministic_removers(policy, m, k):
    assert simulate_brick_game(m, k, policy).outcome == "PusherWin"


def test_greedy_picks_highest_push():
    from chipgame.core import GameSpec, GameState, PusherMove, apply_pusher
    state = GameState(((2, 0), (1, 1)), GameSpec(4, (2, 2)))
    pending = apply_pusher(state, PusherMove([{0: 1}, {1: 2}]))
    assert greedy_most_advanced(pending) == 1


def test_policies_registered():
    assert set(POLICIES) == {"random", "greedy", "round-robin"}


def test_log_has_one_line_per_round():
    res = simulate_brick_game(2, 2, "round-robin", keep_log=True)
    assert len(res.log) == res.rounds
    assert res.log[0].startswith("round 1: removed column 1")


def test_too_few_chips_can_fail():
    res = simulate_brick_game(3, 2, "greedy", chips=3)
    assert res.outcome in ("PusherWin", "StrategyFailure")
