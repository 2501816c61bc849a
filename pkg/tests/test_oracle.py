import pytest

from chipgame.core import GameSpec
from chipgame.oracle import (
    InstanceTooLarge,
    MultipartiteGraph,
    paintability_direct,
    painter_wins,
    part_profiles,
)
from chipgame.solver import Value, evaluate


def test_edge():
    assert painter_wins((1, 1), 2)
    assert not painter_wins((1, 1), 1)


def test_small_examples():
    assert painter_wins((2, 2), 2)
    assert painter_wins((2, 3), 3)
    assert paintability_direct((1, 1, 1, 1)) == 4
    assert paintability_direct((2, 2, 2)) == 3
    assert paintability_direct((1, 3)) == 2


def test_k23_is_two_paintable():
    """Both the reduced and the plain game tree find a Painter win at r=2."""
    assert painter_wins((2, 3), 2)
    assert painter_wins((2, 3), 2, reduced=False)


def test_size_limit():
    with pytest.raises(InstanceTooLarge):
        painter_wins((4, 4), 3)
    assert painter_wins((4, 4), 3, max_vertices=8)
    with pytest.raises(ValueError):
        MultipartiteGraph((2, 0))


def test_profiles():
    assert list(part_profiles(3)) == [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    assert sum(1 for _ in part_profiles(7)) == 1 + 2 + 3 + 5 + 7 + 11 + 15


@pytest.mark.parametrize("parts", list(part_profiles(5)), ids=str)
def test_reduced_matches_unreduced(parts):
    for r in range(1, 4):
        assert painter_wins(parts, r) == painter_wins(parts, r, reduced=False)


@pytest.mark.parametrize("parts", list(part_profiles(6)), ids=str)
def test_monotone_in_r(parts):
    values = [painter_wins(parts, r) for r in range(1, 6)]
    assert values == sorted(values)


def test_adding_a_vertex_never_lowers_paintability():
    for parts in part_profiles(5):
        base = paintability_direct(parts)
        for i in range(len(parts)):
            bigger = parts[:i] + (parts[i] + 1,) + parts[i + 1:]
            assert paintability_direct(bigger) >= base
        assert paintability_direct(parts + (1,)) >= base


@pytest.mark.parametrize("parts", list(part_profiles(7)), ids=str)
def test_equivalence_with_chip_game(parts):
    for r in range(1, 5):
        chips = evaluate(GameSpec(r, parts)).value is Value.REMOVER_WINS
        assert painter_wins(parts, r) == chips
