"""Brute-force on-line list colouring (Lister/Painter) on complete multipartite graphs.

Each vertex has ``r`` tokens.  Lister presents a nonempty set ``S`` of
uncoloured vertices, spending one token at each; Painter colours an
independent subset of ``S``.  Lister wins once an uncoloured vertex
has been presented ``r`` times; Painter wins once every vertex is
coloured.  In a complete multipartite graph the independent subsets of
``S`` are exactly the subsets of ``S`` inside a single part.
"""

import itertools
from dataclasses import dataclass

DEFAULT_MAX_VERTICES = 7


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MultipartiteGraph:
    part_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.part_sizes)
        object.__setattr__(self, "part_sizes", sizes)
        if not sizes or any(n < 1 for n in sizes):
            raise ValueError(f"need at least one nonempty part, got {sizes}")

    @property
    def num_vertices(self):
        return sum(self.part_sizes)

    def vertices(self):
        return [(p, i) for p, n in enumerate(self.part_sizes) for i in range(n)]


def _check_size(graph, max_vertices):
    if graph.num_vertices > max_vertices:
        raise InstanceTooLarge(
            f"{graph.num_vertices} vertices exceeds the oracle limit of {max_vertices}")


def _reduced_key(parts):
    """Uncoloured presentation counts per part, up to relabelling vertices and parts."""
    return tuple(sorted((tuple(sorted(p, reverse=True)) for p in parts if p), reverse=True))


def _painter_wins_reduced(graph, r):
    memo = {}

    def wins(parts):
        # parts: per part, the presentation counts of its uncoloured vertices
        key = _reduced_key(parts)
        if not key:
            return True
        if key in memo:
            return memo[key]
        result = True
        for presented in _lister_moves(key):
            if not any(_painter_survives(key, presented, i, r, wins)
                       for i in range(len(key)) if any(presented[i])):
                result = False
                break
        memo[key] = result
        return result

    start = tuple(tuple([0] * n) for n in graph.part_sizes)
    return wins(start)


def _lister_moves(parts):
    """Nonempty presentations, choosing how many vertices of each count class to present.

    Returned as, per part, a tuple of ``(count, how_many)``.
    """
    per_part = []
    for part in parts:
        classes = sorted(set(part))
        options = []
        for choice in itertools.product(*(range(part.count(c) + 1) for c in classes)):
            options.append(tuple((c, k) for c, k in zip(classes, choice) if k))
        per_part.append(options)
    for move in itertools.product(*per_part):
        if any(move):
            yield move


def _painter_survives(parts, presented, colour_part, r, wins):
    """Painter colours every presented vertex of ``colour_part``; True if Painter then wins."""
    after = []
    for i, (part, pres) in enumerate(zip(parts, presented)):
        remaining = list(part)
        bumped = []
        for count, k in pres:
            for _ in range(k):
                remaining.remove(count)
                if i != colour_part:
                    bumped.append(count + 1)
        if any(c >= r for c in bumped):
            return False
        after.append(tuple(remaining + bumped))
    return wins(tuple(after))


def _painter_wins_unreduced(graph, r):
    """Plain game tree over explicit vertices, every subset and every independent reply."""
    vertices = graph.vertices()
    memo = {}

    def wins(state):
        # state: per vertex, None when coloured else its presentation count
        if all(s is None for s in state):
            return True
        if state in memo:
            return memo[state]
        live = [v for v, s in enumerate(state) if s is not None]
        result = True
        for size in range(1, len(live) + 1):
            for chosen in itertools.combinations(live, size):
                if not any(_reply_wins(state, chosen, reply, r, wins)
                           for reply in _independent_subsets(chosen, vertices)):
                    result = False
                    break
            if not result:
                break
        memo[state] = result
        return result

    return wins(tuple([0] * len(vertices)))


def _independent_subsets(chosen, vertices):
    for size in range(len(chosen) + 1):
        for subset in itertools.combinations(chosen, size):
            if len({vertices[v][0] for v in subset}) <= 1:
                yield subset


def _reply_wins(state, chosen, coloured, r, wins):
    nxt = list(state)
    for v in chosen:
        if v in coloured:
            nxt[v] = None
        else:
            nxt[v] += 1
            if nxt[v] >= r:
                return False
    return wins(tuple(nxt))


def painter_wins(graph, r, max_vertices=DEFAULT_MAX_VERTICES, reduced=True):
    """True iff Painter wins the on-line list colouring game with ``r`` tokens per vertex."""
    if not isinstance(graph, MultipartiteGraph):
        graph = MultipartiteGraph(tuple(graph))
    _check_size(graph, max_vertices)
    if r < 1:
        return False
    if reduced:
        return _painter_wins_reduced(graph, r)
    return _painter_wins_unreduced(graph, r)


def paintability_direct(graph, max_vertices=DEFAULT_MAX_VERTICES):
    """Smallest ``r`` for which the graph is ``r``-paintable."""
    if not isinstance(graph, MultipartiteGraph):
        graph = MultipartiteGraph(tuple(graph))
    _check_size(graph, max_vertices)
    r = len(graph.part_sizes)
    while not painter_wins(graph, r, max_vertices):
        r += 1
    return r


def part_profiles(max_vertices):
    """Every multiset of part sizes with total at most ``max_vertices``, largest parts first."""
    def partitions(n, largest):
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in partitions(n - k, k):
                yield (k,) + rest

    for total in range(1, max_vertices + 1):
        yield from partitions(total, total)
