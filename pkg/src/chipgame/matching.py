"""Hopcroft-Karp maximum matching on small bipartite graphs.

Left vertices are ``0..n_left-1``; the graph is given as an adjacency list
``adj[u] = [v, ...]`` of right-vertex indices in ``0..n_right-1``.
"""

from collections import deque

_INF = float("inf")


def hopcroft_karp(adj, n_right):
    """Return ``(size, match_left)`` of a maximum matching.

    ``match_left[u]`` is the right vertex matched to ``u`` or ``-1``.
    Runs in O(E sqrt(V)).
    """
    n_left = len(adj)
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    dist = [0] * n_left
    size = 0

    def bfs():
        queue = deque()
        for u in range(n_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_right[v]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u):
        for v in adj[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] == -1 and dfs(u):
                size += 1
    return size, match_left


def has_perfect_matching(adj, n_right):
    """True iff every left and every right vertex can be matched."""
    if len(adj) != n_right:
        return False
    # Hall's condition fails trivially on an isolated vertex.
    if any(not nbrs for nbrs in adj):
        return False
    covered = set()
    for nbrs in adj:
        covered.update(nbrs)
    if len(covered) != n_right:
        return False
    size, _ = hopcroft_karp(adj, n_right)
    return size == n_right
