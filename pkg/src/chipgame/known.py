"""Published paintability bounds for the multipartite graphs solved by computer.

Keyed by part sizes (descending): ``(known lower, computed, known upper)``.
The lower bounds come from the choosability of K_{3*n} and from the
one-part-of-three family; the upper bounds from the 3n/2 bound.
"""

TABLE1 = {
    (3, 3, 3, 3): (5, 5, 6),
    (3, 3, 3, 3, 3): (7, 7, 7),
    (3, 3, 3, 2, 2, 2): (7, 7, 9),
    (3, 3, 3, 3, 2, 2): (7, 7, 9),
    (3, 3, 3, 3, 3, 2): (7, 8, 9),
    (3, 3, 3, 3, 3, 3): (8, 8, 9),
    (3, 3, 3, 2, 2, 2, 2): (8, 8, 10),
    (3, 3, 3, 3, 2, 2, 2): (8, 8, 10),
    (3, 3, 3, 3, 3, 2, 2): (8, 9, 10),
}


def graph_name(sizes):
    """``K_{2*3,3*3}`` style name for a list of part sizes."""
    counts = {}
    for n in sizes:
        counts[n] = counts.get(n, 0) + 1
    return "K_{" + ",".join(f"{n}*{c}" for n, c in sorted(counts.items())) + "}"
