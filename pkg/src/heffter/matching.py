"""Bipartite matching and transversals of square partially filled arrays.

A transversal (one filled cell per row and per column) is a perfect matching
of the bipartite row/column graph whose edges are the filled cells; for a
square array with k filled cells in every row and column that graph is
k-regular, so a perfect matching always exists.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .core import PFArray, Transversal
from .errors import InvalidTransversal, ShapeError

_INF = float("inf")


def maximum_matching(num_left: int, num_right: int, adjacency: Sequence[Sequence[int]]) -> list:
    """Hopcroft-Karp maximum matching.

    ``adjacency[u]`` lists the right-side neighbours of left vertex u (both
    sides 0-based).  Returns ``match_left`` where ``match_left[u]`` is the
    matched right vertex or -1.  Deterministic for a fixed adjacency order.
    """
    match_left = [-1] * num_left
    match_right = [-1] * num_right
    dist = [_INF] * num_left

    def bfs() -> bool:
        queue = deque()
        for u in range(num_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        free_dist = _INF
        while queue:
            u = queue.popleft()
            if dist[u] >= free_dist:
                continue
            for v in adjacency[u]:
                w = match_right[v]
                if w == -1:
                    free_dist = min(free_dist, dist[u] + 1)
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return free_dist != _INF

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in range(num_left):
            if match_left[u] == -1:
                dfs(u)
    return match_left


def validate_transversal(array: PFArray, cells: Sequence) -> Transversal:
    """Check that ``cells`` (1-based pairs) form a transversal of ``array``."""
    if not array.is_square:
        raise ShapeError(f"transversals need a square array, got {array.m}x{array.n}")
    n = array.n
    cells = tuple(tuple(c) for c in cells)
    if len(cells) != n:
        raise InvalidTransversal(f"expected {n} cells, got {len(cells)}")
    rows = {i for i, _ in cells}
    cols = {j for _, j in cells}
    if len(rows) != n or len(cols) != n:
        raise InvalidTransversal("cells repeat a row or a column")
    for i, j in cells:
        if not (1 <= i <= n and 1 <= j <= n):
            raise InvalidTransversal(f"cell ({i},{j}) out of range")
        if array.entry(i, j) is None:
            raise InvalidTransversal(f"cell ({i},{j}) is empty")
    return Transversal(cells=cells)


def find_transversal(array: PFArray, pinned: Optional[Sequence] = None) -> Transversal:
    """A transversal of a square array, via a perfect matching of its cells.

    ``pinned`` lets the caller supply a specific cell set, which is validated
    and returned unchanged.
    """
    if pinned is not None:
        return validate_transversal(array, pinned)
    if not array.is_square:
        raise ShapeError(f"transversals need a square array, got {array.m}x{array.n}")
    n = array.n
    adjacency = [
        [j for j in range(n) if array.cells[i][j] is not None] for i in range(n)
    ]
    match_left = maximum_matching(n, n, adjacency)
    if any(v == -1 for v in match_left):
        # Unreachable for arrays with equal nonzero row/column fill counts.
        raise InvalidTransversal("array admits no transversal")
    cells = tuple((i + 1, match_left[i] + 1) for i in range(n))
    return Transversal(cells=cells)
