"""Deterministic latin rectangle completion.

``extend_rectangle`` adds rows to a full latin rectangle one perfect
matching at a time (Hall's condition guarantees success).
``complete_cells`` fills the empty cells of a partial rectangle by
backtracking with per-cell domains, choosing the most constrained cell
first and trying symbols in increasing order.
"""
from __future__ import annotations

import sys
from typing import Sequence

from .core import EMPTY


class CompletionFailure(RuntimeError):
    pass


def _perfect_matching(allowed: list[list[int]]) -> list[int]:
    """Column -> symbol matching (Kuhn), deterministic; symbols are 0-based."""
    n = len(allowed)
    owner = [-1] * n

    def augment(col: int, seen: list[bool]) -> bool:
        for s in allowed[col]:
            if not seen[s]:
                seen[s] = True
                if owner[s] < 0 or augment(owner[s], seen):
                    owner[s] = col
                    return True
        return False

    for col in range(n):
        if not augment(col, [False] * n):
            raise CompletionFailure("no perfect matching")
    match = [0] * n
    for s, col in enumerate(owner):
        match[col] = s
    return match


def extend_rectangle(rows: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Extend a full latin rectangle on symbols ``1..n`` to an ``n x n`` square."""
    out = [list(r) for r in rows]
    used = [set(out[i][j] for i in range(len(out))) for j in range(n)]
    while len(out) < n:
        allowed = [[s for s in range(n) if s + 1 not in used[j]] for j in range(n)]
        row = [s + 1 for s in _perfect_matching(allowed)]
        for j, v in enumerate(row):
            used[j].add(v)
        out.append(row)
    return out


def complete_cells(
    cells: Sequence[Sequence[int]],
    n: int,
    domains: dict[tuple[int, int], int] | None = None,
    max_nodes: int = 2_000_000,
) -> list[list[int]]:
    """Fill every EMPTY cell of a partial latin rectangle.

    ``domains`` maps a cell to a bitmask of allowed symbols (bit ``s-1`` for
    symbol ``s``); a zero mask keeps the cell empty.
    """
    grid = [list(r) for r in cells]
    r = len(grid)
    full = (1 << n) - 1
    row_used = [0] * r
    col_used = [0] * n
    for i in range(r):
        for j in range(n):
            v = grid[i][j]
            if v != EMPTY:
                bit = 1 << (v - 1)
                if row_used[i] & bit or col_used[j] & bit:
                    raise CompletionFailure(f"symbol {v} repeats at ({i},{j})")
                row_used[i] |= bit
                col_used[j] |= bit
    dom = domains or {}
    todo = [(i, j) for i in range(r) for j in range(n) if grid[i][j] == EMPTY and dom.get((i, j), full)]
    base = {c: dom.get(c, full) for c in todo}
    nodes = 0

    def options(c):
        i, j = c
        return base[c] & ~row_used[i] & ~col_used[j]

    def solve(open_cells: list) -> bool:
        nonlocal nodes
        if not open_cells:
            return True
        best, best_opts, best_count = None, 0, n + 1
        for idx, c in enumerate(open_cells):
            o = options(c)
            cnt = o.bit_count()
            if cnt < best_count:
                best, best_opts, best_count = idx, o, cnt
                if cnt <= 1:
                    break
        if best_count == 0:
            return False
        i, j = open_cells[best]
        rest = open_cells[:best] + open_cells[best + 1:]
        o = best_opts
        while o:
            bit = o & -o
            o ^= bit
            nodes += 1
            if nodes > max_nodes:
                raise CompletionFailure(f"node limit {max_nodes} reached")
            row_used[i] |= bit
            col_used[j] |= bit
            grid[i][j] = bit.bit_length()
            if solve(rest):
                return True
            row_used[i] &= ~bit
            col_used[j] &= ~bit
            grid[i][j] = EMPTY
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, len(todo) + 100))
    try:
        ok = solve(todo)
    finally:
        sys.setrecursionlimit(limit)
    if not ok:
        raise CompletionFailure("partial rectangle has no completion under the given domains")
    return grid
