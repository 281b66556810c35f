"""Mu-way latin trades of prescribed volume."""
from __future__ import annotations

import enum
from functools import lru_cache

from .completion import CompletionFailure, complete_cells
from .core import EMPTY, Grid, MuWayTrade
from .layouts import Layout

# Volumes that no 4-way trade can have.
IMPOSSIBLE_VOLUMES_4 = frozenset(range(1, 16)) | frozenset({17, 18, 19, 21, 22, 26})


# Per-attempt completion budget when scanning gear parameters for a volume.
GEAR_SEARCH_NODES = 1_000


class ShapeTooSmall(ValueError):
    pass


class ParameterViolation(ValueError):
    pass


class Verdict(enum.Enum):
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


def empty_trade(mu: int, rows: int = 1, cols: int = 1) -> MuWayTrade:
    g = Grid(tuple((EMPTY,) * cols for _ in range(rows)), cols)
    return MuWayTrade((g,) * mu, origin="empty")


def full_trade(mu: int, m: int, n: int) -> MuWayTrade:
    """Every cell of an ``m x n`` rectangle traded.

    Layer ``t`` is the cyclic rectangle ``(i + j) mod n`` with its rows
    rotated by ``t`` inside the ``m`` rows.  When ``m > n`` the ``n x m``
    trade is built instead, so the result always has rows <= cols.
    """
    if min(m, n) < mu:
        raise ShapeTooSmall(f"a {mu}-way full trade needs both sides >= {mu}, got {m}x{n}")
    if m > n:
        m, n = n, m
    layers = tuple(
        Grid(tuple(tuple(((i + t) % m + j) % n + 1 for j in range(n)) for i in range(m)), n) for t in range(mu)
    )
    return MuWayTrade(layers, origin=f"full({m}x{n})")


def _check(cond: bool, text: str) -> None:
    if not cond:
        raise ParameterViolation(f"requires {text}")


def gear_block_rows(mu: int, a: int, b: int, x: int, y: int, c: int = 0) -> list[list[int]]:
    """Partial base rectangle of the two-block rotation, before completion.

    Columns are ``[c-part | B-part (b) | A-part (a)]``; symbols ``1..a`` form
    A and ``a+1..a+b`` form B.  The first ``x + mu - 1`` rows carry cyclic A
    rows in the A columns; rows ``x .. x + mu - 2`` carry cyclic B rows.
    """
    n = a + b + c
    rows = [[EMPTY] * n for _ in range(x + y)]
    for i in range(x + mu - 1):
        for jj in range(a):
            rows[i][c + b + jj] = (jj - i) % a + 1
    for i in range(x, x + mu - 1):
        for jj in range(b):
            rows[i][c + jj] = a + 1 + (jj - (i - x)) % b
    return rows


def gear_trade(mu: int, a: int, b: int, x: int, y: int, max_nodes: int = 2_000_000) -> MuWayTrade:
    """Trade read off a two-block rotation; volume ``y*b + (y+x)*a``."""
    _check(a >= x + mu - 1, f"a >= x+mu-1 ({a} < {x + mu - 1})")
    _check(b >= mu - 1, f"b >= mu-1 ({b} < {mu - 1})")
    _check(x >= 1, f"x >= 1 (x = {x})")
    _check(y >= mu, f"y >= mu ({y} < {mu})")
    _check(x + y <= a + b, f"x+y <= a+b ({x + y} > {a + b})")
    n = a + b
    base = gear_block_rows(mu, a, b, x, y)
    a_mask = (1 << a) - 1
    domains = {}
    for i in range(x):
        for j in range(b):
            domains[(i, j)] = 0
        for j in range(b, n):
            domains[(i, j)] = a_mask
    try:
        rows = complete_cells(base, n, domains, max_nodes=max_nodes)
    except CompletionFailure as exc:
        raise ParameterViolation(f"no base rectangle for a={a} b={b} x={x} y={y}: {exc}") from exc
    fixed = tuple(tuple(i < x and j < b for j in range(n)) for i in range(x + y))
    layout = Layout(mu, n, tuple(map(tuple, rows)), fixed, (0, b))
    layers = tuple(layout.layer(t) for t in range(mu))
    return MuWayTrade(layers, origin=f"gear(a={a},b={b},x={x},y={y})")


def gear_volume(a: int, b: int, x: int, y: int) -> int:
    return y * b + (y + x) * a


def gear_trade_params(mu: int, s: int) -> list[tuple[int, int, int, int]]:
    """All (a, b, x, y) meeting the relaxed conditions with volume ``s`` and ``x + y <= a + b``.

    Sorted by order ``a + b``, then ``a``, then ``x``.
    """
    out = []
    for x in range(1, s + 1):
        for y in range(mu, s + 1):
            a0 = x + mu - 1
            if (y + x) * a0 + y * (mu - 1) > s:
                break
            for a in range(a0, s + 1):
                rest = s - (y + x) * a
                if rest < y * (mu - 1):
                    break
                # A-block columns hold x + y distinct symbols, so x + y <= a + b.
                if rest % y == 0 and x + y <= a + rest // y:
                    out.append((a, rest // y, x, y))
    return sorted(out, key=lambda p: (p[0] + p[1], p[0], p[2], p[3]))


def compose(t1: MuWayTrade, t2: MuWayTrade) -> MuWayTrade:
    """Block-diagonal union; the second trade moves to fresh symbols."""
    if t1.mu != t2.mu:
        raise ValueError("cannot compose trades with different mu")
    r1, n1, r2, n2 = t1.rows, t1.n, t2.rows, t2.n
    layers = []
    for g1, g2 in zip(t1.layers, t2.layers):
        top = [list(row) + [EMPTY] * n2 for row in g1.cells]
        bottom = [[EMPTY] * n1 + [v + n1 if v != EMPTY else EMPTY for v in row] for row in g2.cells]
        layers.append(Grid.from_rows(top + bottom, n1 + n2))
    return MuWayTrade(tuple(layers), origin=f"compose[{t1.origin}; {t2.origin}]")


def _factor(mu: int, s: int) -> tuple[int, int] | None:
    best = None
    for m in range(mu, int(s ** 0.5) + 1):
        if s % m == 0 and s // m >= m:
            best = (m, s // m)
    return best


@lru_cache(maxsize=None)
def _gear_build(mu: int, s: int) -> MuWayTrade | None:
    """First parameter set (in search order) whose base rectangle completes."""
    for a, b, x, y in gear_trade_params(mu, s):
        try:
            return gear_trade(mu, a, b, x, y, max_nodes=GEAR_SEARCH_NODES)
        except ParameterViolation:
            continue
    return None


@lru_cache(maxsize=None)
def _seed_table(mu: int) -> dict[int, MuWayTrade]:
    from .fixtures import seed_trades

    return seed_trades(mu)


def _base_kind(mu: int, s: int) -> str | None:
    if s == 0:
        return "empty"
    if _factor(mu, s):
        return "full"
    if _gear_build(mu, s) is not None:
        return "gear"
    if s in _seed_table(mu):
        return "seed"
    return None


@lru_cache(maxsize=None)
def _plan(mu: int, s: int) -> tuple[int, ...] | None:
    """Volumes of the blocks used for ``s``; a single entry means a base construction."""
    if mu == 4 and s in IMPOSSIBLE_VOLUMES_4:
        return None
    if _base_kind(mu, s):
        return (s,)
    for first in range(s - 1, 0, -1):
        if _base_kind(mu, first) and _plan(mu, s - first) is not None:
            return (first,) + _plan(mu, s - first)
    return None


def _build_base(mu: int, s: int) -> MuWayTrade:
    kind = _base_kind(mu, s)
    if kind == "empty":
        return empty_trade(mu)
    if kind == "full":
        return full_trade(mu, *_factor(mu, s))
    if kind == "gear":
        return _gear_build(mu, s)
    return _seed_table(mu)[s]


def trade_of_volume(mu: int, s: int, shape: tuple[int, int] | None = None) -> MuWayTrade | Verdict:
    """A ``mu``-way trade of volume ``s``, or a verdict when none is produced.

    Tries a full rectangle, then the two-block rotation, then a stored seed
    trade, then block-diagonal sums of those.  For ``mu = 4`` the impossible
    volumes answer ``Verdict.INFEASIBLE``.
    """
    if s < 0:
        raise ValueError("volume must be nonnegative")
    if mu == 4 and s in IMPOSSIBLE_VOLUMES_4:
        return Verdict.INFEASIBLE
    plan = _plan(mu, s)
    if plan is None:
        return Verdict.UNKNOWN
    trade = _build_base(mu, plan[0])
    for part in plan[1:]:
        trade = compose(trade, _build_base(mu, part))
    if shape is not None:
        trade = place_in_frame(trade, *shape)
    return trade


def place_in_frame(t: MuWayTrade, rows: int, cols: int) -> MuWayTrade:
    """Pad a trade with empty rows and columns to ``rows x cols``."""
    if rows < t.rows or cols < t.n or rows > cols:
        raise ShapeTooSmall(f"a {t.rows}x{t.n} trade does not fit a {rows}x{cols} frame")
    layers = tuple(
        Grid.from_rows([list(r) + [EMPTY] * (cols - t.n) for r in g.cells] + [[EMPTY] * cols] * (rows - t.rows), cols)
        for g in t.layers
    )
    return MuWayTrade(layers, origin=t.origin)
