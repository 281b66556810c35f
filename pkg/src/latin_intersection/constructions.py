"""Constructions of mu-way latin squares with a predictable number of fixed cells."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .completion import CompletionFailure, complete_cells, extend_rectangle
from .core import EMPTY, Grid, MuWayRectangle, MuWaySquare, MuWayTrade
from .intsets import interval, scale, shift, sumset
from .layouts import Layout
from .trades import ParameterViolation, gear_block_rows


class ConstructionError(ValueError):
    pass


class EmbedTooLarge(ConstructionError):
    pass


class AlphabetCollision(ConstructionError):
    pass


def _square(rows: Sequence[Sequence[int]]) -> Grid:
    return Grid.from_rows(rows)


def _same_family(squares: Sequence[MuWaySquare]) -> tuple[int, int]:
    mus = {s.mu for s in squares}
    ns = {s.n for s in squares}
    if len(mus) != 1 or len(ns) != 1:
        raise ConstructionError(f"inputs disagree on mu {sorted(mus)} or order {sorted(ns)}")
    return mus.pop(), ns.pop()


def double_construction(squares: Sequence[MuWaySquare]) -> MuWaySquare:
    """Order ``2n`` from four order-``n`` squares in the pattern ``[[L1, L2'], [L3', L4]]``.

    Primed blocks use symbols shifted by ``n``.  Fixed cells add up.
    """
    if len(squares) != 4:
        raise ConstructionError("need exactly four squares")
    mu, n = _same_family(squares)
    q1, q2, q3, q4 = squares
    layers = []
    for t in range(mu):
        rows = []
        for i in range(n):
            rows.append(list(q1.layers[t].cells[i]) + [v + n for v in q2.layers[t].cells[i]])
        for i in range(n):
            rows.append([v + n for v in q3.layers[t].cells[i]] + list(q4.layers[t].cells[i]))
        layers.append(_square(rows))
    return MuWaySquare(tuple(layers))


def embed_construction(inner: MuWaySquare, order: int) -> MuWaySquare:
    """Place ``inner`` in the corner of an order-``order`` square shared by all layers.

    Fixed cells: ``order**2 - i**2 + k(inner)``.
    """
    i = inner.n
    if i > order // 2:
        raise EmbedTooLarge(f"inner order {i} exceeds {order}//2")
    width = order - i
    layers = []
    ext = None
    for t in range(inner.mu):
        top = [list(inner.layers[t].cells[r]) + [i + 1 + (r + c) % width for c in range(width)] for r in range(i)]
        if ext is None:
            ext = extend_rectangle(top, order)[i:]
        layers.append(_square(top + ext))
    return MuWaySquare(tuple(layers))


def back_circulant_without_diagonal(mu: int, n: int) -> tuple[Grid, ...]:
    """Order ``n+1`` partial layers on symbols ``1..n`` with an empty diagonal.

    Layer ``t`` at ``(r, c)``, ``c != r``: ``1 + ((c - r - 1) mod (n+1) + t) mod n``.
    """
    if mu > n:
        raise ConstructionError(f"mu={mu} exceeds the {n} available symbols")
    size = n + 1
    return tuple(
        Grid.from_rows(
            [[EMPTY if r == c else 1 + (((c - r - 1) % size) + t) % n for c in range(size)] for r in range(size)],
            size,
        )
        for t in range(mu)
    )


def two_n_plus_one(
    base_a: MuWaySquare, base_b: MuWaySquare, diagonal_c: Sequence[Grid] | None = None
) -> MuWaySquare:
    """Order ``2n+1`` from an order-``n+1`` square, an order-``n`` square and a hollow block.

    ``base_a`` uses symbols ``1..n+1`` and keeps them.  ``base_b`` and
    ``diagonal_c`` use ``1..n`` and are shifted to ``n+2..2n+1``.  Layout:
    ``base_b`` top left, the first ``n`` rows of ``base_a`` top right and
    (transposed) bottom left, the last row of ``base_a`` on the bottom-right
    diagonal, ``diagonal_c`` off that diagonal.
    """
    n = base_b.n
    mu = base_b.mu
    if base_a.n != n + 1:
        raise ConstructionError(f"first input must have order {n + 1}, got {base_a.n}")
    if base_a.mu != mu:
        raise ConstructionError("inputs disagree on mu")
    if diagonal_c is None:
        diagonal_c = back_circulant_without_diagonal(mu, n)
    if len(diagonal_c) != mu:
        raise ConstructionError("hollow block has the wrong number of layers")
    size = 2 * n + 1
    layers = []
    for t in range(mu):
        a = base_a.layers[t].cells
        b = base_b.layers[t].cells
        c = diagonal_c[t]
        if c.rows != n + 1 or c.cols != n + 1:
            raise ConstructionError(f"hollow block must be {n + 1}x{n + 1}")
        grid = [[EMPTY] * size for _ in range(size)]
        for i in range(n):
            for j in range(n):
                grid[i][j] = b[i][j] + n + 1
            for j in range(n + 1):
                grid[i][n + j] = a[i][j]
                grid[n + j][i] = a[i][j]
        for r in range(n + 1):
            for col in range(n + 1):
                v = c.cells[r][col]
                if r == col:
                    if v != EMPTY:
                        raise ConstructionError(f"hollow block has a filled diagonal cell ({r},{r})")
                    grid[n + r][n + r] = a[n][r]
                else:
                    if not 1 <= v <= n:
                        raise ConstructionError(f"hollow block symbol {v} at ({r},{col}) outside 1..{n}")
                    grid[n + r][n + col] = v + n + 1
        layers.append(_square(grid))
    return MuWaySquare(tuple(layers))


def two_n_plus_one_set(i_n: frozenset[int], n: int, smaller: Mapping[int, frozenset[int]] | None = None) -> frozenset[int]:
    """Intersection sizes promised at order ``2n+1`` from the order-``n`` spectrum.

    ``(I_n + (n+1)*([0,n-4] u {n}) + C) u X`` with ``C`` and ``X`` as below;
    ``smaller`` supplies the spectra of orders ``1..n-1`` for ``X``.
    """
    if n < 4:
        raise ValueError("needs n >= 4")
    c_set = set()
    for t in range(1, n - 2):
        c_set |= {2 * t * n, 2 * t * n - t, 2 * t * n - n}
    c_set |= {0, 1, 2}
    c_set |= scale(2 * n + 1, interval(0, n - 3) | {n + 1})
    c_set |= scale(n + 1, interval(1, 2 * n - 7) | interval(n + 1, 2 * n - 3))
    main = sumset(i_n, scale(n + 1, interval(0, n - 4) | {n}), c_set) if i_n else frozenset()
    return frozenset(main) | embedding_set(2 * n + 1, n, i_n, smaller)


def embedding_set(order: int, top: int, i_top: frozenset[int], smaller: Mapping[int, frozenset[int]] | None) -> frozenset[int]:
    """``U_{i<=top} (I_i + order^2 - i^2)``, with ``I_top`` given explicitly."""
    out = set()
    spectra = dict(smaller or {})
    spectra[top] = i_top
    for i in range(1, top + 1):
        out |= shift(spectra.get(i, frozenset()), order * order - i * i)
    return frozenset(out)


def cyclic_square(m: int, offset: int = 0) -> list[list[int]]:
    return [[offset + 1 + (r + c) % m for c in range(m)] for r in range(m)]


def trade_into_trade(
    host: MuWaySquare,
    plugs: Sequence[MuWayTrade],
    alphabets: Mapping[int, Sequence[int]] | None = None,
) -> MuWaySquare:
    """Blow each host cell up to an ``m x m`` block.

    Host layer ``l`` contributes ``plugs[l].mu`` layers.  A fixed host cell
    with symbol ``s`` becomes the cyclic square on the alphabet of ``s`` in
    every layer; an unfixed cell becomes plug ``l`` written in the alphabet of
    host layer ``l``'s symbol.  Fixed cells: ``m**2 * k(host)``.
    """
    if len(plugs) != host.mu:
        raise ConstructionError(f"need one plug per host layer ({host.mu}), got {len(plugs)}")
    m = plugs[0].n
    for p in plugs:
        if p.rows != m or p.n != m or p.volume != m * m:
            raise ConstructionError("plugs must be full square trades of one common order")
    n = host.n
    if alphabets is None:
        alphabets = {s: tuple(range((s - 1) * m + 1, s * m + 1)) for s in range(1, n + 1)}
    seen: dict[int, int] = {}
    for s in range(1, n + 1):
        alpha = alphabets.get(s)
        if alpha is None or len(alpha) != m or len(set(alpha)) != m:
            raise ConstructionError(f"host symbol {s} needs an alphabet of {m} distinct symbols")
        for v in alpha:
            if v in seen:
                raise AlphabetCollision(f"symbol {v} shared by host symbols {seen[v]} and {s}")
            seen[v] = s
    size = m * n
    base = cyclic_square(m)
    bits = host.skeleton.bits
    layers = []
    for l, plug in enumerate(plugs):
        for u in range(plug.mu):
            grid = [[0] * size for _ in range(size)]
            for i in range(n):
                for j in range(n):
                    s = host.layers[l].cells[i][j]
                    block = base if bits[i][j] else plug.layers[u].cells
                    alpha = alphabets[s]
                    for r in range(m):
                        for c in range(m):
                            grid[i * m + r][j * m + c] = alpha[block[r][c] - 1]
            layers.append(_square(grid))
    return MuWaySquare(tuple(layers))


@dataclass(frozen=True)
class GearParams:
    mu: int
    a: int
    b: int
    x: int
    y: int
    c: int = 0

    @property
    def n(self) -> int:
        return self.a + self.b + self.c

    @property
    def volume(self) -> int:
        if self.c:
            return self.a * (self.x + self.y) + self.b * self.y
        return self.y * self.b + (self.y + self.x) * self.a

    @property
    def k(self) -> int:
        return self.n * self.n - self.volume

    def check_gear1(self) -> None:
        mu, a, b, x, y = self.mu, self.a, self.b, self.x, self.y
        for ok, text in (
            (self.c == 0, "c = 0"),
            (a >= x + mu - 1, f"a >= x+mu-1 ({a} < {x + mu - 1})"),
            (b >= x + mu - 1, f"b >= x+mu-1 ({b} < {x + mu - 1})"),
            (x >= 1, f"x >= 1 (x = {x})"),
            (y >= mu, f"y >= mu ({y} < {mu})"),
        ):
            if not ok:
                raise ParameterViolation(f"requires {text}")

    def check_gear2(self) -> None:
        mu, a, b, c, x, y = self.mu, self.a, self.b, self.c, self.x, self.y
        for ok, text in (
            (a >= x + mu - 1, f"a >= x+mu-1 ({a} < {x + mu - 1})"),
            (b >= x + mu - 1, f"b >= x+mu-1 ({b} < {x + mu - 1})"),
            (x >= 1, f"x >= 1 (x = {x})"),
            (c >= y, f"c >= y ({c} < {y})"),
            (y >= mu, f"y >= mu ({y} < {mu})"),
            (a + b >= x + y, f"a+b >= x+y ({a + b} < {x + y})"),
        ):
            if not ok:
                raise ParameterViolation(f"requires {text}")


def _mask(lo: int, hi: int) -> int:
    """Bitmask for symbols ``lo..hi``."""
    return ((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1) if hi >= lo else 0


def _base_cells(p: GearParams, base: Grid | None) -> list[list[int]]:
    rows = p.x + p.y
    if base is None:
        return gear_block_rows(p.mu, p.a, p.b, p.x, p.y, p.c)
    if base.rows != rows or base.cols != p.n:
        raise ConstructionError(f"base must be {rows}x{p.n}, got {base.rows}x{base.cols}")
    return [list(r) for r in base.cells]


def gear_layout(p: GearParams, base: Grid | None = None, max_nodes: int = 2_000_000) -> Layout:
    """Complete the block pattern and mark which rows rotate in each column group."""
    if p.c:
        p.check_gear2()
    else:
        p.check_gear1()
    a, b, c, x, y, n = p.a, p.b, p.c, p.x, p.y, p.n
    cells = _base_cells(p, base)
    sym_a, sym_b, sym_c = _mask(1, a), _mask(a + 1, a + b), _mask(a + b + 1, n)
    domains = {}
    for i in range(x + y):
        for j in range(n):
            if j < c:
                domains[(i, j)] = sym_c if i >= x else sym_b | sym_c
            elif j < c + b:
                domains[(i, j)] = (sym_b | sym_c) if i < x else (sym_a | sym_b)
            else:
                domains[(i, j)] = sym_a if i < x + p.mu - 1 else sym_a | sym_b
    done = complete_cells(cells, n, domains, max_nodes=max_nodes)
    fixed = tuple(tuple(j < c or (j < c + b and i < x) for j in range(n)) for i in range(x + y))
    starts = (0, c, c + b) if c else (0, b)
    return Layout(p.mu, n, tuple(map(tuple, done)), fixed, starts)


def gear1_square(p: GearParams, base: Grid | None = None) -> MuWaySquare:
    """Rotate an A-block of ``(x+y) x a`` and a B-block of ``y x b`` one row per layer."""
    if p.c:
        raise ParameterViolation("requires c = 0")
    return gear_layout(p, base).to_square()


def gear2_square(p: GearParams, base: Grid | None = None) -> MuWaySquare:
    """As :func:`gear1_square` with an extra fixed block of ``c`` columns on its own symbols."""
    if p.c < 1:
        raise ParameterViolation("requires c >= y")
    return gear_layout(p, base).to_square()


def pad_rectangle(rect: MuWayRectangle, order: int) -> MuWaySquare:
    """Grow an ``r x n`` mu-way rectangle to an order-``order`` square.

    New columns hold new symbols in a cyclic pattern shared by all layers,
    then rows shared by all layers complete the square.  Fixed cells:
    ``order**2 - volume``.
    """
    r, n = rect.rows, rect.n
    extra = order - n
    if extra < 0:
        raise ConstructionError(f"target order {order} is below {n}")
    if extra and r > extra:
        raise ConstructionError(f"{r} rows need at least {r} new columns, have {extra}")
    tops = []
    for g in rect.layers:
        tops.append([list(g.cells[i]) + [n + 1 + (i + c) % extra for c in range(extra)] for i in range(r)])
    tail = extend_rectangle(tops[0], order)[r:]
    return MuWaySquare(tuple(_square(top + tail) for top in tops))


def frame_square(trade: MuWayTrade, order: int, max_nodes: int = 20_000) -> MuWaySquare:
    """Complete a trade, placed in the top-left corner, to an order-``order`` square.

    Row and column contents of a trade agree across layers, so one completion
    of layer 0 serves every layer.  The transposed placement is tried when
    the direct one fails.  Fixed cells: ``order**2 - volume``.
    """
    last: Exception | None = None
    for flip in (False, True):
        layers = [g.cells for g in trade.layers]
        if flip:
            layers = [tuple(zip(*g)) for g in layers]
        rows, cols = len(layers[0]), len(layers[0][0])
        if rows > order or cols > order:
            last = ConstructionError(f"a {rows}x{cols} trade does not fit order {order}")
            continue
        grids = [[list(r) + [EMPTY] * (order - cols) for r in g] + [[EMPTY] * order for _ in range(order - rows)] for g in layers]
        try:
            done = complete_cells(grids[0], order, max_nodes=max_nodes)
        except CompletionFailure as exc:
            last = exc
            continue
        return MuWaySquare(tuple(
            _square([[g[i][j] or done[i][j] for j in range(order)] for i in range(order)]) for g in grids
        ))
    raise ConstructionError(f"no completion around the trade: {last}")


__all__ = [
    "AlphabetCollision",
    "ConstructionError",
    "EmbedTooLarge",
    "GearParams",
    "back_circulant_without_diagonal",
    "double_construction",
    "embed_construction",
    "embedding_set",
    "frame_square",
    "gear1_square",
    "gear2_square",
    "gear_layout",
    "pad_rectangle",
    "trade_into_trade",
    "two_n_plus_one",
    "two_n_plus_one_set",
]
