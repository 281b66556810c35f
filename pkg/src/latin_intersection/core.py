"""Grids, mu-way latin squares and rectangles, trades and skeletons.

Symbols are the integers ``1..n``; ``EMPTY`` (0) marks an unfilled cell.
Every public constructor validates its input, so holding an instance means
the invariants hold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

EMPTY = 0


class LatinError(ValueError):
    """Base class for structural violations."""


class DimensionError(LatinError):
    pass


class CellConflict(LatinError):
    def __init__(self, row: int, col: int, entries: Sequence[int]):
        self.row, self.col, self.entries = row, col, tuple(entries)
        super().__init__(f"cell ({row},{col}) holds {self.entries}: neither all equal nor all distinct")


class NonLatinLayer(LatinError):
    def __init__(self, index: int, violations: Sequence[tuple[int, int, int]]):
        self.index, self.violations = index, list(violations)
        super().__init__(f"layer {index} is not latin; first violation (row, col, symbol) = {self.violations[0]}")


class TradeError(LatinError):
    pass


class LatinReport(NamedTuple):
    ok: bool
    violations: list

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Grid:
    """An ``rows x cols`` array of symbols in ``1..cols`` or EMPTY."""

    cells: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        if len(self.cells) > self.cols:
            raise DimensionError(f"{len(self.cells)} rows exceed {self.cols} columns")
        for i, row in enumerate(self.cells):
            if len(row) != self.cols:
                raise DimensionError(f"row {i} has {len(row)} cells, expected {self.cols}")
            for j, v in enumerate(row):
                if not (v == EMPTY or 1 <= v <= self.cols):
                    raise DimensionError(f"symbol {v} at ({i},{j}) outside 1..{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "Grid":
        cells = tuple(tuple(int(v) for v in r) for r in rows)
        if cols is None:
            cols = len(cells[0]) if cells else 0
        return cls(cells, cols)

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i][j]

    def filled(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, row in enumerate(self.cells) for j, v in enumerate(row) if v != EMPTY)

    def is_full(self) -> bool:
        return all(v != EMPTY for row in self.cells for v in row)

    def transpose(self) -> "Grid":
        return Grid(tuple(zip(*self.cells)), self.rows) if self.cells else self


def latin_violations(g: Grid) -> list[tuple[int, int, int]]:
    """Cells repeating a symbol already seen earlier in their row or column."""
    bad = []
    col_seen = [set() for _ in range(g.cols)]
    for i, row in enumerate(g.cells):
        row_seen = set()
        for j, v in enumerate(row):
            if v == EMPTY:
                continue
            if v in row_seen or v in col_seen[j]:
                bad.append((i, j, v))
            row_seen.add(v)
            col_seen[j].add(v)
    return bad


def validate_partial_latin(g: Grid) -> LatinReport:
    bad = latin_violations(g)
    return LatinReport(not bad, bad)


def _cell_kind(entries: Sequence[int]) -> str:
    first = entries[0]
    if all(e == first for e in entries):
        return "fixed"
    if len(set(entries)) == len(entries):
        return "distinct"
    return "conflict"


@dataclass(frozen=True)
class Skeleton:
    """0/1 matrix of fixed cells with its line sums."""

    bits: tuple[tuple[int, ...], ...]
    cols: int

    @property
    def rows(self) -> int:
        return len(self.bits)

    @property
    def n(self) -> int:
        return self.cols

    @property
    def row_seq(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.bits)

    @property
    def col_seq(self) -> tuple[int, ...]:
        return tuple(sum(self.bits[i][j] for i in range(self.rows)) for j in range(self.cols))

    @property
    def weight(self) -> int:
        return sum(self.row_seq)


@dataclass(frozen=True)
class MuWayRectangle:
    """``mu`` aligned latin rectangles whose cells are all-equal or pairwise distinct."""

    layers: tuple[Grid, ...]
    skeleton: Skeleton = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_layers(self.layers, require_square=False)
        object.__setattr__(self, "skeleton", _skeleton(self.layers))

    @property
    def mu(self) -> int:
        return len(self.layers)

    @property
    def n(self) -> int:
        return self.layers[0].cols

    @property
    def rows(self) -> int:
        return self.layers[0].rows

    @property
    def is_square(self) -> bool:
        return self.rows == self.n

    def cell(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(g.cells[i][j] for g in self.layers)

    @property
    def fixed_cells(self) -> int:
        return self.skeleton.weight

    @property
    def trade_volume(self) -> int:
        return self.rows * self.n - self.fixed_cells

    @property
    def label_k(self) -> int:
        """Fixed cells after completing with rows shared by every layer."""
        return self.n * self.n - self.trade_volume


@dataclass(frozen=True)
class MuWaySquare(MuWayRectangle):
    def __post_init__(self):
        _check_layers(self.layers, require_square=True)
        object.__setattr__(self, "skeleton", _skeleton(self.layers))

    @classmethod
    def _unchecked(cls, layers: tuple[Grid, ...]) -> "MuWaySquare":
        obj = object.__new__(cls)
        object.__setattr__(obj, "layers", layers)
        object.__setattr__(obj, "skeleton", _skeleton(layers))
        return obj

    @property
    def k(self) -> int:
        return self.skeleton.weight


def _check_layers(layers: Sequence[Grid], require_square: bool) -> None:
    if len(layers) < 2:
        raise DimensionError("a mu-way object needs at least two layers")
    r, n = layers[0].rows, layers[0].cols
    for t, g in enumerate(layers):
        if (g.rows, g.cols) != (r, n):
            raise DimensionError(f"layer {t} is {g.rows}x{g.cols}, expected {r}x{n}")
        if not g.is_full():
            raise DimensionError(f"layer {t} has empty cells")
    if require_square and r != n:
        raise DimensionError(f"expected a square, got {r}x{n}")
    for t, g in enumerate(layers):
        bad = latin_violations(g)
        if bad:
            raise NonLatinLayer(t, bad)
    for i in range(r):
        for j in range(n):
            entries = [g.cells[i][j] for g in layers]
            if _cell_kind(entries) == "conflict":
                raise CellConflict(i, j, entries)


def _skeleton(layers: Sequence[Grid]) -> Skeleton:
    first = layers[0].cells
    bits = tuple(
        tuple(int(all(g.cells[i][j] == v for g in layers[1:])) for j, v in enumerate(row))
        for i, row in enumerate(first)
    )
    return Skeleton(bits, layers[0].cols)


def assemble_mu_way(layers: Sequence[Grid | Sequence[Sequence[int]]]) -> MuWayRectangle:
    """Validate ``layers`` and return a square when they are square, else a rectangle."""
    grids = tuple(g if isinstance(g, Grid) else Grid.from_rows(g) for g in layers)
    if grids and grids[0].rows == grids[0].cols:
        return MuWaySquare(grids)
    return MuWayRectangle(grids)


def intersection_size(sq: MuWayRectangle) -> int:
    return sq.fixed_cells


def skeleton_of(sq: MuWayRectangle) -> Skeleton:
    return sq.skeleton


@dataclass(frozen=True)
class MuWayTrade:
    """Aligned partial rectangles on a common cell set, cellwise distinct, same line contents."""

    layers: tuple[Grid, ...]
    origin: str = field(default="", compare=False)

    def __post_init__(self):
        problems = trade_problems(self.layers)
        if problems:
            raise TradeError(problems[0])

    @property
    def mu(self) -> int:
        return len(self.layers)

    @property
    def rows(self) -> int:
        return self.layers[0].rows

    @property
    def n(self) -> int:
        return self.layers[0].cols

    @property
    def cells(self) -> frozenset[tuple[int, int]]:
        return self.layers[0].filled()

    @property
    def volume(self) -> int:
        return len(self.cells)

    def row_content(self, i: int) -> frozenset[int]:
        return row_col_content(self, "row", i)

    def col_content(self, j: int) -> frozenset[int]:
        return row_col_content(self, "col", j)


def _line(g: Grid, which: str, index: int) -> list[int]:
    if which == "row":
        return [v for v in g.cells[index] if v != EMPTY]
    return [g.cells[i][index] for i in range(g.rows) if g.cells[i][index] != EMPTY]


def trade_problems(layers: Sequence[Grid]) -> list[str]:
    """Every way ``layers`` fails to be a trade (empty list when it is one)."""
    if len(layers) < 2:
        return ["a trade needs at least two layers"]
    shape = (layers[0].rows, layers[0].cols)
    out = []
    for t, g in enumerate(layers):
        if (g.rows, g.cols) != shape:
            return [f"layer {t} has shape {g.rows}x{g.cols}, expected {shape[0]}x{shape[1]}"]
        bad = latin_violations(g)
        if bad:
            out.append(f"layer {t} not latin at (row, col, symbol) {bad[0]}")
    cells = layers[0].filled()
    for t, g in enumerate(layers[1:], 1):
        if g.filled() != cells:
            out.append(f"layer {t} fills a different cell set")
            return out
    for i, j in sorted(cells):
        entries = [g.cells[i][j] for g in layers]
        if len(set(entries)) != len(entries):
            out.append(f"cell ({i},{j}) entries {tuple(entries)} not pairwise distinct")
    for which, count in (("row", shape[0]), ("col", shape[1])):
        for idx in range(count):
            ref = sorted(_line(layers[0], which, idx))
            for t, g in enumerate(layers[1:], 1):
                if sorted(_line(g, which, idx)) != ref:
                    out.append(f"{which} {idx} content differs between layer 0 and layer {t}")
    return out


def row_col_content(t: MuWayTrade, which: str, index: int) -> frozenset[int]:
    limit = t.rows if which == "row" else t.n
    if which not in ("row", "col"):
        raise ValueError("which must be 'row' or 'col'")
    if not 0 <= index < limit:
        raise IndexError(f"{which} {index} out of range 0..{limit - 1}")
    return frozenset(_line(t.layers[0], which, index))


def extract_trade(sq: MuWayRectangle) -> MuWayTrade:
    """Blank the fixed cells; what remains is a trade."""
    bits = sq.skeleton.bits
    layers = tuple(
        Grid(tuple(tuple(EMPTY if bits[i][j] else v for j, v in enumerate(row)) for i, row in enumerate(g.cells)), g.cols)
        for g in sq.layers
    )
    try:
        return MuWayTrade(layers)
    except TradeError as exc:  # pragma: no cover - would mean a bug here
        raise AssertionError(f"extracted trade is invalid: {exc}") from exc


def local_content_violations(t: MuWayTrade) -> list[tuple[int, int, str]]:
    """Filled cells breaking the row/column content intersection bounds."""
    mu = t.mu
    rows = [t.row_content(i) for i in range(t.rows)]
    cols = [t.col_content(j) for j in range(t.n)]
    bad = []
    for i, j in sorted(t.cells):
        if len(rows[i] & cols[j]) < mu:
            bad.append((i, j, "small-intersection"))
        elif len(rows[i]) == mu and len(cols[j]) == mu and rows[i] != cols[j]:
            bad.append((i, j, "tight-mismatch"))
    return bad
