"""Rotation layouts: one latin rectangle plus the row groups that rotate per layer.

A layout splits the columns into consecutive groups.  Inside each group the
rows that are not marked as fixed form a cyclic list; layer ``t`` replaces
each such row by the row ``t`` steps further along the list.  Marked rows
keep the same entries in every layer.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Grid, MuWayRectangle, MuWaySquare, assemble_mu_way


@dataclass(frozen=True)
class Layout:
    mu: int
    n: int
    rows: tuple[tuple[int, ...], ...]
    fixed: tuple[tuple[bool, ...], ...]
    group_starts: tuple[int, ...] = (0,)

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != self.n or len(self.fixed[i]) != self.n:
                raise ValueError(f"layout row {i} is ragged")
        starts = self.group_starts
        if not starts or starts[0] != 0 or list(starts) != sorted(set(starts)) or starts[-1] >= max(self.n, 1):
            raise ValueError(f"bad column groups {starts}")
        for g, (lo, hi) in enumerate(self.groups()):
            for i in range(len(self.rows)):
                marks = set(self.fixed[i][lo:hi])
                if len(marks) > 1:
                    raise ValueError(f"row {i} mixes fixed and rotating cells in column group {g}")

    def groups(self) -> list[tuple[int, int]]:
        ends = list(self.group_starts[1:]) + [self.n]
        return list(zip(self.group_starts, ends))

    def rotating_rows(self, group: int) -> list[int]:
        lo, _ = self.groups()[group]
        return [i for i in range(len(self.rows)) if not self.fixed[i][lo]]

    def volume(self) -> int:
        return sum(len(self.rotating_rows(g)) * (hi - lo) for g, (lo, hi) in enumerate(self.groups()))

    @property
    def label_k(self) -> int:
        return self.n * self.n - self.volume()

    def layer(self, t: int) -> Grid:
        out = [list(r) for r in self.rows]
        for g, (lo, hi) in enumerate(self.groups()):
            cyc = self.rotating_rows(g)
            for p, i in enumerate(cyc):
                src = cyc[(p + t) % len(cyc)]
                out[i][lo:hi] = self.rows[src][lo:hi]
        return Grid.from_rows(out, self.n)

    def expand(self) -> MuWayRectangle:
        return assemble_mu_way([self.layer(t) for t in range(self.mu)])

    def to_square(self) -> MuWaySquare:
        """Complete the base rectangle once and share the completion across layers."""
        from .completion import extend_rectangle

        extra = extend_rectangle(self.rows, self.n)[len(self.rows):]
        layers = [Grid.from_rows([list(r) for r in self.layer(t).cells] + extra, self.n) for t in range(self.mu)]
        return MuWaySquare(tuple(layers))
