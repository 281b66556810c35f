"""Exhaustive and first-witness search for mu-way latin squares with k fixed cells.

The outer loop walks fixed-cell patterns (skeletons) up to row and column
permutation.  For each pattern the inner loop fills cells in row-major
order: a fixed cell takes one symbol for every layer, a traded cell takes a
tuple of pairwise distinct symbols.  Forward checking (every open cell keeps
a usable value in every layer, traded cells keep a system of distinct
representatives, every row and column of every layer can still receive each
missing symbol) is always on.  The named prunes below add reasoning specific
to mu-way squares and can be switched off one by one.

Symmetry: layer 0 has first row ``1..n`` (relabel symbols), and at the first
traded cell layers ``1..mu-1`` appear in increasing order (permute layers).
A node is one attempted assignment of a cell.
"""
from __future__ import annotations

import enum
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, NamedTuple, Sequence

from .core import Grid, MuWaySquare

TRAVERSAL_VERSION = "cellsync-v1"

PRUNES = (
    "line-sums",
    "sequences",
    "transversals",
    "heavy-symbol",
    "content-intersection",
    "column-pair",
)
ALL_PRUNES = frozenset(PRUNES)

# Forbidden sub-multisets of a sorted line-sum sequence, keyed by (mu, n).
FORBIDDEN_SEQUENCES = {
    (4, 5): ((5, 1),),
    (4, 6): ((6, 2), (6, 6, 1)),
    (4, 7): ((7, 3), (7, 7, 2), (7, 7, 7, 1)),
}


class Status(enum.Enum):
    WITNESS = "WITNESS"
    NONEXISTENT = "NONEXISTENT"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class SearchSpec:
    mu: int
    n: int
    k: int
    mode: str = "exhaustive"
    budget: int = 0
    prunes: frozenset = ALL_PRUNES
    workers: int = 1

    def __post_init__(self):
        if self.mu < 2 or self.n < 1:
            raise ValueError("need mu >= 2 and n >= 1")
        if not 0 <= self.k <= self.n * self.n:
            raise ValueError(f"k={self.k} outside [0, {self.n * self.n}]")
        if self.mode not in ("exhaustive", "first-witness"):
            raise ValueError(f"unknown mode {self.mode!r}")
        unknown = set(self.prunes) - ALL_PRUNES
        if unknown:
            raise ValueError(f"unknown prunes {sorted(unknown)}")
        object.__setattr__(self, "prunes", frozenset(self.prunes))


@dataclass
class SearchOutcome:
    status: Status
    spec: SearchSpec
    nodes: int
    skeletons: int
    seconds: float = field(compare=False)
    witness: MuWaySquare | None = None
    per_skeleton: list = field(default_factory=list, compare=False)

    @property
    def certificate(self) -> str:
        return render_certificate(self)


class PruneResult(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------- prune rules


def _contains(seq: Sequence[int], pattern: Sequence[int]) -> bool:
    need: dict[int, int] = {}
    for v in pattern:
        need[v] = need.get(v, 0) + 1
    return all(list(seq).count(v) >= c for v, c in need.items())


def prune_row_sequence(mu: int, n: int, seq: Sequence[int]) -> PruneResult:
    """Reject line-sum sequences containing a forbidden sub-multiset."""
    for pattern in FORBIDDEN_SEQUENCES.get((mu, n), ()):
        if _contains(seq, pattern):
            return PruneResult(False, "{" + ",".join(map(str, pattern)) + "}")
    return PruneResult(True)


def line_sum_ok(mu: int, n: int, fixed_in_line: int) -> bool:
    """A line with traded cells has at least ``mu`` of them."""
    traded = n - fixed_in_line
    return traded == 0 or traded >= mu


def required_transversals(mu: int, n: int, k: int) -> int:
    """Lower bound on symbols whose every occurrence is fixed."""
    return max(0, math.ceil(n - (n * n - k) / mu))


def prune_symbol_counts(
    mu: int, n: int, k: int, fixed_counts: Sequence[int], in_trade: Sequence[bool]
) -> PruneResult:
    """Symbol-count rules on a partial assignment.

    ``fixed_counts[v]`` counts fixed cells holding symbol ``v`` (index 0 is
    symbol 1); ``in_trade[v]`` says whether ``v`` already sits in a traded cell.
    """
    for v, (c, t) in enumerate(zip(fixed_counts, in_trade), 1):
        if t and c >= n - mu + 1:
            return PruneResult(False, f"symbol {v} is fixed {c} times and also traded")
    free = sum(1 for t in in_trade if not t)
    need = required_transversals(mu, n, k)
    if free < need:
        return PruneResult(False, f"only {free} symbols can stay untraded, need {need}")
    return PruneResult(True)


def prune_local_content(
    mu: int,
    row_sets: Sequence[frozenset[int]],
    col_sets: Sequence[frozenset[int]],
    cells: Iterable[tuple[int, int]],
) -> PruneResult:
    """Row/column content rules for traded cells.

    ``row_sets[i]`` and ``col_sets[j]`` bound the contents of the traded part
    of row ``i`` and column ``j`` from above.
    """
    cells = list(cells)
    for i, j in cells:
        common = row_sets[i] & col_sets[j]
        if len(common) < mu:
            return PruneResult(False, f"cell ({i},{j}) sees only {len(common)} common symbols")
        if len(row_sets[i]) == mu and len(col_sets[j]) == mu and row_sets[i] != col_sets[j]:
            return PruneResult(False, f"cell ({i},{j}) row and column contents of size {mu} differ")
    by_col: dict[int, list[int]] = {}
    for i, j in cells:
        by_col.setdefault(j, []).append(i)
    for j, rows in by_col.items():
        if len(col_sets[j]) != mu + 1:
            continue
        tight = [i for i in rows if len(row_sets[i]) == mu]
        for i1, i2 in combinations(tight, 2):
            r1, r2 = row_sets[i1], row_sets[i2]
            if (r1 | r2) != col_sets[j] or len(r1 & r2) != mu - 1:
                return PruneResult(False, f"rows {i1},{i2} against column {j} of size {mu + 1}")
    return PruneResult(True)


# ------------------------------------------------------------ skeleton listing


def _partitions(total: int, parts: int, cap: int) -> list[tuple[int, ...]]:
    """Nonincreasing tuples of length ``parts`` with entries in ``[0, cap]``."""
    out = []

    def rec(prefix, left, slots, hi):
        if slots == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(hi, left), -1, -1):
            if v * slots < left:
                break
            rec(prefix + [v], left - v, slots - 1, v)

    rec([], total, parts, cap)
    return out


def _seq_ok(mu: int, n: int, k: int, seq: Sequence[int], prunes: frozenset) -> bool:
    if "line-sums" in prunes and not all(line_sum_ok(mu, n, v) for v in seq):
        return False
    if "sequences" in prunes and not prune_row_sequence(mu, n, seq):
        return False
    if "transversals" in prunes and min(seq) < required_transversals(mu, n, k):
        return False
    return True


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    tables = []
    for perm in permutations(range(n)):
        tables.append(tuple(sum(((m >> perm[c]) & 1) << c for c in range(n)) for m in range(1 << n)))
    return tuple(tables)


def _canonical(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Smallest sorted row tuple over all column permutations."""
    return min(tuple(sorted(table[r] for r in rows)) for table in _perm_tables(n))


def enumerate_skeletons(mu: int, n: int, k: int, prunes: frozenset = ALL_PRUNES) -> list[tuple[tuple[int, ...], ...]]:
    """Fixed-cell patterns with ``k`` ones, one per row/column permutation class.

    Rows are sorted by nonincreasing row sum.  Patterns are returned as
    tuples of 0/1 rows in a deterministic order.
    """
    row_seqs = [s for s in _partitions(k, n, n) if _seq_ok(mu, n, k, s, prunes)]
    col_ok = {s for s in row_seqs}
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    order: list[tuple[int, ...]] = []
    for rs in row_seqs:
        masks_by_weight = {w: [m for m in range(1 << n) if m.bit_count() == w] for w in set(rs)}
        chosen: list[int] = []

        def rec(i, colsum):
            if i == n:
                cs = tuple(sorted(colsum, reverse=True))
                if cs not in col_ok:
                    return
                key = _canonical(chosen, n) if n <= 7 else tuple(sorted(chosen))
                if key not in found:
                    found[key] = tuple(chosen)
                    order.append(key)
                return
            w = rs[i]
            rest = sum(rs[i + 1:])
            for m in reversed(masks_by_weight[w]):
                if i > 0 and rs[i - 1] == w and m > chosen[-1]:
                    continue
                new = [colsum[c] + ((m >> c) & 1) for c in range(n)]
                if rest > sum(n - v for v in new):
                    continue
                chosen.append(m)
                rec(i + 1, new)
                chosen.pop()

        rec(0, [0] * n)
    out = []
    for key in order:
        rows = found[key]
        out.append(tuple(tuple((r >> c) & 1 for c in range(n)) for r in rows))
    return out


# ----------------------------------------------------------------- inner fill


class _Budget(Exception):
    pass


class _Engine:
    """Cell-synchronous backtracking over one skeleton."""

    def __init__(self, mu: int, n: int, k: int, bits, prunes: frozenset, cap: int, first_only: bool):
        self.mu, self.n, self.k = mu, n, k
        self.bits = bits
        self.prunes = prunes
        self.cap = cap
        self.first_only = first_only
        self.full = (1 << n) - 1
        self.nodes = 0
        self.order = [(i, j) for i in range(n) for j in range(n)]
        self.row_used = [[0] * n for _ in range(mu)]
        self.col_used = [[0] * n for _ in range(mu)]
        self.grid = [[[0] * n for _ in range(n)] for _ in range(mu)]
        self.fix_row = [0] * n
        self.fix_col = [0] * n
        self.fixed_count = [0] * (n + 1)
        self.traded_syms = 0
        self.assigned = [[False] * n for _ in range(n)]
        self.trade_cells_row = [[j for j in range(n) if not bits[i][j]] for i in range(n)]
        self.trade_cells_col = [[i for i in range(n) if not bits[i][j]] for j in range(n)]
        self.fixed_left_row = [sum(bits[i]) for i in range(n)]
        self.fixed_left_col = [sum(bits[i][j] for i in range(n)) for j in range(n)]
        self.first_trade = next(((i, j) for i, j in self.order if not bits[i][j]), None)
        self.heavy = n - mu + 1
        self.need_free = required_transversals(mu, n, k)
        self.subsets = [
            [t for t in range(mu) if s >> t & 1] for s in range(1, 1 << mu)
        ]
        self.witness = None

    # candidate masks
    def _fixed_cand(self, i, j):
        used = 0
        for t in range(self.mu):
            used |= self.row_used[t][i] | self.col_used[t][j]
        c = self.full & ~used
        if i == 0:
            c &= 1 << j
        return c

    def _trade_cands(self, i, j):
        out = []
        ban = 0
        if "heavy-symbol" in self.prunes:
            for v in range(1, self.n + 1):
                if self.fixed_count[v] >= self.heavy:
                    ban |= 1 << (v - 1)
        for t in range(self.mu):
            c = self.full & ~(self.row_used[t][i] | self.col_used[t][j] | ban)
            if t == 0 and i == 0:
                c &= 1 << j
            out.append(c)
        return out

    def _sdr(self, cands) -> bool:
        mu = self.mu
        if min(c.bit_count() for c in cands) >= mu:
            return True
        for sub in self.subsets:
            u = 0
            for t in sub:
                u |= cands[t]
            if u.bit_count() < len(sub):
                return False
        return True

    def _cell_ok(self, i, j) -> bool:
        if self.bits[i][j]:
            return self._fixed_cand(i, j) != 0
        return self._sdr(self._trade_cands(i, j))

    def _open_union(self, cells, t):
        u = 0
        for i, j in cells:
            if self.bits[i][j]:
                u |= self._fixed_cand(i, j)
            else:
                u |= self.full & ~(self.row_used[t][i] | self.col_used[t][j])
        return u

    def _row_cover(self, i) -> bool:
        cells = [(i, j) for j in range(self.n) if not self.assigned[i][j]]
        for t in range(self.mu):
            missing = self.full & ~self.row_used[t][i]
            if missing & ~self._open_union(cells, t):
                return False
        return True

    def _col_cover(self, j) -> bool:
        cells = [(i, j) for i in range(self.n) if not self.assigned[i][j]]
        for t in range(self.mu):
            missing = self.full & ~self.col_used[t][j]
            if missing & ~self._open_union(cells, t):
                return False
        return True

    def _consistent(self, i, j) -> bool:
        n = self.n
        for jj in range(n):
            if not self.assigned[i][jj] and not self._cell_ok(i, jj):
                return False
        for ii in range(n):
            if not self.assigned[ii][j] and not self._cell_ok(ii, j):
                return False
        if not self._row_cover(i) or not self._col_cover(j):
            return False
        for ii in range(i + 1, n):
            if not self._row_cover(ii):
                return False
        for jj in range(n):
            if jj != j and not self.assigned[i][jj] and not self._col_cover(jj):
                return False
        return self._content_checks(i, j)

    # prunes tied to the structure of mu-way squares
    def _content_checks(self, i, j) -> bool:
        p = self.prunes
        mu, n = self.mu, self.n
        if "heavy-symbol" in p or "transversals" in p:
            if "heavy-symbol" in p:
                for v in range(1, n + 1):
                    if self.fixed_count[v] >= self.heavy and self.traded_syms >> (v - 1) & 1:
                        return False
            if "transversals" in p:
                free = n - self.traded_syms.bit_count()
                if free < self.need_free:
                    return False
        if "content-intersection" in p:
            for jj in self.trade_cells_row[i]:
                if (self.full & ~(self.fix_row[i] | self.fix_col[jj])).bit_count() < mu:
                    return False
            for ii in self.trade_cells_col[j]:
                if (self.full & ~(self.fix_row[ii] | self.fix_col[j])).bit_count() < mu:
                    return False
        if "column-pair" in p and self.bits[i][j]:
            if not self._pair_rule_col(j) or not self._pair_rule_row(i):
                return False
        return True

    def _pair_rule_col(self, j) -> bool:
        mu, n = self.mu, self.n
        if self.fixed_left_col[j] or len(self.trade_cells_col[j]) != mu + 1:
            return True
        cj = self.full & ~self.fix_col[j]
        tight = [
            i for i in self.trade_cells_col[j] if not self.fixed_left_row[i] and len(self.trade_cells_row[i]) == mu
        ]
        for a, b in combinations(tight, 2):
            ra, rb = self.full & ~self.fix_row[a], self.full & ~self.fix_row[b]
            if (ra | rb) != cj or (ra & rb).bit_count() != mu - 1:
                return False
        return True

    def _pair_rule_row(self, i) -> bool:
        mu = self.mu
        if self.fixed_left_row[i] or len(self.trade_cells_row[i]) != mu + 1:
            return True
        ri = self.full & ~self.fix_row[i]
        tight = [
            j for j in self.trade_cells_row[i] if not self.fixed_left_col[j] and len(self.trade_cells_col[j]) == mu
        ]
        for a, b in combinations(tight, 2):
            ca, cb = self.full & ~self.fix_col[a], self.full & ~self.fix_col[b]
            if (ca | cb) != ri or (ca & cb).bit_count() != mu - 1:
                return False
        return True

    def _tick(self):
        self.nodes += 1
        if self.cap and self.nodes > self.cap:
            raise _Budget

    # search
    def run(self) -> bool:
        for i in range(self.n):
            if not self._row_cover(i):
                return False
        return self._dfs(0)

    def _place(self, i, j, vals, fixed):
        bit_union = 0
        for t, v in enumerate(vals):
            b = 1 << (v - 1)
            self.row_used[t][i] |= b
            self.col_used[t][j] |= b
            self.grid[t][i][j] = v
            bit_union |= b
        self.assigned[i][j] = True
        if fixed:
            v = vals[0]
            self.fix_row[i] |= 1 << (v - 1)
            self.fix_col[j] |= 1 << (v - 1)
            self.fixed_count[v] += 1
            self.fixed_left_row[i] -= 1
            self.fixed_left_col[j] -= 1
            return 0
        added = bit_union & ~self.traded_syms
        self.traded_syms |= bit_union
        return added

    def _unplace(self, i, j, vals, fixed, added):
        for t, v in enumerate(vals):
            b = 1 << (v - 1)
            self.row_used[t][i] &= ~b
            self.col_used[t][j] &= ~b
            self.grid[t][i][j] = 0
        self.assigned[i][j] = False
        if fixed:
            v = vals[0]
            self.fix_row[i] &= ~(1 << (v - 1))
            self.fix_col[j] &= ~(1 << (v - 1))
            self.fixed_count[v] -= 1
            self.fixed_left_row[i] += 1
            self.fixed_left_col[j] += 1
        else:
            self.traded_syms &= ~added

    def _dfs(self, pos: int) -> bool:
        if pos == len(self.order):
            self.witness = tuple(tuple(tuple(r) for r in self.grid[t]) for t in range(self.mu))
            return True
        i, j = self.order[pos]
        if self.bits[i][j]:
            cand = self._fixed_cand(i, j)
            while cand:
                b = cand & -cand
                cand ^= b
                v = b.bit_length()
                self._tick()
                vals = (v,) * self.mu
                self._place(i, j, vals, True)
                if self._consistent(i, j) and self._dfs(pos + 1):
                    return True
                self._unplace(i, j, vals, True, 0)
            return False
        cands = self._trade_cands(i, j)
        ordered = (i, j) == self.first_trade
        for vals in self._tuples(cands, ordered):
            self._tick()
            added = self._place(i, j, vals, False)
            if self._consistent(i, j) and self._dfs(pos + 1):
                return True
            self._unplace(i, j, vals, False, added)
        return False

    def _tuples(self, cands, ordered):
        mu = self.mu
        chosen: list[int] = []

        def rec(t, used):
            if t == mu:
                yield tuple(chosen)
                return
            c = cands[t] & ~used
            if ordered and t >= 2:
                c &= ~((1 << chosen[-1]) - 1)
            while c:
                b = c & -c
                c ^= b
                chosen.append(b.bit_length())
                yield from rec(t + 1, used | b)
                chosen.pop()

        yield from rec(0, 0)


def _run_skeleton(args) -> tuple[bool, int, object]:
    mu, n, k, bits, prunes, cap = args
    eng = _Engine(mu, n, k, bits, prunes, cap, True)
    try:
        found = eng.run()
    except _Budget:
        return (False, -1, None)
    return (found, eng.nodes, eng.witness)


# ---------------------------------------------------------------- entry point


def search(spec: SearchSpec) -> SearchOutcome:
    """Run the search described by ``spec``.

    Budgets count nodes cumulatively over skeletons in their listed order,
    so results do not depend on ``spec.workers``.
    """
    start = time.perf_counter()
    skeletons = enumerate_skeletons(spec.mu, spec.n, spec.k, spec.prunes)
    jobs = [(spec.mu, spec.n, spec.k, bits, spec.prunes, spec.budget) for bits in skeletons]
    total = 0
    per = []
    results = _results(jobs, spec.workers)
    for idx, res in enumerate(results):
        found, nodes, grid = res
        if nodes < 0:
            nodes = spec.budget + 1
        if spec.budget and total + nodes > spec.budget:
            per.append((idx, spec.budget - total, "cut"))
            return _finish(spec, Status.BUDGET_EXCEEDED, spec.budget, len(skeletons), start, None, per)
        total += nodes
        per.append((idx, nodes, "witness" if found else "none"))
        if found:
            layers = tuple(Grid(g, spec.n) for g in grid)
            sq = MuWaySquare(layers)
            if sq.k != spec.k:
                raise AssertionError(f"witness has k={sq.k}, expected {spec.k}")
            return _finish(spec, Status.WITNESS, total, len(skeletons), start, sq, per)
    return _finish(spec, Status.NONEXISTENT, total, len(skeletons), start, None, per)


def _results(jobs, workers):
    if workers <= 1 or len(jobs) < 2:
        for job in jobs:
            yield _run_skeleton(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_skeleton, job) for job in jobs]
        try:
            for fut in futures:
                res = fut.result()
                yield res
                if res[0]:
                    break
        finally:
            for fut in futures:
                fut.cancel()


def _finish(spec, status, nodes, count, start, witness, per):
    return SearchOutcome(status, spec, nodes, count, time.perf_counter() - start, witness, per)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("LI_THREADS", "1")))
    except ValueError:
        return 1


def render_certificate(out: SearchOutcome) -> str:
    s = out.spec
    lines = [
        f"certificate mu={s.mu} n={s.n} k={s.k} mode={s.mode}",
        f"status {out.status.value}",
        f"traversal {TRAVERSAL_VERSION}",
        "symmetry layer0-row0-identity; first-traded-cell layers 1..mu-1 increasing; skeletons up to row/column permutation",
        "prunes " + (",".join(p for p in PRUNES if p in s.prunes) or "none"),
        f"budget {s.budget}",
        f"skeletons {out.skeletons}",
        f"nodes {out.nodes}",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> tuple[SearchSpec, Status, int, int]:
    fields = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, rest = line.partition(" ")
        fields[key] = rest.strip()
    head = dict(part.split("=", 1) for part in fields["certificate"].split())
    prunes = frozenset() if fields["prunes"] == "none" else frozenset(fields["prunes"].split(","))
    if fields.get("traversal") != TRAVERSAL_VERSION:
        raise ValueError(f"certificate was produced by traversal {fields.get('traversal')!r}")
    spec = SearchSpec(int(head["mu"]), int(head["n"]), int(head["k"]), head["mode"], int(fields["budget"]), prunes)
    return spec, Status(fields["status"]), int(fields["skeletons"]), int(fields["nodes"])


def replay_certificate(text: str) -> bool:
    """Re-run the recorded search and compare status, skeleton and node counts."""
    spec, status, skeletons, nodes = parse_certificate(text)
    out = search(spec)
    return (out.status, out.skeletons, out.nodes) == (status, skeletons, nodes)


# --------------------------------------------------------------- brute force


def latin_squares(n: int, first_row_identity: bool = False):
    """All latin squares of order ``n`` (rows as tuples), by plain backtracking."""
    grid = [[0] * n for _ in range(n)]
    rows = [0] * n
    cols = [0] * n

    def rec(pos):
        if pos == n * n:
            yield tuple(tuple(r) for r in grid)
            return
        i, j = divmod(pos, n)
        if first_row_identity and i == 0:
            opts = [j + 1]
        else:
            opts = range(1, n + 1)
        for v in opts:
            b = 1 << v
            if rows[i] & b or cols[j] & b:
                continue
            rows[i] |= b
            cols[j] |= b
            grid[i][j] = v
            yield from rec(pos + 1)
            rows[i] ^= b
            cols[j] ^= b
            grid[i][j] = 0

    yield from rec(0)


class OracleCapExceeded(ValueError):
    pass


def brute_force_oracle(mu: int, n: int, cap: int = 4) -> frozenset[int]:
    """Every achievable fixed-cell count, by layering whole latin squares.

    Layer 0 ranges over squares with first row ``1..n``; each further layer
    ranges over all squares, filtered with array operations against the
    layers chosen so far.  Independent of :func:`search`.
    """
    import numpy as np

    if n > cap:
        raise OracleCapExceeded(f"order {n} exceeds the oracle cap {cap}")
    everything = np.array([sum(sq, ()) for sq in latin_squares(n)], dtype=np.int8)
    firsts = np.array([sum(sq, ()) for sq in latin_squares(n, True)], dtype=np.int8)
    found: set[int] = set()
    cells = n * n

    def extend(stack, agree):
        if len(stack) == mu:
            found.add(int(agree.sum()))
            return
        ok = np.ones(len(everything), dtype=bool)
        base = stack[0]
        if agree.any():
            ok &= (everything[:, agree] == base[agree]).all(axis=1)
        if (~agree).any():
            for layer in stack:
                ok &= (everything[:, ~agree] != layer[~agree]).all(axis=1)
        for cand in everything[ok]:
            extend(stack + [cand], agree)
            if len(stack) + 1 < mu and int(agree.sum()) in found:
                return

    for l0 in firsts:
        for l1 in everything:
            agree = l0 == l1
            kk = int(agree.sum())
            if kk in found:
                continue
            if mu == 2:
                found.add(kk)
                continue
            extend([l0, l1], agree)
    return frozenset(found)


def spectrum_by_search(mu: int, n: int, prunes: frozenset = ALL_PRUNES, budget: int = 0) -> dict[int, SearchOutcome]:
    return {k: search(SearchSpec(mu, n, k, "exhaustive", budget, prunes)) for k in range(n * n + 1)}
