"""Intersection spectra: the outer bound, recursions, assembly from evidence and reconciliation."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from . import fixtures as fx
from .constructions import (
    GearParams,
    gear1_square,
    gear2_square,
    pad_rectangle,
    trade_into_trade,
    two_n_plus_one,
    two_n_plus_one_set,
    embedding_set,
    frame_square,
    ConstructionError,
)
from .completion import CompletionFailure, extend_rectangle
from .core import Grid, LatinError, MuWaySquare, MuWayTrade, extract_trade
from .intsets import format_set, interval, parse_set, shift, sumset
from .trades import GEAR_SEARCH_NODES, IMPOSSIBLE_VOLUMES_4, ParameterViolation, full_trade, gear_trade, gear_trade_params

DATA_DIR = Path(__file__).with_name("data")
THEOREM_FILE = DATA_DIR / "main_theorem.txt"
NONEXISTENCE_FILE = DATA_DIR / "nonexistence.txt"
ITEMIZATION_FILE = DATA_DIR / "itemization.txt"

GEAR_COMPLETION_NODES = 20_000


# ------------------------------------------------------------------ evidence


@dataclass(frozen=True)
class Construction:
    name: str
    params: tuple = ()

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"construction:{self.name}({inner})"


@dataclass(frozen=True)
class Fixture:
    file: str
    kind: str

    def __str__(self) -> str:
        return f"fixture:{self.kind}:{self.file}"


@dataclass(frozen=True)
class SearchWitness:
    certificate: str

    def __str__(self) -> str:
        return "search:" + self.certificate.splitlines()[0]


@dataclass(frozen=True)
class Recursion:
    rule: str
    inputs: tuple = ()

    def __str__(self) -> str:
        return f"recursion:{self.rule}({','.join(map(str, self.inputs))})"


Evidence = Construction | Fixture | SearchWitness | Recursion


def evidence_matches(method: str, ev: Evidence) -> bool:
    """Whether ``ev`` is the kind of evidence an itemized ``method`` calls for."""
    if method == "search":
        return isinstance(ev, SearchWitness) or (isinstance(ev, Fixture) and ev.kind in ("square", "rectangle"))
    if method in ("gear1", "gear2"):
        return (isinstance(ev, Construction) and ev.name == method) or (isinstance(ev, Fixture) and ev.kind == "layout")
    if method == "layout":
        return isinstance(ev, Fixture) and ev.kind == "layout"
    if method in ("prop", "tech1"):
        return isinstance(ev, Recursion) and ev.rule == method or (
            isinstance(ev, Construction) and ev.name == method
        )
    return isinstance(ev, Construction) and ev.name == method


class AssemblyError(RuntimeError):
    def __init__(self, item: str, reason: str):
        super().__init__(f"{item}: {reason}")
        self.item = item


@dataclass
class SpectrumSet:
    mu: int
    n: int
    provenance: dict[int, list] = field(default_factory=dict)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.provenance)

    def add(self, k: int, ev: Evidence) -> None:
        if not 0 <= k <= self.n * self.n:
            raise AssemblyError(str(ev), f"value {k} outside [0, {self.n * self.n}]")
        self.provenance.setdefault(k, []).append(ev)

    def evidence(self, k: int) -> list:
        return list(self.provenance.get(k, ()))

    def __contains__(self, k: int) -> bool:
        return k in self.provenance

    def __len__(self) -> int:
        return len(self.provenance)

    def __str__(self) -> str:
        return format_set(self.members)


# --------------------------------------------------------------- outer bound


def j_set(n: int) -> frozenset[int]:
    """``{k in [0, n^2] : n^2 - k`` is a possible 4-way trade volume``}``."""
    if n < 1:
        raise ValueError("n >= 1")
    sq = n * n
    return frozenset(k for k in range(sq + 1) if sq - k not in IMPOSSIBLE_VOLUMES_4)


# ----------------------------------------------------------------- recursions


def doubling_sumset(i_n: Iterable[int], n: int, smaller: Mapping[int, Iterable[int]] | None = None) -> frozenset[int]:
    """Fourfold sums of ``I_n`` plus corner embeddings of orders ``1..n`` into ``2n``."""
    i_n = frozenset(i_n)
    four = sumset(i_n, i_n, i_n, i_n) if i_n else frozenset()
    return four | embedding_set(2 * n, n, i_n, {i: frozenset(s) for i, s in (smaller or {}).items()})


def recursion_2n(i_n: Iterable[int], n: int, smaller: Mapping[int, Iterable[int]] | None = None) -> frozenset[int]:
    """Known part of ``I[2n]`` from ``I[n]`` (and smaller orders, when given).

    When ``I_n`` covers ``[0, ceil(n^2/2)]`` this includes ``[0, 3n^2]`` and
    ``I_n + 3n^2``; the fourfold-sum and embedding set is always included.
    """
    i_n = frozenset(i_n)
    out = set(doubling_sumset(i_n, n, smaller))
    if interval(0, -(-n * n // 2)) <= i_n:
        out |= interval(0, 3 * n * n) | shift(i_n, 3 * n * n)
    return frozenset(out)


def recursion_2n_plus_1(i_n: Iterable[int], n: int, smaller: Mapping[int, Iterable[int]] | None = None) -> frozenset[int]:
    """Known part of ``I[2n+1]`` from ``I[n]``, ``n >= 4``.

    When ``I_n`` covers ``[0, 7n+4]`` this includes ``[0, (2n+1)^2 - n^2]``
    and ``I_n + (2n+1)^2 - n^2``; the order-``2n+1`` assembly set is always included.
    """
    if n < 4:
        raise ValueError("needs n >= 4")
    i_n = frozenset(i_n)
    out = set(two_n_plus_one_set(i_n, n, {i: frozenset(s) for i, s in (smaller or {}).items()}))
    if interval(0, 7 * n + 4) <= i_n:
        top = (2 * n + 1) ** 2 - n * n
        out |= interval(0, top) | shift(i_n, top)
    return frozenset(out)


def guard_2n(i_n: Iterable[int], n: int) -> bool:
    return interval(0, -(-n * n // 2)) <= frozenset(i_n)


def guard_2n_plus_1(i_n: Iterable[int], n: int) -> bool:
    return n >= 4 and interval(0, 7 * n + 4) <= frozenset(i_n)


def iterate_recursions(base: Mapping[int, Iterable[int]], upto: int) -> dict[int, frozenset[int]]:
    """Extend a table of spectra to every order ``<= upto`` using both recursions."""
    table = {n: frozenset(s) for n, s in base.items()}
    for m in range(min(table, default=1), upto + 1):
        if m in table:
            continue
        half = m // 2
        if half not in table:
            raise KeyError(f"order {half} is needed for order {m}")
        smaller = {i: table[i] for i in range(1, half) if i in table}
        if m % 2 == 0:
            table[m] = recursion_2n(table[half], half, smaller)
        else:
            table[m] = recursion_2n_plus_1(table[half], half, smaller)
    return table


# ------------------------------------------------------------- theorem table


@dataclass(frozen=True)
class TheoremRow:
    n: int
    j: frozenset[int]
    lower: frozenset[int]
    undecided: frozenset[int]
    excluded: frozenset[int]
    nonexistent: frozenset[int]

    def flags(self) -> list[str]:
        out = []
        for name, part in (("lower bound", self.lower), ("undecided", self.undecided), ("non-existence list", self.nonexistent)):
            extra = part - self.j
            if extra:
                out.append(f"n={self.n}: {name} leaves the outer bound at {format_set(extra)}")
        both = self.lower & self.nonexistent
        if both:
            out.append(f"n={self.n}: claimed lower bound contains values with non-existence arguments {format_set(both)}")
        bare = self.excluded - self.nonexistent
        if bare:
            out.append(f"n={self.n}: values set aside without a non-existence argument {format_set(bare)}")
        both = self.lower & self.undecided
        if both:
            out.append(f"n={self.n}: claimed lower bound overlaps the undecided set at {format_set(both)}")
        return out


@dataclass(frozen=True)
class TheoremTable:
    rows: tuple[tuple[str, str, str, str, str], ...]
    nonexistent: Mapping[int, frozenset[int]]
    digest: str

    def _raw(self, n: int):
        generic = None
        for row in self.rows:
            if row[0] == str(n):
                return row
            if row[0].endswith("+") and n >= int(row[0][:-1]):
                generic = row
        if generic is None:
            raise KeyError(f"no theorem row for n={n}")
        return generic

    @lru_cache(maxsize=None)
    def row(self, n: int) -> TheoremRow:
        _, lower, und, exc, _line = self._raw(n)
        j = j_set(n)
        r = parse_set(und)
        names = {"J": j, "R": r}
        return TheoremRow(
            n=n,
            j=j,
            lower=parse_set(lower, names),
            undecided=r,
            excluded=parse_set(exc, names),
            nonexistent=frozenset(self.nonexistent.get(n, frozenset())),
        )

    def __hash__(self) -> int:
        return hash(self.digest)


def _data_lines(path: Path) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(path.read_text().splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


class ChecksumMismatch(ValueError):
    pass


def load_theorem_table(path: Path = THEOREM_FILE, nonexistence: Path = NONEXISTENCE_FILE, verify: bool = True) -> TheoremTable:
    raw = path.read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    sidecar = path.with_name(path.name + ".sha256")
    if verify and sidecar.exists() and sidecar.read_text().split()[0] != digest:
        raise ChecksumMismatch(f"{path.name} does not match its recorded checksum")
    rows = []
    for no, line in _data_lines(path):
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 4:
            raise ValueError(f"{path.name}:{no}: expected 4 columns")
        rows.append((*parts, str(no)))
    nonexist = {}
    for no, line in _data_lines(nonexistence):
        n, sets = (p.strip() for p in line.split(";"))
        nonexist[int(n)] = parse_set(sets)
    return TheoremTable(tuple(rows), nonexist, digest)


@dataclass(frozen=True)
class Item:
    n: int
    method: str
    values: frozenset[int] | None  # None stands for "every remaining value"


def load_itemization(path: Path = ITEMIZATION_FILE) -> list[Item]:
    out = []
    for no, line in _data_lines(path):
        n, method, values = (p.strip() for p in line.split(";"))
        out.append(Item(int(n), method, None if values == "rest" else parse_set(values)))
    return out


def itemized(n: int, table: TheoremTable | None = None, items: Sequence[Item] | None = None) -> list[tuple[str, frozenset[int]]]:
    """Itemized claims for order ``n`` with ``rest`` expanded against the lower bound."""
    table = table or load_theorem_table()
    items = [it for it in (items if items is not None else load_itemization()) if it.n == n]
    listed = frozenset().union(*(it.values for it in items if it.values is not None))
    out = []
    for it in items:
        vals = it.values if it.values is not None else table.row(n).lower - listed
        out.append((it.method, vals))
    return out


# ------------------------------------------------------------------ assembly

INGREDIENTS = ("trivial", "full", "fixtures", "gear", "product", "pad", "embed", "prop", "tech1", "doubling", "frame", "search")
DEFAULT_INGREDIENTS = tuple(i for i in INGREDIENTS if i != "search")
SEARCH_MAX_ORDER = 5


def _check(sq: MuWaySquare, n: int, k: int, item: str) -> None:
    if sq.n != n or sq.k != k:
        raise AssemblyError(item, f"built order {sq.n} with k={sq.k}, expected order {n} with k={k}")


def _full_witness(mu: int, n: int, rows: int) -> MuWaySquare:
    t = full_trade(mu, rows, n)
    if t.rows != rows:
        raise AssemblyError("full", "trade came back transposed")
    tops = [[list(r) for r in g.cells] for g in t.layers]
    tail = extend_rectangle(tops[0], n)[rows:]
    return MuWaySquare(tuple(Grid.from_rows(top + tail, n) for top in tops))


def gear_parameters(mu: int, n: int) -> list[GearParams]:
    """Every parameter set of the two rotation layouts at order ``n``."""
    out = []
    for a in range(mu, n + 1):
        for c in range(0, n - a + 1):
            b = n - a - c
            for x in range(1, n + 1):
                for y in range(mu, n + 1):
                    p = GearParams(mu, a, b, x, y, c)
                    if x + y > n:
                        continue
                    try:
                        p.check_gear2() if c else p.check_gear1()
                    except ParameterViolation:
                        continue
                    out.append(p)
    return sorted(out, key=lambda p: (p.c > 0, p.k, p.a, p.b, p.c, p.x, p.y))


def _gear_build(p: GearParams) -> MuWaySquare | None:
    from .constructions import gear_layout

    try:
        return gear_layout(p, max_nodes=GEAR_COMPLETION_NODES).to_square()
    except (CompletionFailure, LatinError):
        return None


@lru_cache(maxsize=None)
def gear_sweep(mu: int, n: int) -> dict[tuple[str, int], tuple[GearParams, MuWaySquare]]:
    """One validated witness per (layout family, fixed-cell count) at order ``n``."""
    found: dict[tuple[str, int], tuple[GearParams, MuWaySquare]] = {}
    for p in gear_parameters(mu, n):
        key = ("gear2" if p.c else "gear1", p.k)
        if key in found:
            continue
        sq = _gear_build(p)
        if sq is None:
            continue
        _check(sq, n, p.k, f"gear {p}")
        found[key] = (p, sq)
    return found


def _product_witnesses(n: int) -> list[tuple[str, MuWaySquare]]:
    """Trade-into-trade on the shipped two-way host (order 4) with order-2 plugs."""
    if n != 8:
        return []
    host = fx.example("host_2way_order4").obj
    plug = full_trade(2, 2, 2)
    return [("host_2way_order4", trade_into_trade(host, [plug, plug]))]


@lru_cache(maxsize=1)
def _corpus_trades() -> dict[int, list[tuple[str, MuWayTrade]]]:
    pool: dict[int, list[tuple[str, MuWayTrade]]] = {}
    for e in fx.appendix_entries():
        if e.kind != "layout":
            pool.setdefault(extract_trade(e.obj).volume, []).append((e.name, extract_trade(e.obj)))
    return pool


def _frame_candidates(n: int, s: int):
    for m in range(4, n + 1):
        if s % m == 0 and m <= s // m <= n:
            yield f"full {m}x{s // m}", full_trade(4, m, s // m)
    yield from _corpus_trades().get(s, ())
    for a, b, x, y in gear_trade_params(4, s):
        if x + y <= n and a + b <= n:
            try:
                yield f"gear a={a} b={b} x={x} y={y}", gear_trade(4, a, b, x, y, GEAR_SEARCH_NODES)
            except (CompletionFailure, LatinError, ParameterViolation):
                continue


def _frame_witness(n: int, s: int) -> tuple[str, MuWaySquare] | None:
    """First trade of volume ``s`` (fixed candidate order) that completes inside order ``n``."""
    for source, t in _frame_candidates(n, s):
        try:
            return source, frame_square(t, n)
        except ConstructionError:
            continue
    return None


class Assembler:
    """Bottom-up assembly of spectra with memoised smaller orders."""

    def __init__(self, mu: int = 4, ingredients: Sequence[str] = DEFAULT_INGREDIENTS, search_budget: int = 0):
        unknown = set(ingredients) - set(INGREDIENTS)
        if unknown:
            raise ValueError(f"unknown ingredients {sorted(unknown)}")
        if mu != 4 and ({"fixtures", "pad", "product"} & set(ingredients)):
            ingredients = [i for i in ingredients if i not in ("fixtures", "pad", "product")]
        self.mu = mu
        self.ingredients = tuple(ingredients)
        self.search_budget = search_budget
        self.cache: dict[int, SpectrumSet] = {}
        self.certificates: dict[int, dict[int, object]] = {}

    def spectra_below(self, n: int) -> dict[int, frozenset[int]]:
        return {i: self.assemble(i).members for i in range(1, n)}

    def assemble(self, n: int) -> SpectrumSet:
        if n in self.cache:
            return self.cache[n]
        mu = self.mu
        s = SpectrumSet(mu, n)
        use = set(self.ingredients)
        sq_n = n * n

        if "trivial" in use:
            s.add(sq_n, Construction("identical", (("n", n),)))

        if "full" in use:
            for rows in range(mu, n + 1):
                k = n * (n - rows)
                _check(_full_witness(mu, n, rows), n, k, f"full rows={rows}")
                s.add(k, Construction("full", (("rows", rows),)))

        if "fixtures" in use:
            for e in fx.appendix_entries():
                if e.n != n:
                    continue
                try:
                    sq = e.square()
                except (LatinError, CompletionFailure) as exc:
                    raise AssemblyError(e.name, str(exc)) from exc
                _check(sq, n, e.k, e.name)
                s.add(e.k, Fixture(e.name, e.kind))

        if "gear" in use:
            for (name, k), (p, _sq) in sorted(gear_sweep(mu, n).items()):
                s.add(k, Construction(name, (("a", p.a), ("b", p.b), ("c", p.c), ("x", p.x), ("y", p.y))))

        if "product" in use and mu == 4:
            for name, sq in _product_witnesses(n):
                s.add(sq.k, Construction("product", (("host", name),)))

        if "pad" in use:
            for e in fx.appendix_entries():
                if e.kind != "rectangle" or e.n + e.rows > n:
                    continue
                rect = e.obj
                sq = pad_rectangle(rect, n)
                volume = e.n * e.n - e.k
                _check(sq, n, sq_n - volume, f"pad {e.name}")
                s.add(sq.k, Construction("pad", (("source", e.name), ("order", n))))

        if n >= 2 and ({"embed", "prop", "tech1", "doubling"} & use):
            below = self.spectra_below(n)
            half = n // 2
            if "embed" in use:
                for i in range(1, half + 1):
                    for k in shift(below[i], sq_n - i * i):
                        s.add(k, Recursion("embed", (i,)))
            if "prop" in use and n % 2 == 0:
                smaller = {i: below[i] for i in range(1, half)}
                for k in doubling_sumset(below[half], half, smaller):
                    s.add(k, Recursion("prop", (half,)))
            if "tech1" in use and n % 2 == 1 and half >= 4 and mu == 4:
                smaller = {i: below[i] for i in range(1, half)}
                for k in two_n_plus_one_set(below[half], half, smaller):
                    s.add(k, Recursion("tech1", (half,)))
                if n == 9:
                    a = fx.example("doubling_base_order5").obj
                    b = MuWaySquare(tuple(Grid.from_rows([[1 + (i + j) % 4 for j in range(4)] for i in range(4)]) for _ in range(mu)))
                    sq = two_n_plus_one(a, b)
                    s.add(sq.k, Construction("tech1", (("a", "doubling_base_order5"), ("b", "identical"))))
            if "doubling" in use:
                smaller = {i: below[i] for i in range(1, half)}
                if n % 2 == 0 and guard_2n(below[half], half):
                    for k in recursion_2n(below[half], half, smaller):
                        s.add(k, Recursion("double-2n", (half,)))
                if n % 2 == 1 and guard_2n_plus_1(below[half], half):
                    for k in recursion_2n_plus_1(below[half], half, smaller):
                        s.add(k, Recursion("double-2n+1", (half,)))

        if "frame" in use and mu == 4:
            for k in sorted(j_set(n) - s.members):
                hit = _frame_witness(n, n * n - k)
                if hit is not None:
                    source, sq = hit
                    _check(sq, n, k, f"frame {source}")
                    s.add(k, Construction("frame", (("trade", source),)))

        if "search" in use and n <= SEARCH_MAX_ORDER:
            from .search import SearchSpec, Status, search

            certs = self.certificates.setdefault(n, {})
            for k in sorted(j_set(n)):
                out = search(SearchSpec(mu, n, k, "exhaustive", self.search_budget))
                certs[k] = out
                if out.status is Status.WITNESS:
                    _check(out.witness, n, k, f"search k={k}")
                    s.add(k, SearchWitness(out.certificate))

        bound = j_set(n) if mu == 4 else None
        if bound is not None and not s.members <= bound:
            bad = sorted(s.members - bound)
            raise AssemblyError(f"order {n}", f"values {bad} leave the outer bound")
        self.cache[n] = s
        return s


def assemble(n: int, ingredients: Sequence[str] = DEFAULT_INGREDIENTS, mu: int = 4, assembler: Assembler | None = None) -> SpectrumSet:
    return (assembler or Assembler(mu, ingredients)).assemble(n)


# ------------------------------------------------------------ reconciliation


@dataclass
class Finding:
    k: int
    flag: str
    detail: str


@dataclass
class ReconcileReport:
    n: int
    proven_in: frozenset[int]
    proven_out: dict[int, str]
    undecided: frozenset[int]
    table: TheoremRow
    findings: list[Finding]
    items: list[tuple[str, int, bool, str]]

    def classify(self, k: int) -> str:
        if k in self.proven_in and k in self.proven_out:
            return "inconsistent"
        if k in self.proven_in:
            return "proven-in"
        if k in self.proven_out:
            return "proven-out"
        return "undecided"

    @property
    def inconsistent(self) -> frozenset[int]:
        return frozenset(f.k for f in self.findings)

    def rows(self) -> list[tuple[int, str, str]]:
        out = []
        for k in range(self.n * self.n + 1):
            cls = self.classify(k)
            why = self.proven_out.get(k, "")
            flags = ",".join(sorted({f.flag for f in self.findings if f.k == k}))
            out.append((k, cls, why or flags))
        return out


def reconcile(
    n: int,
    assembled: SpectrumSet,
    table: TheoremTable | None = None,
    certificates: Mapping[int, object] | None = None,
    items: Sequence[Item] | None = None,
) -> ReconcileReport:
    """Compare our evidence with the published table; conflicts become findings."""
    from .search import Status

    table = table or load_theorem_table()
    row = table.row(n)
    j = row.j
    out: dict[int, str] = {}
    for k in range(n * n + 1):
        if k not in j:
            out[k] = "volume"
    for k, res in (certificates or {}).items():
        if getattr(res, "status", None) is Status.NONEXISTENT:
            out[k] = "certificate"
    for k in row.nonexistent:
        out.setdefault(k, "cited")
    proven_in = assembled.members
    findings: list[Finding] = []
    for k in sorted(proven_in & set(out)):
        findings.append(Finding(k, "in-and-out", f"witnessed yet excluded by {out[k]}"))
    for k in sorted(row.lower - proven_in):
        if k in out:
            findings.append(Finding(k, "claimed-but-out", f"claimed by the table, excluded by {out[k]}"))
        else:
            findings.append(Finding(k, "claimed-unwitnessed", "claimed by the table, no evidence here"))
    for k in sorted(row.undecided & proven_in):
        findings.append(Finding(k, "undecided-but-derived", ", ".join(map(str, assembled.evidence(k)))))
    for k in sorted((row.excluded | row.nonexistent) & proven_in):
        findings.append(Finding(k, "excluded-but-derived", ", ".join(map(str, assembled.evidence(k)))))
    for msg in row.flags():
        findings.append(Finding(-1, "table", msg))
    undecided = frozenset(range(n * n + 1)) - proven_in - set(out)
    item_rows = []
    for method, values in itemized(n, table, items):
        for k in sorted(values):
            ev = assembled.evidence(k)
            ok = any(evidence_matches(method, e) for e in ev)
            item_rows.append((method, k, ok, str(ev[0]) if ev else "none"))
    return ReconcileReport(n, proven_in, out, undecided, row, findings, item_rows)


def render_report(rep: ReconcileReport, fmt: str = "text") -> str:
    """Text or TSV rendering; TSV columns: n, k, class, detail."""
    if fmt == "tsv":
        lines = ["n\tk\tclass\tdetail"]
        lines += [f"{rep.n}\t{k}\t{cls}\t{why}" for k, cls, why in rep.rows()]
        return "\n".join(lines) + "\n"
    row = rep.table
    lines = [
        f"order {rep.n}",
        f"outer bound J       {format_set(row.j)}",
        f"table lower bound   {format_set(row.lower)}",
        f"table undecided R   {format_set(row.undecided)}",
        f"proven in           {format_set(rep.proven_in)}",
        f"proven out          {format_set(frozenset(k for k in rep.proven_out if k in row.j))}",
        f"undecided here      {format_set(rep.undecided)}",
    ]
    bad_items = [(m, k) for m, k, ok, _ in rep.items if not ok]
    lines.append(f"itemized values     {len(rep.items)} checked, {len(bad_items)} without matching evidence")
    for m, k in bad_items:
        lines.append(f"  unmatched {m} {k}")
    for f in rep.findings:
        where = f"k={f.k} " if f.k >= 0 else ""
        lines.append(f"finding {f.flag} {where}{f.detail}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Assembler",
    "AssemblyError",
    "Construction",
    "Fixture",
    "Recursion",
    "ReconcileReport",
    "SearchWitness",
    "SpectrumSet",
    "TheoremTable",
    "assemble",
    "doubling_sumset",
    "evidence_matches",
    "iterate_recursions",
    "j_set",
    "load_itemization",
    "load_theorem_table",
    "pad_rectangle",
    "recursion_2n",
    "recursion_2n_plus_1",
    "reconcile",
    "render_report",
]
