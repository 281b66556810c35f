"""The bundled corpus of witness squares, rectangles and rotation layouts."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .core import LatinError, MuWayRectangle, MuWaySquare, MuWayTrade, extract_trade
from .completion import CompletionFailure, extend_rectangle
from .formats import CompactBlock, FormatError, parse_compact
from .core import Grid

FIXTURE_ROOT = Path(__file__).with_name("fixtures")
APPENDIX_DIR = FIXTURE_ROOT / "appendix"
EXAMPLES_DIR = FIXTURE_ROOT / "examples"
QUARANTINE_DIR = FIXTURE_ROOT / "quarantine"

NAME_RE = re.compile(r"^n(\d+)_k(\d+)(?:\.r(\d+))?\.mwls$")


@dataclass(frozen=True)
class FixtureEntry:
    path: Path
    n: int
    k: int
    rows: int
    mu: int
    kind: str  # "square", "rectangle" or "layout"
    block: CompactBlock

    @property
    def name(self) -> str:
        return self.path.name

    @property
    def obj(self) -> MuWayRectangle:
        return self.block.obj

    def square(self) -> MuWaySquare:
        """The full square: layouts and rectangles are completed with shared rows."""
        if self.block.layout is not None:
            return self.block.layout.to_square()
        if isinstance(self.obj, MuWaySquare):
            return self.obj
        return complete_shared(self.obj)


def complete_shared(rect: MuWayRectangle) -> MuWaySquare:
    """Append rows common to every layer; needs equal column contents across layers."""
    extra = extend_rectangle([list(r) for r in rect.layers[0].cells], rect.n)[rect.rows:]
    layers = tuple(Grid.from_rows([list(r) for r in g.cells] + extra, rect.n) for g in rect.layers)
    return MuWaySquare(layers)


class FixtureError(ValueError):
    pass


def load_fixture(path: str | Path) -> FixtureEntry:
    path = Path(path)
    m = NAME_RE.match(path.name)
    if not m:
        raise FixtureError(f"{path.name}: name does not follow nNN_kKKK[.rR].mwls")
    n, k = int(m.group(1)), int(m.group(2))
    r = int(m.group(3)) if m.group(3) else n
    block = parse_compact(path.read_text())
    if (block.n, block.k) != (n, k):
        raise FixtureError(f"{path.name}: header says n={block.n} k={block.k}")
    obj = block.obj
    if obj.rows != r:
        raise FixtureError(f"{path.name}: {obj.rows} rows, name says {r}")
    kind = "layout" if block.layout is not None else ("square" if obj.is_square else "rectangle")
    return FixtureEntry(path, n, k, r, block.mu, kind, block)


@dataclass
class FixtureResult:
    name: str
    ok: bool
    detail: str


def verify_entry(entry: FixtureEntry) -> FixtureResult:
    obj = entry.obj
    if obj.label_k != entry.k:
        return FixtureResult(entry.name, False, f"counts {obj.label_k} fixed cells after completion, label says {entry.k}")
    try:
        sq = entry.square()
    except (CompletionFailure, LatinError) as exc:
        return FixtureResult(entry.name, False, f"completion to a square failed: {exc}")
    if sq.k != entry.k:
        return FixtureResult(entry.name, False, f"completed square has k={sq.k}, label says {entry.k}")
    extract_trade(sq)
    return FixtureResult(entry.name, True, f"{entry.kind} {entry.mu}-way n={entry.n} k={entry.k}")


def fixtures_verify(directory: str | Path = APPENDIX_DIR) -> list[FixtureResult]:
    out = []
    for path in sorted(Path(directory).glob("*.mwls")):
        try:
            entry = load_fixture(path)
        except (FixtureError, FormatError, LatinError, ValueError) as exc:
            out.append(FixtureResult(path.name, False, str(exc)))
            continue
        out.append(verify_entry(entry))
    return out


@lru_cache(maxsize=None)
def appendix_entries() -> tuple[FixtureEntry, ...]:
    return tuple(load_fixture(p) for p in sorted(APPENDIX_DIR.glob("*.mwls")))


def find(n: int, k: int) -> FixtureEntry:
    for e in appendix_entries():
        if (e.n, e.k) == (n, k):
            return e
    raise KeyError(f"no fixture for n={n} k={k}")


def example(name: str):
    """Parse one of the worked-example inputs by file stem."""
    from .formats import parse_mwls

    text = (EXAMPLES_DIR / f"{name}.mwls").read_text()
    return parse_compact(text) if text.lstrip().startswith("compact") else parse_mwls(text)


def seed_trades(mu: int = 4) -> dict[int, MuWayTrade]:
    """Smallest-order corpus trade for each volume (mu = 4 corpus only)."""
    if mu != 4:
        return {}
    seeds: dict[int, MuWayTrade] = {}
    for e in sorted(appendix_entries(), key=lambda e: (e.n, e.rows, e.k)):
        if e.kind == "layout":
            continue
        t = extract_trade(e.obj)
        t = MuWayTrade(t.layers, origin=f"fixture {e.name}")
        seeds.setdefault(t.volume, t)
    return seeds
