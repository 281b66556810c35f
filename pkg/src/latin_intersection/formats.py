"""Text formats.

MWLS: header ``mu n r`` (an optional trailing ``trade`` marks a trade with no
empty cells), then ``mu`` blocks of ``r`` lines with ``n`` tokens each,
separated by blank lines.  ``.`` is an empty cell.  Tokens are ``1-9`` then
``a-z`` when ``n <= 35`` and decimal otherwise.  Lines starting with ``#``
are comments.

Compact: header ``compact mu n k [r]``, then one line per row.  A cell is a
single symbol (same in every layer), a run of ``mu`` characters (one per
layer) or ``_x`` for a fixed entry of a rotation layout.  ``|`` separates
column groups of a layout.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import EMPTY, Grid, MuWayRectangle, MuWaySquare, MuWayTrade, Skeleton, assemble_mu_way
from .layouts import Layout

ALPHABET = "123456789abcdefghijklmnopqrstuvwxyz"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = "" if line is None else f"line {line}" + ("" if col is None else f", column {col}") + ": "
        super().__init__(where + message)


def symbol_token(v: int, n: int) -> str:
    if v == EMPTY:
        return "."
    return ALPHABET[v - 1] if n <= len(ALPHABET) else str(v)


def parse_token(tok: str, n: int, line: int | None = None, col: int | None = None) -> int:
    if tok == ".":
        return EMPTY
    if len(tok) == 1 and tok in ALPHABET:
        v = ALPHABET.index(tok) + 1
    elif tok.isdigit():
        v = int(tok)
    else:
        raise FormatError(f"bad symbol {tok!r}", line, col)
    if not 1 <= v <= n:
        raise FormatError(f"symbol {tok!r} outside 1..{n}", line, col)
    return v


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1) if not ln.strip().startswith("#")]


def render_grid_rows(g: Grid) -> list[str]:
    return [" ".join(symbol_token(v, g.cols) for v in row) for row in g.cells]


def render_mwls(obj: Grid | MuWayRectangle | MuWayTrade) -> str:
    layers = (obj,) if isinstance(obj, Grid) else obj.layers
    r, n = layers[0].rows, layers[0].cols
    header = f"{len(layers)} {n} {r}"
    if isinstance(obj, MuWayTrade) and obj.volume == r * n:
        header += " trade"
    blocks = ["\n".join(render_grid_rows(g)) for g in layers]
    return header + "\n" + "\n\n".join(blocks) + "\n"


def parse_mwls(text: str):
    """Parse MWLS (or compact) text into a validated object."""
    lines = _content_lines(text)
    while lines and not lines[0][1]:
        lines.pop(0)
    if not lines:
        raise FormatError("empty input")
    if lines[0][1].startswith("compact"):
        return parse_compact(text).obj
    no, head = lines[0]
    parts = head.split()
    if len(parts) not in (3, 4) or not all(p.isdigit() for p in parts[:3]) or (len(parts) == 4 and parts[3] != "trade"):
        raise FormatError("header must be 'mu n r' (optionally followed by 'trade')", no)
    mu, n, r = map(int, parts[:3])
    if mu < 1 or r > n:
        raise FormatError(f"bad header values mu={mu} n={n} r={r}", no)
    body = lines[1:]
    pos = 0
    grids = []
    for t in range(mu):
        while pos < len(body) and not body[pos][1]:
            pos += 1
        rows = []
        for _ in range(r):
            if pos >= len(body) or not body[pos][1]:
                last = body[pos - 1][0] if pos else no
                raise FormatError(f"layer {t} ends after {len(rows)} of {r} rows", last + 1)
            lno, ln = body[pos]
            toks = ln.split()
            if len(toks) != n:
                raise FormatError(f"expected {n} tokens, found {len(toks)}", lno)
            rows.append(tuple(parse_token(tok, n, lno, c + 1) for c, tok in enumerate(toks)))
            pos += 1
        grids.append(Grid(tuple(rows), n))
    rest = [b for b in body[pos:] if b[1]]
    if rest:
        raise FormatError("unexpected trailing content", rest[0][0])
    if mu == 1:
        return grids[0]
    if len(parts) == 4 or any(not g.is_full() for g in grids):
        return MuWayTrade(tuple(grids))
    return assemble_mu_way(grids)


@dataclass(frozen=True)
class CompactBlock:
    """A parsed compact block: the label plus the expanded object."""

    mu: int
    n: int
    k: int
    obj: MuWayRectangle
    layout: Layout | None = None


def parse_compact(text: str) -> CompactBlock:
    lines = [(no, ln) for no, ln in _content_lines(text) if ln]
    if not lines:
        raise FormatError("empty input")
    no, head = lines[0]
    parts = head.split()
    if parts[0] != "compact" or len(parts) not in (4, 5) or not all(p.isdigit() for p in parts[1:]):
        raise FormatError("header must be 'compact mu n k [r]'", no)
    mu, n, k = map(int, parts[1:4])
    if n > len(ALPHABET):
        raise FormatError(f"compact grids need n <= {len(ALPHABET)}", no)
    rows, marks, entries = [], [], []
    starts = None
    for lno, ln in lines[1:]:
        toks = ln.split()
        row_starts, cells = [0], []
        for tok in toks:
            if tok == "|":
                row_starts.append(len(cells))
                continue
            cells.append(tok)
        if len(cells) != n:
            raise FormatError(f"expected {n} cells, found {len(cells)}", lno)
        if starts is None:
            starts = tuple(row_starts)
        elif tuple(row_starts) != starts:
            raise FormatError("column groups differ from the first row", lno)
        vals, fx, per = [], [], []
        for c, tok in enumerate(cells, 1):
            under = tok.startswith("_")
            body = tok[1:] if under else tok
            if len(body) == 1:
                v = parse_token(body, n, lno, c)
                vals.append(v)
                per.append((v,) * mu)
            elif len(body) == mu and not under:
                tup = tuple(parse_token(ch, n, lno, c) for ch in body)
                vals.append(tup[0])
                per.append(tup)
            else:
                raise FormatError(f"cell {tok!r} is neither one symbol nor {mu} symbols", lno, c)
            fx.append(under)
        rows.append(tuple(vals))
        marks.append(tuple(fx))
        entries.append(per)
    if len(parts) == 5 and int(parts[4]) != len(rows):
        raise FormatError(f"header promises {parts[4]} rows, found {len(rows)}", no)
    if len(rows) > n:
        raise FormatError(f"{len(rows)} rows exceed order {n}", no)
    if any(any(m) for m in marks):
        layout = Layout(mu, n, tuple(rows), tuple(marks), starts)
        return CompactBlock(mu, n, k, layout.expand(), layout)
    grids = [Grid.from_rows([[e[t] for e in per] for per in entries], n) for t in range(mu)]
    return CompactBlock(mu, n, k, assemble_mu_way(grids))


def render_compact(obj: MuWayRectangle, k: int | None = None) -> str:
    n = obj.n
    label = obj.label_k if k is None else k
    head = f"compact {obj.mu} {n} {label}" + ("" if obj.is_square else f" {obj.rows}")
    out = [head]
    for i in range(obj.rows):
        toks = []
        for j in range(n):
            e = obj.cell(i, j)
            toks.append(symbol_token(e[0], n) if len(set(e)) == 1 else "".join(symbol_token(v, n) for v in e))
        out.append(" ".join(toks))
    return "\n".join(out) + "\n"


def render_layout(layout: Layout, k: int | None = None) -> str:
    n = layout.n
    label = layout.label_k if k is None else k
    out = [f"compact {layout.mu} {n} {label} {len(layout.rows)}"]
    for row, marks in zip(layout.rows, layout.fixed):
        toks = []
        for j, (v, m) in enumerate(zip(row, marks)):
            if j in layout.group_starts and j:
                toks.append("|")
            toks.append(("_" if m else "") + symbol_token(v, n))
        out.append(" ".join(toks))
    return "\n".join(out) + "\n"


def render_skeleton(s: Skeleton) -> str:
    return f"skeleton {s.rows} {s.cols}\n" + "\n".join("".join(map(str, r)) for r in s.bits) + "\n"


def parse_skeleton(text: str) -> Skeleton:
    lines = [(no, ln) for no, ln in _content_lines(text) if ln]
    if not lines:
        raise FormatError("empty input")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "skeleton" or not (parts[1].isdigit() and parts[2].isdigit()):
        raise FormatError("header must be 'skeleton r n'", no)
    r, n = int(parts[1]), int(parts[2])
    if len(lines) - 1 != r:
        raise FormatError(f"expected {r} rows, found {len(lines) - 1}", no)
    bits = []
    for lno, ln in lines[1:]:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise FormatError(f"expected {n} binary digits", lno)
        bits.append(tuple(int(ch) for ch in ln))
    return Skeleton(tuple(bits), n)
