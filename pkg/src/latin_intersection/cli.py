"""Command-line entry point: ``python -m latin_intersection <command> ...``.

Exit status: 0 on success, 1 on a domain failure (invalid object, infeasible
request, exhausted budget), 2 on a usage error.

TSV columns per command (``--format tsv``):
  validate   kind, mu, rows, n, k, volume
  intersect  n, k, row_seq, col_seq
  trade      mu, rows, n, volume, origin
  construct  kind, mu, n, k
  search     status, mu, n, k, skeletons, nodes
  spectrum   n, k, class, detail
  fixtures   file, status, detail
  convert    layer, row, col, symbol (one line per filled cell)
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import fixtures as fx
from .completion import CompletionFailure
from .constructions import (
    ConstructionError,
    GearParams,
    double_construction,
    embed_construction,
    frame_square,
    gear1_square,
    gear2_square,
    pad_rectangle,
    trade_into_trade,
    two_n_plus_one,
)
from .core import Grid, LatinError, MuWayRectangle, MuWaySquare, MuWayTrade
from .formats import FormatError, parse_compact, parse_mwls, render_compact, render_mwls, render_skeleton
from .intsets import format_set
from .trades import ParameterViolation, ShapeTooSmall, Verdict, full_trade, trade_of_volume


class DomainFailure(Exception):
    pass


def _read(source: str) -> tuple[str, str]:
    """Text of a file path, or of a bundled example or appendix fixture by name."""
    p = Path(source)
    if p.exists():
        return p.read_text(), p.name
    for cand in (fx.EXAMPLES_DIR / f"{source}.mwls", fx.APPENDIX_DIR / source, fx.APPENDIX_DIR / f"{source}.mwls"):
        if cand.exists():
            return cand.read_text(), cand.name
    raise DomainFailure(f"no such file or bundled fixture: {source}")


def _load(source: str):
    text, name = _read(source)
    if text.lstrip().startswith("compact") or "\ncompact" in text:
        block = parse_compact(text)
        obj = block.obj
        if isinstance(obj, MuWayRectangle) and obj.label_k != block.k:
            raise DomainFailure(f"label says k={block.k}, contents give k={obj.label_k}")
        return obj
    return parse_mwls(text)


def _describe(obj) -> tuple[str, tuple]:
    if isinstance(obj, MuWaySquare):
        return f"valid {obj.mu}-way n={obj.n} k={obj.k}", ("square", obj.mu, obj.rows, obj.n, obj.k, obj.trade_volume)
    if isinstance(obj, MuWayRectangle):
        return (
            f"valid {obj.mu}-way rectangle {obj.rows}x{obj.n} fixed={obj.fixed_cells} label_k={obj.label_k}",
            ("rectangle", obj.mu, obj.rows, obj.n, obj.label_k, obj.trade_volume),
        )
    if isinstance(obj, MuWayTrade):
        return (
            f"valid {obj.mu}-way trade {obj.rows}x{obj.n} volume={obj.volume}",
            ("trade", obj.mu, obj.rows, obj.n, "", obj.volume),
        )
    if isinstance(obj, Grid):
        return f"valid partial latin {obj.rows}x{obj.cols}", ("grid", 1, obj.rows, obj.cols, "", "")
    raise DomainFailure(f"unsupported object {type(obj).__name__}")


def _tsv(*rows) -> str:
    return "\n".join("\t".join(map(str, r)) for r in rows) + "\n"


# ------------------------------------------------------------------ commands


def cmd_validate(args, out) -> int:
    obj = _load(args.file)
    text, row = _describe(obj)
    out.write(_tsv(("kind", "mu", "rows", "n", "k", "volume"), row) if args.format == "tsv" else text + "\n")
    return 0


def cmd_intersect(args, out) -> int:
    obj = _load(args.file)
    if not isinstance(obj, MuWayRectangle):
        raise DomainFailure("intersect needs a mu-way square or rectangle")
    sk = obj.skeleton
    if args.format == "tsv":
        out.write(_tsv(("n", "k", "row_seq", "col_seq"),
                       (obj.n, obj.fixed_cells, ",".join(map(str, sk.row_seq)), ",".join(map(str, sk.col_seq)))))
        return 0
    out.write(f"k={obj.fixed_cells}\n")
    out.write(f"row sums {' '.join(map(str, sk.row_seq))}\n")
    out.write(f"column sums {' '.join(map(str, sk.col_seq))}\n")
    out.write(render_skeleton(sk))
    return 0


def cmd_trade(args, out) -> int:
    shape = None
    if args.shape:
        try:
            r, c = (int(v) for v in args.shape.lower().split("x"))
        except ValueError:
            raise DomainFailure(f"shape must look like RxC, got {args.shape!r}")
        shape = (r, c)
    t = trade_of_volume(args.mu, args.volume, shape)
    if isinstance(t, Verdict):
        out.write(f"{t.value} mu={args.mu} volume={args.volume}\n")
        return 1
    if args.format == "tsv":
        out.write(_tsv(("mu", "rows", "n", "volume", "origin"), (t.mu, t.rows, t.n, t.volume, t.origin)))
    else:
        out.write(render_mwls(t))
    return 0


def _build(args) -> tuple[str, MuWaySquare]:
    kind = args.kind
    mu = args.mu
    if kind == "full":
        rows = args.rows if args.rows is not None else args.n
        t = full_trade(mu, rows, args.n)
        from .fixtures import complete_shared

        return kind, complete_shared(MuWayRectangle(t.layers)) if t.rows < t.n else MuWaySquare(t.layers)
    if kind in ("gear1", "gear2"):
        p = GearParams(mu, args.a, args.b, args.x, args.y, args.c or 0)
        return kind, (gear1_square(p) if kind == "gear1" else gear2_square(p))
    if kind == "product":
        host = fx.example("host_2way_order4").obj
        plug = full_trade(2, 2, 2)
        return kind, trade_into_trade(host, [plug, plug])
    if kind == "two-n-plus-one":
        a = fx.example("doubling_base_order5").obj
        b = MuWaySquare(tuple(Grid.from_rows([[1 + (i + j) % 4 for j in range(4)] for i in range(4)]) for _ in range(a.mu)))
        return kind, two_n_plus_one(a, b)
    if kind == "double":
        if len(args.inputs) != 4:
            raise DomainFailure("double needs four input squares")
        return kind, double_construction([_load(p) for p in args.inputs])
    if kind == "embed":
        if len(args.inputs) != 1 or args.order is None:
            raise DomainFailure("embed needs one input square and --order")
        return kind, embed_construction(_load(args.inputs[0]), args.order)
    if kind == "pad":
        if len(args.inputs) != 1 or args.order is None:
            raise DomainFailure("pad needs one input rectangle and --order")
        return kind, pad_rectangle(_load(args.inputs[0]), args.order)
    if kind == "frame":
        if args.volume is None or args.order is None:
            raise DomainFailure("frame needs --volume and --order")
        t = trade_of_volume(mu, args.volume)
        if isinstance(t, Verdict):
            raise DomainFailure(f"no trade of volume {args.volume}: {t.value}")
        return kind, frame_square(t, args.order)
    raise DomainFailure(f"unknown construction {kind}")


def cmd_construct(args, out) -> int:
    kind, sq = _build(args)
    if args.format == "tsv":
        out.write(_tsv(("kind", "mu", "n", "k"), (kind, sq.mu, sq.n, sq.k)))
    else:
        out.write(f"# {kind}: {sq.mu}-way n={sq.n} k={sq.k}\n")
        out.write(render_compact(sq) if args.compact else render_mwls(sq))
    return 0


def cmd_search(args, out) -> int:
    from .search import PRUNES, SearchSpec, Status, default_workers, search

    budget = args.budget if args.budget is not None else int(os.environ.get("LI_BUDGET", "0") or 0)
    workers = args.workers if args.workers is not None else default_workers()
    bad = set(args.no_prune) - set(PRUNES) - {"all"}
    if bad:
        raise DomainFailure(f"unknown prune {sorted(bad)}; choose from {', '.join(PRUNES)} or all")
    prunes = frozenset() if "all" in args.no_prune else frozenset(PRUNES) - set(args.no_prune)
    spec = SearchSpec(args.mu, args.n, args.k, args.mode, budget, prunes, workers)
    res = search(spec)
    if args.format == "tsv":
        out.write(_tsv(("status", "mu", "n", "k", "skeletons", "nodes"),
                       (res.status.value, spec.mu, spec.n, spec.k, res.skeletons, res.nodes)))
    else:
        line = f"{res.status.value} mu={spec.mu} n={spec.n} k={spec.k} skeletons={res.skeletons} nodes={res.nodes}"
        if args.timing:
            line += f" seconds={res.seconds:.3f}"
        out.write(line + "\n")
        out.write(res.certificate)
        if res.witness is not None:
            out.write(render_mwls(res.witness))
    if args.certificate_out:
        Path(args.certificate_out).write_text(res.certificate)
    return 1 if res.status is Status.BUDGET_EXCEEDED else 0


def cmd_spectrum(args, out) -> int:
    from .spectrum import DEFAULT_INGREDIENTS, INGREDIENTS, Assembler, reconcile, render_report

    if args.ingredients == "all":
        ingredients = INGREDIENTS
    elif args.ingredients == "default":
        ingredients = DEFAULT_INGREDIENTS
    else:
        ingredients = tuple(i.strip() for i in args.ingredients.split(",") if i.strip())
        bad = set(ingredients) - set(INGREDIENTS)
        if bad:
            raise DomainFailure(f"unknown ingredients {sorted(bad)}; choose from {', '.join(INGREDIENTS)}")
    asm = Assembler(args.mu, ingredients)
    spec_set = asm.assemble(args.n)
    rep = reconcile(args.n, spec_set, certificates=asm.certificates.get(args.n))
    fmt = args.report or args.format
    out.write(render_report(rep, "tsv" if fmt == "tsv" else "text"))
    return 0


def cmd_fixtures(args, out) -> int:
    if args.action == "list":
        rows = [(e.name, e.n, e.k, e.rows, e.kind) for e in fx.appendix_entries()]
        if args.format == "tsv":
            out.write(_tsv(("file", "n", "k", "rows", "kind"), *rows))
        else:
            for r in rows:
                out.write(f"{r[0]}  n={r[1]} k={r[2]} rows={r[3]} {r[4]}\n")
        return 0
    directory = Path(args.dir) if args.dir else fx.APPENDIX_DIR
    if not directory.is_dir():
        raise DomainFailure(f"not a directory: {directory}")
    results = fx.fixtures_verify(directory)
    failed = [r for r in results if not r.ok]
    if args.format == "tsv":
        out.write(_tsv(("file", "status", "detail"), *((r.name, "pass" if r.ok else "fail", r.detail) for r in results)))
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'} {r.name} {r.detail}\n")
        if not results:
            out.write(f"warning: no fixtures in {directory}\n")
        out.write(f"{len(results)} fixtures, {len(failed)} failed\n")
    return 1 if failed else 0


def cmd_convert(args, out) -> int:
    obj = _load(args.file)
    if args.format == "tsv":
        layers = (obj,) if isinstance(obj, Grid) else obj.layers
        rows = [
            (t, i, j, v)
            for t, g in enumerate(layers)
            for i, line in enumerate(g.cells)
            for j, v in enumerate(line)
            if v
        ]
        out.write(_tsv(("layer", "row", "col", "symbol"), *rows))
        return 0
    if args.to == "mwls":
        out.write(render_mwls(obj))
    elif args.to == "compact":
        if not isinstance(obj, MuWayRectangle):
            raise DomainFailure("compact output needs a mu-way square or rectangle")
        out.write(render_compact(obj))
    else:
        if not isinstance(obj, MuWayRectangle):
            raise DomainFailure("skeleton output needs a mu-way square or rectangle")
        out.write(render_skeleton(obj.skeleton))
    return 0


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latin-intersection", description="mu-way latin squares and their intersection spectra")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "tsv"), default="text")
        return sp

    s = fmt(sub.add_parser("validate", help="validate a square, rectangle or trade file"))
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = fmt(sub.add_parser("intersect", help="fixed-cell count and pattern"))
    s.add_argument("file")
    s.set_defaults(func=cmd_intersect)

    s = fmt(sub.add_parser("trade", help="build a trade of a given volume"))
    s.add_argument("--mu", type=int, default=4)
    s.add_argument("--volume", type=int, required=True)
    s.add_argument("--shape", help="frame as RxC")
    s.set_defaults(func=cmd_trade)

    s = fmt(sub.add_parser("construct", help="run a construction"))
    s.add_argument("kind", choices=("full", "gear1", "gear2", "product", "two-n-plus-one", "double", "embed", "pad", "frame"))
    s.add_argument("inputs", nargs="*", help="input files for double, embed and pad")
    s.add_argument("--mu", type=int, default=4)
    s.add_argument("--n", type=int)
    s.add_argument("--rows", type=int)
    for name in ("a", "b", "c", "x", "y"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--order", type=int)
    s.add_argument("--volume", type=int)
    s.add_argument("--compact", action="store_true", help="write the compact cell format")
    s.set_defaults(func=cmd_construct)

    s = fmt(sub.add_parser("search", help="exhaustive or first-witness search"))
    s.add_argument("--mu", type=int, default=4)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=("exhaustive", "first-witness"), default="exhaustive")
    s.add_argument("--budget", type=int, help="node budget, 0 for none (default: LI_BUDGET or 0)")
    s.add_argument("--no-prune", action="append", default=[], metavar="RULE")
    s.add_argument("--workers", type=int, help="worker processes (default: LI_THREADS or 1)")
    s.add_argument("--certificate-out")
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_search)

    s = fmt(sub.add_parser("spectrum", help="assemble and reconcile the spectrum of one order"))
    s.add_argument("--mu", type=int, default=4)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ingredients", default="default", help="default, all, or a comma list")
    s.add_argument("--report", choices=("text", "tsv"))
    s.set_defaults(func=cmd_spectrum)

    s = fmt(sub.add_parser("fixtures", help="list or verify the bundled corpus"))
    s.add_argument("action", choices=("verify", "list"))
    s.add_argument("dir", nargs="?")
    s.set_defaults(func=cmd_fixtures)

    s = fmt(sub.add_parser("convert", help="rewrite a file in another format"))
    s.add_argument("file")
    s.add_argument("--to", choices=("mwls", "compact", "skeleton"), default="mwls")
    s.set_defaults(func=cmd_convert)
    return p


def run_command(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "construct":
        needs = {"full": ("n",), "gear1": ("a", "b", "x", "y"), "gear2": ("a", "b", "c", "x", "y")}.get(args.kind, ())
        missing = [f"--{m}" for m in needs if getattr(args, m) is None]
        if missing:
            err.write(f"construct {args.kind}: missing {' '.join(missing)}\n")
            return 2
    try:
        return args.func(args, out)
    except (DomainFailure, FormatError, LatinError, ConstructionError, ParameterViolation, ShapeTooSmall,
            CompletionFailure, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_command())
