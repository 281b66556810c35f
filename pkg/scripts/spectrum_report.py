"""Assemble and reconcile the spectrum for a range of orders; prints one report per order."""
import argparse
import time

from latin_intersection.spectrum import Assembler, reconcile, render_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--first", type=int, default=7)
    ap.add_argument("--last", type=int, default=15)
    ap.add_argument("--format", choices=("text", "tsv"), default="text")
    args = ap.parse_args()

    assembler = Assembler()
    unmatched = 0
    for n in range(args.first, args.last + 1):
        start = time.perf_counter()
        rep = reconcile(n, assembler.assemble(n))
        print(render_report(rep, args.format), end="")
        if args.format == "text":
            print(f"elapsed {time.perf_counter() - start:.1f} s\n")
        unmatched += sum(1 for *_, ok, _ in rep.items if not ok)
    if args.format == "text":
        print(f"itemized values without matching evidence: {unmatched}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
