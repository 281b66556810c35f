"""Iterate the doubling and odd-order recursions from the shipped table and compare with the outer bound."""
import argparse

from latin_intersection.intsets import format_set
from latin_intersection.spectrum import iterate_recursions, j_set, load_theorem_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--base-from", type=int, default=16)
    ap.add_argument("--base-to", type=int, default=32)
    ap.add_argument("--upto", type=int, default=64)
    args = ap.parse_args()

    table = load_theorem_table()
    base = {n: table.row(n).lower for n in range(args.base_from, args.base_to + 1)}
    got = iterate_recursions(base, args.upto)
    bad = 0
    for n in range(args.base_from, args.upto + 1):
        missing = j_set(n) - got[n]
        status = "ok" if not missing else f"missing {format_set(missing)}"
        bad += bool(missing)
        print(f"n={n}\t|I|={len(got[n])}\t{status}")
    print(f"{bad} orders fall short of the outer bound")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
