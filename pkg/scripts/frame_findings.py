"""List published-undecided values that this package witnesses, with the evidence used."""
import argparse

from latin_intersection.spectrum import Assembler, reconcile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--first", type=int, default=7)
    ap.add_argument("--last", type=int, default=15)
    args = ap.parse_args()

    assembler = Assembler()
    print("n\tk\tevidence")
    total = 0
    for n in range(args.first, args.last + 1):
        s = assembler.assemble(n)
        rep = reconcile(n, s)
        for k in sorted(rep.table.undecided & s.members):
            print(f"{n}\t{k}\t{'; '.join(map(str, s.evidence(k)))}")
            total += 1
    print(f"# {total} undecided values witnessed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
