"""Decide every k at order 5 by search, with prunes on and (optionally) off.

    python3 scripts/sweep_order5.py               # prunes on, about a minute
    python3 scripts/sweep_order5.py --compare     # also prunes off, about 15 minutes
"""
import argparse
import time

from latin_intersection.intsets import format_set
from latin_intersection.search import Status, spectrum_by_search


def sweep(prunes):
    start = time.perf_counter()
    res = spectrum_by_search(4, 5) if prunes is None else spectrum_by_search(4, 5, prunes)
    return res, time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--compare", action="store_true", help="repeat with every prune disabled")
    args = ap.parse_args()

    on, t_on = sweep(None)
    print("k\tstatus\tnodes\tskeletons")
    for k, o in sorted(on.items()):
        print(f"{k}\t{o.status.value}\t{o.nodes}\t{o.skeletons}")
    found = {k for k, o in on.items() if o.status is Status.WITNESS}
    print(f"witnessed {format_set(found)} in {t_on:.1f} s")
    if args.compare:
        off, t_off = sweep(frozenset())
        diff = [k for k in on if on[k].status is not off[k].status]
        print(f"prunes off: {t_off:.1f} s, verdict differences {diff or 'none'}")
        return 1 if diff else 0
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
