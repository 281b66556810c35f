"""Finite sets of nonnegative integers: sumsets, scaling and interval notation.

Sets are plain ``frozenset[int]``.  Sumsets go through Python integers used
as bitsets, which keeps the recursions for orders up to a few hundred fast.
"""
from __future__ import annotations

import re
from typing import Iterable


def interval(lo: int, hi: int) -> frozenset[int]:
    return frozenset(range(max(lo, 0), hi + 1))


def to_bits(s: Iterable[int]) -> int:
    b = 0
    for v in s:
        if v < 0:
            raise ValueError(f"negative element {v}")
        b |= 1 << v
    return b


def from_bits(b: int) -> frozenset[int]:
    out = []
    v = 0
    while b:
        low = b & -b
        v = low.bit_length() - 1
        out.append(v)
        b ^= low
    return frozenset(out)


def sumset(*sets: Iterable[int]) -> frozenset[int]:
    """All sums taking one element from each set (empty if any set is empty)."""
    if not sets:
        return frozenset({0})
    acc = 1
    for s in sets:
        s = list(s)
        if not s:
            return frozenset()
        nxt = 0
        for a in s:
            nxt |= acc << a
        acc = nxt
    return from_bits(acc)


def shift(s: Iterable[int], c: int) -> frozenset[int]:
    return frozenset(v + c for v in s)


def scale(c: int, s: Iterable[int]) -> frozenset[int]:
    return frozenset(c * v for v in s)


def clip(s: Iterable[int], lo: int, hi: int) -> frozenset[int]:
    return frozenset(v for v in s if lo <= v <= hi)


def runs(s: Iterable[int]) -> list[tuple[int, int]]:
    vals = sorted(set(s))
    out: list[tuple[int, int]] = []
    for v in vals:
        if out and out[-1][1] == v - 1:
            out[-1] = (out[-1][0], v)
        else:
            out.append((v, v))
    return out


def format_set(s: Iterable[int]) -> str:
    """Interval notation: runs of three or more become ``[a,b]``, the rest go in one ``{...}``."""
    parts, singles = [], []
    for lo, hi in runs(s):
        if hi - lo >= 2:
            parts.append(f"[{lo},{hi}]")
        else:
            singles.extend(range(lo, hi + 1))
    if singles:
        parts.append("{" + ",".join(map(str, singles)) + "}")
    return " u ".join(parts) if parts else "{}"


_TOKEN = re.compile(r"\s*(\[\s*\d+\s*,\s*\d+\s*\]|\{[\d,\s]*\}|[A-Za-z]+|[u\-()])")


def parse_set(text: str, names: dict[str, frozenset[int]] | None = None) -> frozenset[int]:
    """Evaluate ``[a,b]``, ``{a,b}``, named sets, ``u`` (union) and ``-`` (difference), left to right."""
    names = names or {}
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse set expression at {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def atom(i):
        t = toks[i]
        if t == "(":
            val, i = expr(i + 1)
            if i >= len(toks) or toks[i] != ")":
                raise ValueError("unbalanced parentheses")
            return val, i + 1
        if t.startswith("["):
            lo, hi = map(int, t[1:-1].split(","))
            return interval(lo, hi), i + 1
        if t.startswith("{"):
            body = t[1:-1].strip()
            return frozenset(int(x) for x in body.split(",")) if body else frozenset(), i + 1
        if t in names:
            return names[t], i + 1
        raise ValueError(f"unknown set name {t!r}")

    def expr(i):
        val, i = atom(i)
        while i < len(toks) and toks[i] in ("u", "-"):
            op = toks[i]
            rhs, i = atom(i + 1)
            val = val | rhs if op == "u" else val - rhs
        return val, i

    if not toks:
        raise ValueError("empty set expression")
    val, i = expr(0)
    if i != len(toks):
        raise ValueError(f"trailing tokens {toks[i:]}")
    return val
