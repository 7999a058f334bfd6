"""Exhaustive enumeration and the census oracle.

enumerate_paths streams every balanced word of a given semilength in
lexicographic order (U < D).  build_census counts all of them by
(m, peaks, first, last) plus a parallel (m, double_ascents) table; these
exact tables are the brute-force oracle every closed form is checked
against.  The counting loop is vectorized with numpy over chunks of the
path space, which changes nothing about its exhaustive character: every
path is generated and classified.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceBound
from .paths import DOWN, UP
from .stats import ClassFilter, matches

MAX_SEMILENGTH = 14

_CHUNK = 200_000


def enumerate_paths(n: int, flt: ClassFilter | None = None):
    """Yield every path of semilength n (optionally filtered), each
    exactly once, in lexicographic order with U < D."""
    if n == 0:
        if flt is None or matches("", flt):
            yield ""
        return
    for ups in itertools.combinations(range(2 * n), n):
        chars = [DOWN] * (2 * n)
        for i in ups:
            chars[i] = UP
        word = "".join(chars)
        if flt is None or matches(word, flt):
            yield word


@dataclass
class Census:
    """Exact count tables for one semilength.

    cells maps (m, k, first, last) -> count where k is the peak count;
    ascents maps (m, a) -> count where a is the double-ascent count.
    Zero cells are omitted.
    """

    n: int
    cells: dict[tuple[int, int, str, str], int] = field(default_factory=dict)
    ascents: dict[tuple[int, int], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.cells.values())

    def count(self, m=None, k=None, first=None, last=None) -> int:
        """Marginal count over the unconstrained indices."""
        return sum(
            c
            for (cm, ck, cf, cl), c in self.cells.items()
            if (m is None or cm == m)
            and (k is None or ck == k)
            and (first is None or cf == first)
            and (last is None or cl == last)
        )

    def p(self, m: int, k: int) -> int:
        return self.count(m=m, k=k)

    def p_class(self, first: str, last: str, m: int, k: int) -> int:
        return self.cells.get((m, k, first, last), 0)

    def valley_count(self, m: int, j: int) -> int:
        """Paths with m below-ups and j valleys, derived from the cells via
        valleys = peaks - [first=U, last=D] + [first=D, last=U]."""
        total = 0
        for (cm, ck, cf, cl), c in self.cells.items():
            if cm != m:
                continue
            v = ck - (cf == UP and cl == DOWN) + (cf == DOWN and cl == UP)
            if v == j:
                total += c
        return total

    def ascent_count(self, m: int, a: int) -> int:
        return self.ascents.get((m, a), 0)

    def to_json(self) -> str:
        cells = [
            {"m": m, "k": k, "first": f, "last": l, "count": str(c)}
            for (m, k, f, l), c in sorted(self.cells.items())
        ]
        return json.dumps({"n": self.n, "cells": cells}, separators=(",", ":"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "k", "first", "last", "count"])
        for (m, k, f, l), c in sorted(self.cells.items()):
            w.writerow([self.n, m, k, f, l, c])
        return buf.getvalue()


def _count_chunk(up: np.ndarray, n: int, cell_acc: np.ndarray, asc_acc: np.ndarray):
    # up: (rows, 2n) boolean, True where the step is U
    step = np.where(up, 1, -1).astype(np.int32)
    h = np.cumsum(step, axis=1)  # height y - x after each step
    h_before = h - step
    m = (up & (h_before < 0)).sum(axis=1)
    k = (up[:, :-1] & ~up[:, 1:]).sum(axis=1)
    a = (up[:, :-1] & up[:, 1:]).sum(axis=1)
    first = up[:, 0].astype(np.int64)
    last = up[:, -1].astype(np.int64)
    width = n + 1
    cell_code = ((m * width + k) * 2 + first) * 2 + last
    asc_code = m * width + a
    cell_acc += np.bincount(cell_code, minlength=cell_acc.size)
    asc_acc += np.bincount(asc_code, minlength=asc_acc.size)


def build_census(n: int, limit: int = MAX_SEMILENGTH) -> Census:
    """Count every path of semilength n >= 1 by class; exact integers.

    Deterministic and chunk-order independent (the per-chunk tables merge
    by addition).
    """
    if n > limit:
        raise ResourceBound(f"semilength {n} exceeds the ceiling {limit}")
    if n < 1:
        raise ValueError("census requires n >= 1")
    width = n + 1
    cell_acc = np.zeros(width * width * 4, dtype=np.int64)
    asc_acc = np.zeros(width * width, dtype=np.int64)
    combos = itertools.combinations(range(2 * n), n)
    while True:
        chunk = list(itertools.islice(combos, _CHUNK))
        if not chunk:
            break
        idx = np.array(chunk, dtype=np.int64)
        up = np.zeros((len(chunk), 2 * n), dtype=bool)
        up[np.arange(len(chunk))[:, None], idx] = True
        _count_chunk(up, n, cell_acc, asc_acc)
    census = Census(n=n)
    for code, c in enumerate(cell_acc):
        if c:
            rest, last = divmod(code, 2)
            rest, first = divmod(rest, 2)
            m, k = divmod(rest, width)
            census.cells[(m, k, UP if first else DOWN, UP if last else DOWN)] = int(c)
    for code, c in enumerate(asc_acc):
        if c:
            m, a = divmod(code, width)
            census.ascents[(m, a)] = int(c)
    return census


_CENSUS_CACHE: dict[int, Census] = {}


def census_for(n: int, limit: int = MAX_SEMILENGTH) -> Census:
    """Memoized build_census; treat the result as read-only."""
    if n not in _CENSUS_CACHE:
        _CENSUS_CACHE[n] = build_census(n, limit=limit)
    return _CENSUS_CACHE[n]
