"""Adjacent-pair statistics and class filters.

The statistic vector of a path: semilength n, number m of up steps below
the diagonal, counts of the four adjacent step pairs (UD peaks, DU
valleys, UU double ascents, DD double descents), and the first/last step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyPath
from .paths import DOWN, UP, below_up_count, semilength


@dataclass(frozen=True)
class StatRecord:
    n: int
    m: int
    peaks: int
    valleys: int
    double_ascents: int
    double_descents: int
    first: str
    last: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "peaks": self.peaks,
            "valleys": self.valleys,
            "double_ascents": self.double_ascents,
            "double_descents": self.double_descents,
            "first": self.first,
            "last": self.last,
        }


def stat_record(word: str) -> StatRecord:
    """Full statistic vector; pairs are counted without wraparound."""
    if not word:
        raise EmptyPath("empty path has no first/last step")
    peaks = valleys = uu = dd = 0
    for a, b in zip(word, word[1:]):
        if a == UP:
            if b == DOWN:
                peaks += 1
            else:
                uu += 1
        else:
            if b == UP:
                valleys += 1
            else:
                dd += 1
    return StatRecord(
        n=semilength(word),
        m=below_up_count(word),
        peaks=peaks,
        valleys=valleys,
        double_ascents=uu,
        double_descents=dd,
        first=word[0],
        last=word[-1],
    )


@dataclass(frozen=True)
class ClassFilter:
    """Optional constraints on m, peak count, first and last step."""

    m: int | None = None
    k: int | None = None
    first: str | None = None
    last: str | None = None


def matches(word: str, flt: ClassFilter) -> bool:
    """True iff the path satisfies every constraint present in the filter."""
    if flt.m is None and flt.k is None and flt.first is None and flt.last is None:
        return True
    if not word:
        return False
    rec = stat_record(word)
    if flt.m is not None and rec.m != flt.m:
        return False
    if flt.k is not None and rec.peaks != flt.k:
        return False
    if flt.first is not None and rec.first != flt.first:
        return False
    if flt.last is not None and rec.last != flt.last:
        return False
    return True
