"""Path words, geometry, and the peak-coordinate encoding.

A lattice path from (0,0) to (n,n) with unit up steps U=(0,1) and down
steps D=(1,0) is represented as a plain string over the alphabet {U, D}
with equally many of each letter.  All functions here are pure; words are
immutable and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyPath, IllegalCharacter, InvalidPeakList, Unbalanced

UP = "U"
DOWN = "D"

_WORD_RE = re.compile(r"^[UD]*$")


def parse_path(text: str) -> str:
    """Validate a path word. Returns the word itself on success."""
    if not _WORD_RE.match(text):
        raise IllegalCharacter(f"path text must match ^[UD]*$, got {text!r}")
    if text.count(UP) != text.count(DOWN):
        raise Unbalanced(
            f"{text.count(UP)} up steps vs {text.count(DOWN)} down steps"
        )
    return text


def semilength(word: str) -> int:
    return len(word) // 2


def vertices(word: str) -> list[tuple[int, int]]:
    """All 2n+1 lattice points visited, from (0,0) to (n,n)."""
    x, y = 0, 0
    pts = [(0, 0)]
    for step in word:
        if step == UP:
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return pts


def below_up_count(word: str) -> int:
    """Number of up steps lying strictly below the diagonal y=x.

    An up step counts when its start vertex (x,y) has y < x; one starting
    on the diagonal does not (its segment lies weakly above).
    """
    x, y, m = 0, 0, 0
    for step in word:
        if step == UP:
            if y < x:
                m += 1
            y += 1
        else:
            x += 1
    return m


def peak_coordinates(word: str) -> tuple[tuple[int, int], ...]:
    """Coordinates of the vertices between each UD factor, left to right.

    Both coordinate sequences are strictly increasing, so the path can be
    rebuilt from them (see path_from_peaks).
    """
    peaks = []
    x, y = 0, 0
    for a, b in zip(word, word[1:]):
        if a == UP:
            y += 1
            if b == DOWN:
                peaks.append((x, y))
        else:
            x += 1
    return tuple(peaks)


def path_from_peaks(n: int, peaks) -> str:
    """The unique path of semilength n with exactly the given peaks.

    Builds D^{x1} U^{y1} D^{x2-x1} U^{y2-y1} ... D^{n-xk} U^{n-yk}; an
    empty peak list gives D^n U^n.  Inverse of peak_coordinates.
    """
    peaks = list(peaks)
    px, py = -1, 0
    for x, y in peaks:
        if not (px < x and py < y):
            raise InvalidPeakList(f"coordinates not strictly increasing at {(x, y)}")
        px, py = x, y
    if peaks:
        if peaks[0][0] < 0 or peaks[0][1] < 1:
            raise InvalidPeakList(f"first peak {peaks[0]} out of range")
        if peaks[-1][0] > n - 1 or peaks[-1][1] > n:
            raise InvalidPeakList(f"last peak {peaks[-1]} out of range for n={n}")
    parts = []
    cx, cy = 0, 0
    for x, y in peaks:
        parts.append(DOWN * (x - cx))
        parts.append(UP * (y - cy))
        cx, cy = x, y
    parts.append(DOWN * (n - cx))
    parts.append(UP * (n - cy))
    return "".join(parts)


def is_dyck(word: str) -> bool:
    """True when every vertex satisfies y >= x (never dips below)."""
    h = 0
    for step in word:
        h += 1 if step == UP else -1
        if h < 0:
            return False
    return True


def is_negative_dyck(word: str) -> bool:
    """True when every vertex satisfies y <= x (stays weakly below)."""
    h = 0
    for step in word:
        h += 1 if step == UP else -1
        if h > 0:
            return False
    return True


def _is_prime(word: str, sign: int) -> bool:
    # sign +1: above the diagonal, -1: below
    if not word:
        return False
    h = 0
    for step in word[:-1]:
        h += 1 if step == UP else -1
        if sign * h <= 0:
            return False
    return True


def is_prime_dyck(word: str) -> bool:
    """Nonempty Dyck path touching the diagonal only at its endpoints."""
    return is_dyck(word) and _is_prime(word, +1)


def is_prime_negative(word: str) -> bool:
    """Mirror notion: nonempty, weakly below, interior strictly below."""
    return is_negative_dyck(word) and _is_prime(word, -1)


@dataclass(frozen=True)
class ShapeFlags:
    is_dyck: bool
    is_negative_dyck: bool
    is_prime_dyck: bool
    is_prime_negative: bool


def shape_flags(word: str) -> ShapeFlags:
    return ShapeFlags(
        is_dyck=is_dyck(word),
        is_negative_dyck=is_negative_dyck(word),
        is_prime_dyck=is_prime_dyck(word),
        is_prime_negative=is_prime_negative(word),
    )


def diagonal_touches(word: str) -> list[int]:
    """All a with 0 < a < n such that (a,a) is a vertex (endpoints excluded)."""
    n = semilength(word)
    out = []
    x, y = 0, 0
    for step in word:
        if step == UP:
            y += 1
        else:
            x += 1
        if x == y and 0 < x < n:
            out.append(x)
    return sorted(set(out))


def diagonal_crossings(word: str) -> list[int]:
    """Interior diagonal points where the path changes side.

    A vertex (a,a) with 0 < a < n counts when the steps around it are
    equal (UU: from below to above, DD: from above to below); a peak or
    valley sitting on the diagonal merely touches it.  The peak-complement
    involution preserves this set, not the full touch set.
    """
    n = semilength(word)
    out = []
    x, y = 0, 0
    for i, step in enumerate(word[:-1]):
        if step == UP:
            y += 1
        else:
            x += 1
        if x == y and 0 < x < n and word[i + 1] == step:
            out.append(x)
    return out


def _require_nonempty(word: str) -> None:
    if not word:
        raise EmptyPath("operation requires semilength >= 1")
