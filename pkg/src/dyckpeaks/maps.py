"""The path maps: complement, reversal, the peak-complement involution,
the case-based injection on paths starting with an up step, the rotation
map between its exceptional sets, the combined union bijection, and the
single-dip shuffle used for the m=1 count.

All maps validate their domain and raise typed errors instead of
returning garbage; the verify module relies on those signals to carve out
the exceptional subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, EmptyPath, NoBelowStep, NotInHatDU, NotInImage
from .paths import (
    DOWN,
    UP,
    below_up_count,
    is_dyck,
    is_prime_negative,
    path_from_peaks,
    peak_coordinates,
    semilength,
)

_SWAP = str.maketrans("UD", "DU")


def complement_phi(word: str) -> str:
    """Letterwise swap U <-> D; an involution."""
    return word.translate(_SWAP)


def reverse_theta(word: str) -> str:
    """Reversal of the step sequence; an involution (180-degree rotation)."""
    return word[::-1]


def gamma(word: str) -> str:
    """Peak-complement involution.

    Takes the x-coordinate set X and y-coordinate set Y of the peaks and
    rebuilds the unique path whose peaks have coordinates
    {0..n-1}\\X and {1..n}\\Y.  Sends a path with m below-ups and k peaks
    to one with n-m below-ups and n-k peaks, preserving the set of
    interior diagonal touch points.
    """
    n = semilength(word)
    if n == 0:
        raise EmptyPath("gamma needs semilength >= 1")
    peaks = peak_coordinates(word)
    xs = {p[0] for p in peaks}
    ys = {p[1] for p in peaks}
    xs_c = sorted(set(range(n)) - xs)
    ys_c = sorted(set(range(1, n + 1)) - ys)
    return path_from_peaks(n, zip(xs_c, ys_c))


# ---------------------------------------------------------------------------
# Decompositions shared by the case maps.


@dataclass(frozen=True)
class SDNUQParts:
    """P = S + 'D' + N + 'U' + Q with S Dyck and N weakly below.

    The elided D is the first down step starting at a vertex with y <= x
    (so its segment dips below the diagonal); the elided U is the first up
    step after it that ends on the diagonal.
    """

    s: str
    n_mid: str
    q: str

    def reassemble(self) -> str:
        return self.s + DOWN + self.n_mid + UP + self.q


def decompose_sdnuq(word: str) -> SDNUQParts:
    x = y = 0
    d_idx = None
    for i, step in enumerate(word):
        if step == DOWN:
            if y <= x:
                d_idx = i
                break
            x += 1
        else:
            y += 1
    if d_idx is None:
        raise NoBelowStep("path never dips below the diagonal (m = 0)")
    x += 1  # take the distinguished down step
    u_idx = None
    for j in range(d_idx + 1, len(word)):
        if word[j] == UP:
            y += 1
            if y == x:
                u_idx = j
                break
        else:
            x += 1
    assert u_idx is not None  # the path ends on the diagonal
    return SDNUQParts(s=word[:d_idx], n_mid=word[d_idx + 1 : u_idx], q=word[u_idx + 1 :])


def _split_rightmost_negative_prime(word: str) -> tuple[str, str]:
    # word is a nonempty balanced word staying weakly below the diagonal;
    # split off its last excursion (the factor after the last interior
    # return to the diagonal).
    h = 0
    last_zero = 0
    for i, step in enumerate(word[:-1]):
        h += 1 if step == UP else -1
        if h == 0:
            last_zero = i + 1
    return word[:last_zero], word[last_zero:]


def _leftmost_negative_prime(word: str) -> tuple[str, str]:
    # word starts with a down step; split off the first return to the
    # diagonal (a negative prime factor).
    h = 0
    for i, step in enumerate(word):
        h += 1 if step == UP else -1
        if h == 0:
            return word[: i + 1], word[i + 1 :]
    raise DomainError("no return to the diagonal")  # unreachable on balanced input


def _maximal_dyck_prefix(word: str) -> str:
    # longest balanced prefix with all partial heights >= 0
    h = 0
    cut = 0
    for i, step in enumerate(word):
        h += 1 if step == UP else -1
        if h < 0:
            break
        if h == 0:
            cut = i + 1
    return word[:cut]


def _maximal_negative_prefix(word: str) -> str:
    # longest balanced prefix with all partial heights <= 0
    h = 0
    cut = 0
    for i, step in enumerate(word):
        h += 1 if step == UP else -1
        if h > 0:
            break
        if h == 0:
            cut = i + 1
    return word[:cut]


# ---------------------------------------------------------------------------
# The injection f (m decreases by one) and its inverse case analysis.


@dataclass(frozen=True)
class FCase:
    """One of the four forward cases, with the parts needed to rebuild."""

    case: int  # 1..4
    s: str
    n_mid: str
    q: str
    nbar: str = ""
    r: str = ""


def classify_f_case(word: str) -> FCase:
    if not word or word[0] != UP:
        raise DomainError("f applies to paths starting with an up step")
    parts = decompose_sdnuq(word)
    s, n_mid, q = parts.s, parts.n_mid, parts.q
    if not n_mid:
        if not q:
            raise DomainError("empty N and Q (m = 1 endpoint dip); outside f's domain")
        if q[0] == DOWN:
            return FCase(case=1, s=s, n_mid=n_mid, q=q)
        return FCase(case=2, s=s, n_mid=n_mid, q=q)
    if is_prime_negative(n_mid):
        return FCase(case=3, s=s, n_mid=n_mid, q=q)
    nbar, r = _split_rightmost_negative_prime(n_mid)
    return FCase(case=4, s=s, n_mid=n_mid, q=q, nbar=nbar, r=r)


def apply_f(word: str) -> str:
    """Move one up step above the diagonal: m -> m-1 with n, k, and the
    last step unchanged.  Injective on paths starting with an up step."""
    c = classify_f_case(word)
    if c.case == 1:
        return UP + DOWN + c.s + c.q
    if c.case == 2:
        return UP + c.s + DOWN + c.q
    if c.case == 3:
        return UP + c.s + DOWN + c.n_mid + c.q
    return UP + DOWN + c.nbar + c.s + c.r + c.q


@dataclass(frozen=True)
class FPrimeCase:
    """One of the five inverse-side cases A..E with decomposition parts.

    The underlying split is P' = 'U' + S + 'D' + Q with the elided D the
    first down step ending on the diagonal (so S is Dyck).
    """

    case: str  # "A".."E"
    s: str
    q: str
    n_mid: str = ""
    m_part: str = ""
    r: str = ""
    q_rest: str = ""


def _decompose_usdq(word: str) -> tuple[str, str]:
    # split after the first down step that ends on the diagonal
    x = y = 0
    for i, step in enumerate(word):
        if step == UP:
            y += 1
        else:
            x += 1
            if x == y:
                return word[1:i], word[i + 1 :]
    raise DomainError("no down step ends on the diagonal")  # m = n edge


def classify_fprime_case(word: str) -> FPrimeCase:
    n = semilength(word)
    if not word or word[0] != UP:
        raise DomainError("classification applies to paths starting with an up step")
    m = below_up_count(word)
    if not 1 <= m <= n - 2:
        raise DomainError(f"m={m} outside the classification range 1..{n - 2}")
    s, q = _decompose_usdq(word)
    if s:
        if q and q[0] == UP:
            return FPrimeCase(case="A", s=s, q=q)
        r, q_rest = _leftmost_negative_prime(q)
        return FPrimeCase(case="B", s=s, q=q, r=r, q_rest=q_rest)
    if q[0] == UP:
        m_part = _maximal_dyck_prefix(q)
        return FPrimeCase(case="C", s=s, q=q, m_part=m_part, q_rest=q[len(m_part) :])
    n_mid = _maximal_negative_prefix(q)
    rest = q[len(n_mid) :]
    # rest starts with an up step whenever m <= n-2, so its maximal Dyck
    # prefix is nonempty
    m_part = _maximal_dyck_prefix(rest)
    rest2 = rest[len(m_part) :]
    if not rest2:
        return FPrimeCase(case="E", s=s, q=q, n_mid=n_mid, m_part=m_part)
    r, q_rest = _leftmost_negative_prime(rest2)
    return FPrimeCase(case="D", s=s, q=q, n_mid=n_mid, m_part=m_part, r=r, q_rest=q_rest)


def apply_f_inverse(word: str) -> str:
    """Inverse of apply_f on cases A-D; raises NotInImage on case E."""
    c = classify_fprime_case(word)
    if c.case == "A":
        return c.s + DOWN + UP + c.q
    if c.case == "B":
        return c.s + DOWN + c.r + UP + c.q_rest
    if c.case == "C":
        return c.m_part + DOWN + UP + c.q_rest
    if c.case == "D":
        return c.m_part + DOWN + c.n_mid + c.r + UP + c.q_rest
    raise NotInImage("case E paths have no preimage under f")


# ---------------------------------------------------------------------------
# The rotation map g between the exceptional sets.


def apply_g(word: str) -> str:
    """Rotate a case-E path 'U'+'D'+N+M to N+M+'D'+'U'.

    Sends class (n, m, k, U, D) to (n, m+1, k-1, D, U); injective.
    """
    c = classify_fprime_case(word)
    if c.case != "E":
        raise DomainError(f"g applies to case E paths only (got case {c.case})")
    return c.n_mid + c.m_part + DOWN + UP


def apply_g_inverse(word: str) -> str:
    """Inverse of apply_g; raises NotInHatDU when the path is not of the
    form N+M+'D'+'U' with N a nonempty maximal weakly-below prefix and M a
    nonempty Dyck word."""
    if len(word) < 2 or word[-2:] != DOWN + UP:
        raise NotInHatDU("path does not end with D,U")
    w = word[:-2]
    n_mid = _maximal_negative_prefix(w)
    if not n_mid:
        raise NotInHatDU("no leading below-excursion")
    m_part = w[len(n_mid) :]
    if not m_part or not is_dyck(m_part):
        raise NotInHatDU("trailing factor is empty or not a Dyck word")
    return UP + DOWN + n_mid + m_part


# ---------------------------------------------------------------------------
# The union bijection (Chung-Feller step on the DU/UD union) and the
# single-dip shuffle for the m=1 count.


def apply_cf_phi(word: str) -> str:
    """One Chung-Feller step on the union of DU-class and UD-class paths:
    decreases m by one, preserving the peak index of the union member
    (k for DU paths, k+1 for UD paths)."""
    n = semilength(word)
    if n == 0:
        raise EmptyPath("empty path")
    m = below_up_count(word)
    if not 2 <= m <= n - 1:
        raise DomainError(f"m={m} outside the union-map range 2..{n - 1}")
    first, last = word[0], word[-1]
    if first == UP and last == DOWN:
        return apply_f(word)
    if first == DOWN and last == UP:
        try:
            return apply_g_inverse(word)
        except NotInHatDU:
            return reverse_theta(apply_f_inverse(reverse_theta(word)))
    raise DomainError("path must start U end D, or start D end U")


def apply_cf_phi_inverse(word: str) -> str:
    """Inverse of apply_cf_phi: increases m by one on the target union."""
    n = semilength(word)
    if n == 0:
        raise EmptyPath("empty path")
    m = below_up_count(word)
    if not 1 <= m <= n - 2:
        raise DomainError(f"m={m} outside the union-map range 1..{n - 2}")
    first, last = word[0], word[-1]
    if first == DOWN and last == UP:
        return reverse_theta(apply_f(reverse_theta(word)))
    if first == UP and last == DOWN:
        c = classify_fprime_case(word)
        if c.case == "E":
            return apply_g(word)
        return apply_f_inverse(word)
    raise DomainError("path must start U end D, or start D end U")


def apply_tau(word: str) -> str:
    """Shuffle the single dip of an m=1 path starting U and ending D:
    S+'D'+'U'+Q  ->  'U'+S+'D'+Q, which is a Dyck path (m=0), same peaks."""
    if not word or word[0] != UP or word[-1] != DOWN:
        raise DomainError("tau applies to paths starting U and ending D")
    if below_up_count(word) != 1:
        raise DomainError("tau applies to paths with exactly one below-up (m = 1)")
    parts = decompose_sdnuq(word)
    assert not parts.n_mid  # m = 1 forces the dip to be a single D,U pair
    return UP + parts.s + DOWN + parts.q


def apply_tau_inverse(word: str) -> str:
    """Inverse shuffle on Dyck paths 'U'+S+'D'+Q whose S and Q parts are
    both nonempty; raises DomainError otherwise (no preimage)."""
    if not word or word[0] != UP or word[-1] != DOWN:
        raise DomainError("tau inverse applies to paths starting U and ending D")
    if below_up_count(word) != 0:
        raise DomainError("tau inverse applies to Dyck paths (m = 0)")
    s, q = _decompose_usdq(word)
    if not s or not q:
        raise DomainError("no preimage: S or Q empty in the U.S.D.Q split")
    return s + DOWN + UP + q


# CLI dispatch table; names are the stable external interface.
BIJECTIONS = {
    "phi": complement_phi,
    "theta": reverse_theta,
    "gamma": gamma,
    "f": apply_f,
    "f-inv": apply_f_inverse,
    "g": apply_g,
    "g-inv": apply_g_inverse,
    "cf-phi": apply_cf_phi,
    "cf-phi-inv": apply_cf_phi_inverse,
    "tau": apply_tau,
    "tau-inv": apply_tau_inverse,
}
