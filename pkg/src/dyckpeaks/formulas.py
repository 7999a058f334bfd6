"""Exact closed-form evaluators, over arbitrary-precision integers.

Every division in these closed forms is mathematically exact; the shared
helper checks the remainder and fails loudly, so a silent math bug turns
into a typed error.  Binomials with k < 0 or k > n evaluate to 0, which
makes the shifted edge terms total functions.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import DomainError, InexactDivision


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{num} is not divisible by {den}")
    return q


def catalan(n: int) -> int:
    """C(2n, n) / (n + 1)."""
    if n < 0:
        raise DomainError("catalan needs n >= 0")
    return exact_div(binomial(2 * n, n), n + 1)


def narayana(n: int, k: int) -> int:
    """Dyck paths of semilength n with k peaks: C(n,k) C(n,k-1) / n."""
    if n < 1:
        raise DomainError("narayana needs n >= 1")
    return exact_div(binomial(n, k) * binomial(n, k - 1), n)


def double_ascent_count(n: int, k: int) -> int:
    """Paths with k double ascents and any fixed m: C(n-1,k) C(n,k) / (k+1)."""
    if n < 1 or k < 0:
        raise DomainError("needs n >= 1 and k >= 0")
    return exact_div(binomial(n - 1, k) * binomial(n, k), k + 1)


def peak_pair_sum(n: int, k: int) -> int:
    """The m-independent sum of the k and n-k peak counts:
    2(n+2) C(n,k-1) C(n,k+1) / (n(n-1))."""
    if n < 3 or not 1 <= k <= n - 1:
        raise DomainError("needs n >= 3 and 1 <= k <= n-1")
    return exact_div(
        2 * (n + 2) * binomial(n, k - 1) * binomial(n, k + 1), n * (n - 1)
    )


def uu_class_count(n: int, k: int) -> int:
    """Paths starting and ending with an up step, any fixed m in 1..n-1:
    C(n-1,k) C(n-1,k-1) / (n-1)."""
    if n < 2 or not 1 <= k <= n - 1:
        raise DomainError("needs n >= 2 and 1 <= k <= n-1")
    return exact_div(binomial(n - 1, k) * binomial(n - 1, k - 1), n - 1)


def mixed_class_sum(n: int, k: int) -> int:
    """The m-independent sum of the DU-class k count and UD-class k+1
    count: 2 C(n-1,k-1) C(n-1,k+1) / (n-1)."""
    if n < 2 or not 1 <= k <= n - 1:
        raise DomainError("needs n >= 2 and 1 <= k <= n-1")
    return exact_div(2 * binomial(n - 1, k - 1) * binomial(n - 1, k + 1), n - 1)


def tau_count(n: int, k: int) -> int:
    """UD-class paths with m=1 and k+1 peaks, by inclusion-exclusion on
    the single-dip shuffle image."""
    if n < 2 or not 1 <= k <= n - 1:
        raise DomainError("needs n >= 2 and 1 <= k <= n-1")
    return narayana(n, k + 1) - narayana(n - 1, k) - narayana(n - 1, k + 1)


class FormulaId(str, Enum):
    BINOMIAL = "binomial"
    CATALAN = "catalan"
    NARAYANA = "narayana"
    EQ1 = "eq1"
    EQ3_SUM = "eq3-sum"
    EQ_PUU = "eq-puu"
    EQ_MIXED = "eq-mixed"
    TAU_COUNT = "tau-count"


_EVALUATORS = {
    FormulaId.BINOMIAL: (2, binomial),
    FormulaId.CATALAN: (1, catalan),
    FormulaId.NARAYANA: (2, narayana),
    FormulaId.EQ1: (2, double_ascent_count),
    FormulaId.EQ3_SUM: (2, peak_pair_sum),
    FormulaId.EQ_PUU: (2, uu_class_count),
    FormulaId.EQ_MIXED: (2, mixed_class_sum),
    FormulaId.TAU_COUNT: (2, tau_count),
}


def evaluate_formula(fid: FormulaId | str, params) -> int:
    fid = FormulaId(fid)
    arity, fn = _EVALUATORS[fid]
    params = tuple(params)
    if len(params) != arity:
        raise DomainError(f"{fid.value} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
