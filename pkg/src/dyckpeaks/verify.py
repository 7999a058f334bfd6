"""The regression engine: every counting identity is checked against the
brute-force census, and every map is exhaustively applied over its domain
with class-law, injectivity, round-trip and image checks.

Reports are deterministic: sweeps ascend in (n, m, k, word) order, so the
first failure found is the lexicographically minimal counterexample.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import maps
from .census import census_for, enumerate_paths
from .errors import DomainError, DyckError, NotInHatDU, NotInImage
from .formulas import (
    catalan,
    double_ascent_count,
    mixed_class_sum,
    narayana,
    peak_pair_sum,
    tau_count,
    uu_class_count,
)
from .paths import DOWN, UP, diagonal_crossings
from .stats import stat_record


class IdentityId(str, Enum):
    CHUNG_FELLER = "chung-feller"
    EQ1 = "eq1"
    EQ2_SYMMETRY = "eq2-symmetry"
    EQ3_SUM = "eq3-sum"
    EQ_PUU = "eq-puu"
    EQ_MIXED = "eq-mixed"
    NARAYANA_BASE = "narayana-base"
    TAU_COUNT = "tau-count"
    PHI_VALLEY_DUALITY = "phi-valley-duality"
    THETA_DUALITY = "theta-duality"


@dataclass
class VerifyReport:
    target: str
    n_range: tuple[int, int]
    status: str  # "pass" | "fail"
    checked_cases: int
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        doc = {
            "target": self.target,
            "n_range": list(self.n_range),
            "status": self.status,
            "checked_cases": self.checked_cases,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return json.dumps(doc, separators=(",", ":"))


def _cx(n, m, k, expected=None, actual=None, word=None, detail=None) -> dict:
    out = {"n": n, "m": m, "k": k}
    if word is not None:
        out["word"] = word
    if expected is not None:
        out["expected"] = str(expected)
    if actual is not None:
        out["actual"] = str(actual)
    if detail is not None:
        out["detail"] = detail
    return out


# ---------------------------------------------------------------------------
# Identity sweeps: census cell vs closed form (or symmetric cell).


def _identity_cases(ident: IdentityId, n: int):
    """Yield (m, k, expected, actual) over the identity's stated range."""
    c = census_for(n)
    if ident is IdentityId.CHUNG_FELLER:
        for m in range(n + 1):
            yield m, None, catalan(n), c.count(m=m)
    elif ident is IdentityId.EQ1:
        for m in range(n + 1):
            for a in range(n + 1):
                yield m, a, double_ascent_count(n, a), c.ascent_count(m, a)
    elif ident is IdentityId.EQ2_SYMMETRY:
        for m in range(n + 1):
            for k in range(1, n + 1):
                yield m, k, c.p(n - m, n - k), c.p(m, k)
    elif ident is IdentityId.EQ3_SUM:
        for m in range(1, n - 1):
            for k in range(1, n):
                yield m, k, peak_pair_sum(n, k), c.p(m, k) + c.p(m, n - k)
    elif ident is IdentityId.EQ_PUU:
        if n >= 2:
            for m in range(1, n):
                for k in range(1, n):
                    yield m, k, uu_class_count(n, k), c.p_class(UP, UP, m, k)
                    yield m, k, uu_class_count(n, k), c.p_class(DOWN, DOWN, m, k)
    elif ident is IdentityId.EQ_MIXED:
        for m in range(1, n - 1):
            for k in range(1, n):
                yield m, k, mixed_class_sum(n, k), c.p_class(
                    DOWN, UP, m, k
                ) + c.p_class(UP, DOWN, m, k + 1)
    elif ident is IdentityId.NARAYANA_BASE:
        for k in range(1, n + 1):
            yield 0, k, narayana(n, k), c.p(0, k)
    elif ident is IdentityId.TAU_COUNT:
        if n >= 2:
            for k in range(1, n):
                yield 1, k + 1, tau_count(n, k), c.p_class(UP, DOWN, 1, k + 1)
    elif ident is IdentityId.PHI_VALLEY_DUALITY:
        for m in range(n + 1):
            for k in range(n + 1):
                yield m, k, c.valley_count(n - m, k), c.p(m, k)
    elif ident is IdentityId.THETA_DUALITY:
        for m in range(n + 1):
            for k in range(n + 1):
                yield m, k, c.p_class(UP, DOWN, n - m, k + 1), c.p_class(
                    DOWN, UP, m, k
                )
    else:  # pragma: no cover
        raise ValueError(f"unknown identity {ident}")


def verify_identity(ident: IdentityId | str, n_max: int) -> VerifyReport:
    ident = IdentityId(ident)
    checked = 0
    for n in range(1, n_max + 1):
        for m, k, expected, actual in _identity_cases(ident, n):
            checked += 1
            if expected != actual:
                return VerifyReport(
                    target=ident.value,
                    n_range=(1, n_max),
                    status="fail",
                    checked_cases=checked,
                    counterexample=_cx(n, m, k, expected, actual),
                )
    return VerifyReport(
        target=ident.value, n_range=(1, n_max), status="pass", checked_cases=checked
    )


# ---------------------------------------------------------------------------
# Bijection sweeps.


@lru_cache(maxsize=None)
def _paths(n: int) -> tuple[str, ...]:
    """All paths of semilength n in (m, k, word) order."""
    words = list(enumerate_paths(n))
    recs = {w: stat_record(w) for w in words}
    words.sort(key=lambda w: (recs[w].m, recs[w].peaks, w))
    return tuple(words)


class _Fail(Exception):
    def __init__(self, counterexample):
        self.counterexample = counterexample


class _Sweep:
    """Accumulates checked cases; raises _Fail on the first violation."""

    def __init__(self):
        self.checked = 0

    def check(self, ok: bool, word: str, detail: str, got=None):
        self.checked += 1
        if not ok:
            rec = stat_record(word)
            cx = _cx(rec.n, rec.m, rec.peaks, word=word, detail=detail)
            if got is not None:
                cx["got"] = got
            raise _Fail(cx)


def _class_of(word: str) -> tuple[str, str]:
    return word[0], word[-1]


def _check_phi(sw: _Sweep, n: int, fwd):
    for w in _paths(n):
        r = stat_record(w)
        q = fwd(w)
        s = stat_record(q)
        sw.check(fwd(q) == w, w, "phi not an involution", got=q)
        sw.check(
            s.peaks == r.valleys
            and s.valleys == r.peaks
            and s.double_ascents == r.double_descents
            and s.double_descents == r.double_ascents
            and s.m == n - r.m,
            w,
            "phi class law violated",
            got=q,
        )


def _check_theta(sw: _Sweep, n: int, fwd):
    for w in _paths(n):
        r = stat_record(w)
        q = fwd(w)
        s = stat_record(q)
        sw.check(fwd(q) == w, w, "theta not an involution", got=q)
        sw.check(
            s.peaks == r.valleys
            and s.m == n - r.m
            and s.first == r.last
            and s.last == r.first,
            w,
            "theta class law violated",
            got=q,
        )


def _check_gamma(sw: _Sweep, n: int, fwd):
    swap = {UP: DOWN, DOWN: UP}
    for w in _paths(n):
        r = stat_record(w)
        q = fwd(w)
        s = stat_record(q)
        sw.check(fwd(q) == w, w, "gamma not an involution", got=q)
        sw.check(
            s.m == n - r.m and s.peaks == n - r.peaks,
            w,
            "gamma index law (m,k)->(n-m,n-k) violated",
            got=q,
        )
        sw.check(
            s.first == swap[r.first] and s.last == swap[r.last],
            w,
            "gamma start/end class law violated",
            got=q,
        )
        sw.check(
            diagonal_crossings(q) == diagonal_crossings(w),
            w,
            "gamma changed the diagonal crossing set",
            got=q,
        )


def _up_paths(n: int, m: int) -> list[str]:
    return [w for w in _paths(n) if w[0] == UP and stat_record(w).m == m]


def _check_f(sw: _Sweep, n: int, fwd):
    for m in range(1, n - 1):
        domain = _up_paths(n, m + 1)
        target = _up_paths(n, m)
        images = {}
        for w in domain:
            r = stat_record(w)
            q = fwd(w)
            s = stat_record(q)
            sw.check(
                s.m == m and s.peaks == r.peaks and s.first == UP and s.last == r.last,
                w,
                "f class law violated",
                got=q,
            )
            sw.check(q not in images, w, f"f not injective (collides with {images.get(q)})", got=q)
            images[q] = w
            sw.check(maps.apply_f_inverse(q) == w, w, "f-inverse round trip failed", got=q)
        expected_image = set()
        case_e = []
        for t in target:
            case = maps.classify_fprime_case(t).case
            sw.check(case in "ABCDE", t, "unclassifiable target path")
            if case == "E":
                case_e.append(t)
            else:
                expected_image.add(t)
        missing = expected_image - set(images)
        extra = set(images) - expected_image
        if missing or extra:
            witness = min(missing | extra)
            sw.check(False, witness, "image of f is not exactly cases A-D")
        # induced equality: the UU classes biject at every peak count
        for k in range(n + 1):
            dk = sum(
                1
                for w in domain
                if w[-1] == UP and stat_record(w).peaks == k
            )
            tk = sum(
                1
                for t in target
                if t[-1] == UP and stat_record(t).peaks == k
            )
            sw.check(
                dk == tk,
                domain[0] if domain else UP + DOWN,
                f"UU-class count differs between m={m + 1} and m={m} at k={k}",
            )
        for t in case_e:
            sw.check(t[-1] == DOWN, t, "case E path not in the UD class")


def _check_f_inv(sw: _Sweep, n: int, fwd):
    for m in range(1, n - 1):
        for t in _up_paths(n, m):
            case = maps.classify_fprime_case(t).case
            if case == "E":
                try:
                    fwd(t)
                except NotInImage:
                    sw.check(True, t, "")
                else:
                    sw.check(False, t, "case E path must raise NotInImage")
                continue
            p = fwd(t)
            s = stat_record(p)
            r = stat_record(t)
            sw.check(
                s.m == m + 1 and s.peaks == r.peaks and s.first == UP and s.last == r.last,
                t,
                "f-inverse class law violated",
                got=p,
            )
            sw.check(maps.apply_f(p) == t, t, "f round trip failed", got=p)


def _case_e_paths(n: int, m: int) -> list[str]:
    return [
        t for t in _up_paths(n, m) if maps.classify_fprime_case(t).case == "E"
    ]


def _du_paths(n: int, m: int) -> list[str]:
    return [
        w
        for w in _paths(n)
        if w[0] == DOWN and w[-1] == UP and stat_record(w).m == m
    ]


def _check_g(sw: _Sweep, n: int, fwd):
    for m in range(1, n - 1):
        images = {}
        for t in _case_e_paths(n, m):
            r = stat_record(t)
            q = fwd(t)
            s = stat_record(q)
            sw.check(
                s.m == m + 1
                and s.peaks == r.peaks - 1
                and s.first == DOWN
                and s.last == UP,
                t,
                "g class law (m,k)->(m+1,k-1) with D..U violated",
                got=q,
            )
            sw.check(q not in images, t, "g not injective", got=q)
            images[q] = t
            sw.check(maps.apply_g_inverse(q) == t, t, "g-inverse round trip failed", got=q)
        # image characterization: g-inverse succeeds exactly on the image
        hat_du = set()
        for w in _du_paths(n, m + 1):
            try:
                maps.apply_g_inverse(w)
            except NotInHatDU:
                continue
            hat_du.add(w)
        if hat_du != set(images):
            witness = min(hat_du ^ set(images))
            sw.check(False, witness, "image of g is not the g-invertible DU set")


def _check_g_inv(sw: _Sweep, n: int, fwd):
    for m in range(1, n - 1):
        expected = len(_case_e_paths(n, m))
        successes = 0
        for w in _du_paths(n, m + 1):
            try:
                p = fwd(w)
            except NotInHatDU:
                continue
            successes += 1
            sw.check(maps.apply_g(p) == w, w, "g round trip failed", got=p)
            sw.check(
                maps.classify_fprime_case(p).case == "E",
                w,
                "g-inverse output is not a case E path",
                got=p,
            )
        sw.check(
            successes == expected,
            DOWN * n + UP * n,
            f"g-invertible DU count {successes} != case E count {expected} at m={m}",
        )


def _union_key(word: str) -> int:
    # peak index of a union member: k for DU-class, k-1 for UD-class
    k = stat_record(word).peaks
    return k if word[0] == DOWN else k - 1


def _union_paths(n: int, m: int) -> list[str]:
    return [
        w
        for w in _paths(n)
        if stat_record(w).m == m and _class_of(w) in ((DOWN, UP), (UP, DOWN))
    ]


def _check_cf_phi(sw: _Sweep, n: int, fwd):
    for m in range(1, n - 1):
        domain = _union_paths(n, m + 1)
        target = set(_union_paths(n, m))
        images = {}
        for w in domain:
            q = fwd(w)
            sw.check(
                stat_record(q).m == m and q in target,
                w,
                "union map left the target union",
                got=q,
            )
            sw.check(_union_key(q) == _union_key(w), w, "union peak index changed", got=q)
            sw.check(q not in images, w, "union map not injective", got=q)
            images[q] = w
            sw.check(
                maps.apply_cf_phi_inverse(q) == w,
                w,
                "union map round trip failed",
                got=q,
            )
        if set(images) != target:
            witness = min(set(images) ^ target)
            sw.check(False, witness, "union map is not onto the target union")


def _check_cf_phi_inv(sw: _Sweep, n: int, fwd):
    for m in range(1, n - 1):
        for w in _union_paths(n, m):
            q = fwd(w)
            sw.check(
                stat_record(q).m == m + 1 and _union_key(q) == _union_key(w),
                w,
                "inverse union map class law violated",
                got=q,
            )
            sw.check(maps.apply_cf_phi(q) == w, w, "inverse union round trip failed", got=q)


def _ud_paths(n: int, m: int) -> list[str]:
    return [
        w
        for w in _paths(n)
        if w[0] == UP and w[-1] == DOWN and stat_record(w).m == m
    ]


def _check_tau(sw: _Sweep, n: int, fwd):
    images = {}
    for w in _ud_paths(n, 1):
        r = stat_record(w)
        q = fwd(w)
        s = stat_record(q)
        sw.check(
            s.m == 0 and s.peaks == r.peaks and s.first == UP and s.last == DOWN,
            w,
            "tau class law violated",
            got=q,
        )
        sw.check(q not in images, w, "tau not injective", got=q)
        images[q] = w
        sw.check(maps.apply_tau_inverse(q) == w, w, "tau round trip failed", got=q)
    # image characterization: tau-inverse succeeds exactly on the image
    invertible = set()
    for t in _ud_paths(n, 0):
        try:
            maps.apply_tau_inverse(t)
        except DomainError:
            continue
        invertible.add(t)
    if invertible != set(images):
        witness = min(invertible ^ set(images))
        sw.check(False, witness, "image of tau is not the tau-invertible Dyck set")


def _check_tau_inv(sw: _Sweep, n: int, fwd):
    for t in _ud_paths(n, 0):
        try:
            p = fwd(t)
        except DomainError:
            continue
        sw.check(maps.apply_tau(p) == t, t, "tau-inverse round trip failed", got=p)
        s = stat_record(p)
        r = stat_record(t)
        sw.check(
            s.m == 1 and s.peaks == r.peaks,
            t,
            "tau-inverse class law violated",
            got=p,
        )


_BIJECTION_CHECKS = {
    "phi": (_check_phi, maps.complement_phi),
    "theta": (_check_theta, maps.reverse_theta),
    "gamma": (_check_gamma, maps.gamma),
    "f": (_check_f, maps.apply_f),
    "f-inv": (_check_f_inv, maps.apply_f_inverse),
    "g": (_check_g, maps.apply_g),
    "g-inv": (_check_g_inv, maps.apply_g_inverse),
    "cf-phi": (_check_cf_phi, maps.apply_cf_phi),
    "cf-phi-inv": (_check_cf_phi_inv, maps.apply_cf_phi_inverse),
    "tau": (_check_tau, maps.apply_tau),
    "tau-inv": (_check_tau_inv, maps.apply_tau_inverse),
}

BIJECTION_IDS = tuple(_BIJECTION_CHECKS)


def verify_bijection(bid: str, n_max: int, forward=None) -> VerifyReport:
    """Exhaustively check one map over its domain for all n <= n_max.

    forward, when given, replaces the map under test (used to prove the
    harness detects broken implementations).
    """
    if bid not in _BIJECTION_CHECKS:
        raise ValueError(f"unknown bijection {bid!r}")
    checker, default_fwd = _BIJECTION_CHECKS[bid]
    fwd = forward if forward is not None else default_fwd
    sw = _Sweep()
    try:
        for n in range(1, n_max + 1):
            checker(sw, n, fwd)
    except _Fail as f:
        return VerifyReport(
            target=bid,
            n_range=(1, n_max),
            status="fail",
            checked_cases=sw.checked,
            counterexample=f.counterexample,
        )
    except DyckError as e:
        return VerifyReport(
            target=bid,
            n_range=(1, n_max),
            status="fail",
            checked_cases=sw.checked,
            counterexample={"detail": f"{type(e).__name__}: {e}"},
        )
    return VerifyReport(
        target=bid, n_range=(1, n_max), status="pass", checked_cases=sw.checked
    )
