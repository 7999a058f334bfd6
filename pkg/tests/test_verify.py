import json

import pytest

from dyckpeaks import (
    BIJECTION_IDS,
    IdentityId,
    apply_f,
    classify_f_case,
    verify_bijection,
    verify_identity,
)
from dyckpeaks.maps import DOWN, UP


@pytest.mark.parametrize("ident", list(IdentityId))
def test_identities_pass(ident):
    rep = verify_identity(ident, 8)
    assert rep.passed, rep.counterexample
    assert rep.checked_cases > 0


@pytest.mark.parametrize("bid", BIJECTION_IDS)
def test_bijections_pass(bid):
    rep = verify_bijection(bid, 7)
    assert rep.passed, rep.counterexample
    assert rep.checked_cases > 0


def test_vacuous_range_passes():
    # n=2 leaves the pair-sum range 1 <= m <= n-2 empty
    rep = verify_identity(IdentityId.EQ3_SUM, 2)
    assert rep.passed and rep.checked_cases == 0


def test_report_json():
    doc = json.loads(verify_identity("eq2-symmetry", 4).to_json())
    assert doc["target"] == "eq2-symmetry"
    assert doc["n_range"] == [1, 4]
    assert doc["status"] == "pass"
    assert "counterexample" not in doc


def test_reports_deterministic():
    a = verify_bijection("gamma", 5).to_json()
    b = verify_bijection("gamma", 5).to_json()
    assert a == b


def _f_with_swapped_cases(word):
    # sabotage: swap the outputs of the two empty-middle cases
    c = classify_f_case(word)
    if c.case == 1:
        return UP + c.s + DOWN + c.q
    if c.case == 2:
        return UP + DOWN + c.s + c.q
    return apply_f(word)


def _broken_gamma(word):
    return word  # drops the peak complement entirely


def test_mutation_detected_for_f():
    rep = verify_bijection("f", 6, forward=_f_with_swapped_cases)
    assert not rep.passed
    assert rep.counterexample is not None
    assert "word" in rep.counterexample or "detail" in rep.counterexample


def test_mutation_detected_for_gamma():
    rep = verify_bijection("gamma", 4, forward=_broken_gamma)
    assert not rep.passed
    assert rep.counterexample is not None


def test_mutation_counterexample_minimal():
    rep = verify_bijection("f", 6, forward=_f_with_swapped_cases)
    cx = rep.counterexample
    # the failing witness is the smallest case: swapping case 1 and 2
    # first bites at semilength 3
    assert cx["n"] == 3
