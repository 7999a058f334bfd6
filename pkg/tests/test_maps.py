import pytest

from dyckpeaks import (
    apply_cf_phi,
    apply_cf_phi_inverse,
    apply_f,
    apply_f_inverse,
    apply_g,
    apply_g_inverse,
    apply_tau,
    apply_tau_inverse,
    classify_f_case,
    classify_fprime_case,
    complement_phi,
    decompose_sdnuq,
    gamma,
    reverse_theta,
    stat_record,
)
from dyckpeaks.errors import (
    DomainError,
    EmptyPath,
    NoBelowStep,
    NotInHatDU,
    NotInImage,
)

FIG2 = "UUDUUDDDDDUUDUUUDUDD"
FIG2_IMAGE = "DDUDUUDUUDUUDDDDUDUU"


def klass(w):
    r = stat_record(w)
    return (r.n, r.m, r.peaks, r.first, r.last)


def test_phi_theta_basics():
    assert complement_phi("UUDD") == "DDUU"
    assert complement_phi("") == ""
    assert complement_phi("UDDU") == "DUUD"
    assert reverse_theta("UUDD") == "DDUU"
    assert reverse_theta("UDDU") == "UDDU"
    assert reverse_theta("UDUDDU") == "UDDUDU"


def test_gamma_fig2():
    assert gamma(FIG2) == FIG2_IMAGE
    assert gamma(FIG2_IMAGE) == FIG2
    assert klass(FIG2) == (10, 3, 5, "U", "D")
    assert klass(FIG2_IMAGE) == (10, 7, 5, "D", "U")


def test_gamma_small():
    assert gamma("UDUDUD") == "DDDUUU"  # staircase -> zero peaks
    assert gamma("UUDD") == "DUDU"
    assert klass("DUDU") == (2, 2, 1, "D", "U")
    with pytest.raises(EmptyPath):
        gamma("")


def test_decompose_sdnuq():
    parts = decompose_sdnuq("UDDUDU")
    assert (parts.s, parts.n_mid, parts.q) == ("UD", "", "DU")
    parts = decompose_sdnuq("UDDDUUUD")
    assert (parts.s, parts.n_mid, parts.q) == ("UD", "DU", "UD")
    parts = decompose_sdnuq("UDDDUDUUUD")
    assert (parts.s, parts.n_mid, parts.q) == ("UD", "DUDU", "UD")
    assert parts.reassemble() == "UDDDUDUUUD"
    with pytest.raises(NoBelowStep):
        decompose_sdnuq("UUDD")


def test_classify_f_case():
    assert classify_f_case("UDDUDU").case == 1
    assert classify_f_case("UDDUUDDU").case == 2
    assert classify_f_case("UDDDUUUD").case == 3
    c = classify_f_case("UDDDUDUUUD")
    assert c.case == 4
    assert (c.nbar, c.r) == ("DU", "DU")
    with pytest.raises(DomainError):
        classify_f_case("DUUD")  # starts with a down step


def test_apply_f_examples():
    assert apply_f("UDDUDU") == "UDUDDU"
    assert klass("UDDUDU") == (3, 2, 2, "U", "U")
    assert klass("UDUDDU") == (3, 1, 2, "U", "U")

    assert apply_f("UDDUUDDU") == "UUDDUDDU"
    assert stat_record("UUDDUDDU").m == 1

    assert apply_f("UDDDUDUUUD") == "UDDUUDDUUD"
    assert klass("UDDDUDUUUD") == (5, 3, 3, "U", "D")
    assert klass("UDDUUDDUUD") == (5, 2, 3, "U", "D")

    with pytest.raises(DomainError):
        apply_f("UUDD")  # m = 0


def test_classify_fprime_case():
    c = classify_fprime_case("UDUDDU")
    assert c.case == "C" and c.m_part == "UD" and c.q_rest == "DU"
    assert classify_fprime_case("UUDDUDDU").case == "A"
    c = classify_fprime_case("UDDUUDDUUD")
    assert c.case == "D"
    assert (c.n_mid, c.m_part, c.r, c.q_rest) == ("DU", "UD", "DU", "UD")
    c = classify_fprime_case("UDDUUD")
    assert c.case == "E" and (c.n_mid, c.m_part) == ("DU", "UD")
    with pytest.raises(DomainError):
        classify_fprime_case("UUDDUUDD")  # m = 0, below the range
    with pytest.raises(DomainError):
        classify_fprime_case("DUUDDUUD")  # starts with a down step


def test_apply_f_inverse():
    assert apply_f_inverse("UDUDDU") == "UDDUDU"
    assert apply_f_inverse("UDDUUDDUUD") == "UDDDUDUUUD"
    with pytest.raises(NotInImage):
        apply_f_inverse("UDDUUD")  # case E


def test_apply_g():
    assert apply_g("UDDUUD") == "DUUDDU"
    assert klass("UDDUUD") == (3, 1, 2, "U", "D")
    assert klass("DUUDDU") == (3, 2, 1, "D", "U")
    assert apply_g("UDDUUDUD") == "DUUDUDDU"
    with pytest.raises(DomainError):
        apply_g("UDUDDU")  # case C


def test_apply_g_inverse():
    assert apply_g_inverse("DUUDDU") == "UDDUUD"
    with pytest.raises(NotInHatDU):
        apply_g_inverse("DUDUDU")  # remainder after N is not Dyck
    with pytest.raises(NotInHatDU):
        apply_g_inverse("DDUUDU")  # M empty
    with pytest.raises(NotInHatDU):
        apply_g_inverse("UDUDUD")  # does not end with D,U


def test_cf_phi():
    assert apply_cf_phi("UDDUUDDUUD") == apply_f("UDDUUDDUUD")  # UD-class route
    assert apply_cf_phi("DUUDDU") == "UDDUUD"  # hat-DU route through g-inverse
    w = "DUDUUDDU"  # tilde-DU route through theta . f-inverse . theta
    q = apply_cf_phi(w)
    assert stat_record(q).m == stat_record(w).m - 1
    assert apply_cf_phi_inverse(q) == w
    with pytest.raises(DomainError):
        apply_cf_phi("UUDDDDUU")  # starts U ends U
    with pytest.raises(DomainError):
        apply_cf_phi("UUDD")  # m = 0 out of range


def test_tau():
    assert apply_tau("UDDUUD") == "UUDDUD"
    assert klass("UUDDUD") == (3, 0, 2, "U", "D")
    assert apply_tau_inverse("UUDDUD") == "UDDUUD"
    with pytest.raises(DomainError):
        apply_tau_inverse("UUUDDD")  # Q empty in the split
    with pytest.raises(DomainError):
        apply_tau("UUDDUD")  # m = 0
    with pytest.raises(DomainError):
        apply_tau("UDDUDU")  # ends with U
