import json

import pytest

from dyckpeaks.cli import main

FIG2 = "UUDUUDDDDDUUDUUUDUDD"
FIG2_IMAGE = "DDUDUUDUUDUUDDDDUDUU"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_map_gamma_golden(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "gamma", FIG2)
    assert code == 0
    assert out == FIG2_IMAGE + "\n"


def test_map_domain_error_exit_3(capsys):
    code, _, err = run(capsys, "map", "--bijection", "f-inv", "UDDUUD")
    assert code == 3
    assert "NotInImage" in err


def test_map_roundtrip_through_inverse(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "f", "UDDUDU")
    word = out.strip()
    code2, out2, _ = run(capsys, "map", "--bijection", "f-inv", word)
    assert (code, code2) == (0, 0)
    assert out2.strip() == "UDDUDU"


def test_usage_error_exit_2(capsys):
    assert run(capsys, "map", "--bijection", "nope", "UD")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "map", "--bijection", "gamma")[0] == 2  # no word


def test_bad_word_exit_3(capsys):
    code, _, err = run(capsys, "stats", "UDX")
    assert code == 3
    assert "IllegalCharacter" in err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "UDDU")
    assert code == 0
    doc = json.loads(out)
    assert doc["m"] == 1 and doc["peaks"] == 1 and doc["first"] == "U"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0
    assert out.split() == ["UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU"]
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--m", "1", "--format", "json")
    assert json.loads(out) == ["UDDU", "DUUD"]
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--limit", "2")
    assert out.split() == ["UUUDDD", "UUDUDD"]


def test_census_stdout_and_file(tmp_path, capsys):
    code, out, _ = run(capsys, "census", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,m,k,first,last,count"
    target = tmp_path / "census.json"
    code, _, _ = run(capsys, "census", "--n", "2", "--out", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["n"] == 2 and len(doc["cells"]) == 6


def test_census_byte_identical(capsys):
    a = run(capsys, "census", "--n", "3")[1]
    b = run(capsys, "census", "--n", "3")[1]
    assert a == b


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "--id", "catalan", "--params", "3")
    assert (code, out.strip()) == (0, "5")
    code, out, _ = run(capsys, "formula", "--id", "eq3-sum", "--params", "4,2")
    assert (code, out.strip()) == (0, "16")
    code, _, err = run(capsys, "formula", "--id", "eq3-sum", "--params", "2,1")
    assert code == 3 and "DomainError" in err


def test_verify_pass_and_fail_codes(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "chung-feller", "--n-max", "5")
    assert code == 0
    assert out.startswith("PASS")
    code, out, _ = run(
        capsys, "verify", "--identity", "eq2-symmetry", "--n-max", "4", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"
    assert run(capsys, "verify", "--n-max", "3")[0] == 2  # nothing selected


def test_verify_bijection_all_small(capsys):
    code, out, _ = run(capsys, "verify", "--bijection", "all", "--n-max", "4")
    assert code == 0
    assert out.count("PASS") == 11


def test_render_ascii(capsys):
    code, out, _ = run(capsys, "render", "UUDD")
    assert code == 0
    assert "o" in out and "|" in out and "_" in out


def test_render_svg(tmp_path, capsys):
    target = tmp_path / "path.svg"
    code, _, _ = run(capsys, "render", FIG2, "--format", "svg", "--out", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("<svg")
    assert text.count("<circle") == 5  # one dot per peak


def test_word_from_file(tmp_path, capsys):
    f = tmp_path / "word.txt"
    f.write_text(FIG2 + "\n")
    code, out, _ = run(capsys, "map", "--bijection", "gamma", "--in", str(f))
    assert (code, out.strip()) == (0, FIG2_IMAGE)
