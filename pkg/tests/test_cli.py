"""End-to-end checks of the command line front end.

Everything runs through ``effalg.cli.main`` in-process so exit codes and
output bytes are asserted directly.  The files under tests/goldens/ were
produced by the commands they name and then reviewed line by line; the
tests hold the tool to those exact bytes.
"""

import json
from pathlib import Path

import pytest

from effalg.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "effalg" / "fixtures"
GOLDENS = Path(__file__).resolve().parent / "goldens"

EX25 = str(FIXTURES / "example-2.5.eaf")
EX44 = str(FIXTURES / "example-4.4.eaf")
HSUM = str(FIXTURES / "hsum-c2-c3.eaf")
TRIV = str(FIXTURES / "trivial-01.state")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def golden(name):
    return (GOLDENS / name).read_text(encoding="ascii")


def test_verify_accepts_the_bundled_files(capsys):
    for path in (EX25, EX44, HSUM):
        code, out, err = run(capsys, "verify", path)
        assert code == 0
        assert out == "valid\n"
        assert err == ""


def test_verify_reports_axiom_violations(capsys, tmp_path):
    bad = tmp_path / "bad.eaf"
    bad.write_text(
        "ea v1\nelements 3\nnames 0 a 1\nzero 0\none 1\n",
        encoding="ascii",
    )
    code, out, err = run(capsys, "verify", str(bad))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "invalid"
    assert any(line.startswith("violation Eiii") for line in lines[1:])


def test_verify_json_lists_violations(capsys, tmp_path):
    bad = tmp_path / "bad.eaf"
    bad.write_text(
        "ea v1\nelements 3\nnames 0 a 1\nzero 0\none 1\n",
        encoding="ascii",
    )
    code, out, err = run(capsys, "verify", "--json", str(bad))
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False
    assert doc["violations"][0]["axiom"] == "Eiii"
    assert doc["violations"][0]["witnesses"] == ["a"]


def test_parse_errors_exit_two_even_under_verify(capsys, tmp_path):
    mangled = tmp_path / "mangled.eaf"
    mangled.write_text("ea v1\nelements two\n", encoding="ascii")
    code, out, err = run(capsys, "verify", str(mangled))
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")


def test_missing_file_exits_two(capsys):
    code, out, err = run(capsys, "analyze", "/nonexistent/x.eaf")
    assert code == 2
    assert err.startswith("error: ")


def test_analyze_golden_bytes(capsys):
    code, out, err = run(capsys, "analyze", EX25)
    assert code == 0
    assert out == golden("analyze-example-2.5.txt")
    code, out, err = run(capsys, "analyze", EX44)
    assert code == 0
    assert out == golden("analyze-example-4.4.txt")


def test_analyze_is_byte_stable(capsys):
    first = run(capsys, "analyze", EX44)
    second = run(capsys, "analyze", EX44)
    assert first == second


def test_analyze_json_mirrors_the_text_facts(capsys):
    code, out, err = run(capsys, "analyze", "--json", EX25)
    assert code == 0
    doc = json.loads(out)
    assert doc["elements"] == 6
    assert doc["lattice"] is False
    assert doc["non_lattice_witness"] == {"x": "a", "y": "b", "missing": "join"}
    assert doc["atoms"] == ["a", "b"]
    assert doc["sharp"] == ["0", "1"]
    assert doc["ord"] == {"0": 0, "a": 2, "b": 3, "ab": 1, "2a": 1, "1": 1}
    assert doc["sharply_dominating"] is True
    assert doc["s_dominating"] is True


def test_analyze_on_a_lattice_has_no_witness_line(capsys):
    code, out, err = run(capsys, "gen", "mv-chain", "3", "-o", "/tmp/c3.eaf")
    assert code == 0
    code, out, err = run(capsys, "analyze", "/tmp/c3.eaf")
    assert code == 0
    assert "non-lattice-witness" not in out
    assert "lattice yes\n" in out
    assert "mv yes\n" in out


def test_decompose_basic_output(capsys, tmp_path):
    c4 = tmp_path / "c4.eaf"
    run(capsys, "gen", "mv-chain", "4", "-o", str(c4))
    code, out, err = run(capsys, "decompose", str(c4), "2a")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "element 2a"
    assert lines[1] == "kind basic"
    assert lines[2] == "sharp 0"
    assert lines[3] == "part a 2"


def test_decompose_falls_back_to_atomic_parts(capsys):
    # example-2.5 is not lattice ordered, so only the atomic layer runs
    code, out, err = run(capsys, "decompose", EX25, "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "element 1"
    assert lines[1] == "kind atomic"
    assert lines[2] in ("unique yes", "unique no")
    assert any(line.startswith("part ") for line in lines)


def test_decompose_unknown_element_exits_two(capsys):
    code, out, err = run(capsys, "decompose", EX44, "zz")
    assert code == 2
    assert err.startswith("error: ")


def test_states_find_on_a_chain(capsys):
    run(capsys, "gen", "mv-chain", "4", "-o", "/tmp/c4.eaf")
    code, out, err = run(capsys, "states", "/tmp/c4.eaf")
    assert code == 0
    assert out.splitlines()[0] == "state v1"
    assert "value a 1/4" in out
    assert "value 3a 3/4" in out


def test_states_find_fails_on_the_stateless_table(capsys):
    code, out, err = run(capsys, "states", "--find", EX44)
    assert code == 1
    assert out.splitlines()[0] == "certificate"


def test_states_certify_none_golden(capsys):
    code, out, err = run(capsys, "states", "--certify-none", EX44)
    assert code == 0
    assert out == golden("states-certify-example-4.4.txt")


def test_states_certify_none_fails_when_states_exist(capsys):
    code, out, err = run(capsys, "states", "--certify-none", HSUM)
    assert code == 1
    assert out.splitlines()[0] == "state v1"


def test_states_json_values(capsys):
    code, out, err = run(capsys, "states", "--json", HSUM)
    assert code == 0
    doc = json.loads(out)
    assert doc["values"]["0"] == "0/1"
    assert doc["values"]["1"] == "1/1"


def test_states_json_certificate(capsys):
    code, out, err = run(capsys, "states", "--json", "--certify-none", EX44)
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["gap"] == "1/4"
    assert doc["certificate"]["upper"] == {"1": "3/4"}
    assert doc["certificate"]["lower"] == {}
    rows = doc["certificate"]["rows"]
    assert {"index": 0, "multiplier": "1/1", "label": "a + a = 2a"} in rows


def test_smear_golden_and_stability(capsys):
    code, out, err = run(capsys, "smear", HSUM, "--state", TRIV)
    assert code == 0
    assert out == golden("smear-hsum.txt")
    again = run(capsys, "smear", HSUM, "--state", TRIV)
    assert again == (code, out, err)


def test_smear_rejects_a_state_over_the_wrong_algebra(capsys, tmp_path):
    wrong = tmp_path / "wrong.state"
    wrong.write_text("state v1\nvalue q 1/2\n", encoding="ascii")
    code, out, err = run(capsys, "smear", HSUM, "--state", str(wrong))
    assert code == 2


def test_smear_reports_off_hypothesis_tables(capsys, tmp_path):
    st = tmp_path / "t.state"
    st.write_text("state v1\nvalue 0 0/1\nvalue 1 1/1\n", encoding="ascii")
    code, out, err = run(capsys, "smear", EX25, "--state", str(st))
    assert code == 1
    assert out.startswith("cannot smear: ")
    assert "lattice" in out


def test_gen_writes_canonical_bytes(capsys, tmp_path):
    target = tmp_path / "out.eaf"
    code, out, err = run(capsys, "gen", "fixture", "example-4.4", "-o", str(target))
    assert code == 0
    assert out == ""
    assert target.read_bytes() == Path(EX44).read_bytes()


def test_gen_stdout_equals_file_output(capsys, tmp_path):
    code, out, err = run(capsys, "gen", "boolean", "2")
    assert code == 0
    target = tmp_path / "b2.eaf"
    run(capsys, "gen", "boolean", "2", "-o", str(target))
    assert target.read_text(encoding="ascii") == out


def test_gen_hsum_and_product_consume_files(capsys, tmp_path):
    c2 = tmp_path / "c2.eaf"
    c3 = tmp_path / "c3.eaf"
    run(capsys, "gen", "mv-chain", "2", "-o", str(c2))
    run(capsys, "gen", "mv-chain", "3", "-o", str(c3))
    code, out, err = run(capsys, "gen", "hsum", str(c2), str(c3))
    assert code == 0
    assert out == Path(HSUM).read_text(encoding="ascii")
    code, out, err = run(capsys, "gen", "product", str(c2), str(c3))
    assert code == 0
    assert "elements 12" in out


def test_gen_rejects_unknown_fixture_names(capsys):
    code, out, err = run(capsys, "gen", "fixture", "example-9.9")
    assert code == 2
    assert "example-2.5" in err


def test_gen_rejects_oversize_requests(capsys):
    code, out, err = run(capsys, "gen", "boolean", "7")
    assert code == 2
    assert err.startswith("error: ")


def test_props_counterexample_golden(capsys):
    code, out, err = run(capsys, "props", "--counterexample-mode", EX25)
    assert code == 1
    assert out == golden("props-cx-example-2.5.txt")


def test_props_normal_mode_skips_off_lattice(capsys):
    code, out, err = run(capsys, "props", EX25)
    assert code == 0
    for line in out.splitlines():
        assert " skipped " in line or line.endswith(" skipped")


def test_props_selection_and_exit_zero(capsys):
    run(capsys, "gen", "mv-chain", "4", "-o", "/tmp/c4.eaf")
    code, out, err = run(capsys, "props", "--laws", "L2.2.i,T2.6", "/tmp/c4.eaf")
    assert code == 0
    assert out == "L2.2.i pass\nT2.6 pass\n"


def test_props_rejects_unknown_law_names(capsys):
    code, out, err = run(capsys, "props", "--laws", "L0.0", EX25)
    assert code == 2
    assert err.startswith("error: ")


def test_props_json_shape(capsys):
    code, out, err = run(capsys, "props", "--json", "--counterexample-mode", EX25)
    assert code == 1
    doc = json.loads(out)
    by_law = {entry["law"]: entry for entry in doc["results"]}
    assert by_law["T2.6"]["status"] == "fail"
    assert ["2a"] in by_law["T2.6"]["witnesses"]
    assert by_law["product-closure"]["status"] == "skipped"
    assert by_law["product-closure"]["reason"]


def test_usage_errors_exit_two(capsys):
    code, out, err = run(capsys, "states", "--find", "--certify-none", EX44)
    assert code == 2
    code, out, err = run(capsys, "gen", "mv-chain", "zero")
    assert code == 2


def test_non_ascii_input_is_a_clean_error(capsys, tmp_path):
    weird = tmp_path / "weird.eaf"
    weird.write_bytes("eaf 1\nelements 2\nnames 0 \xe9\n".encode("latin-1"))
    code, out, err = run(capsys, "analyze", str(weird))
    assert code == 2
    assert err.startswith("error: ")
