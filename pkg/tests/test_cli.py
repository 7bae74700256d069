"""End-to-end command-line behavior, run in-process through main().

Covers the documented command examples, the exit-code contract (0 ok,
2 validation, 3 budget, 4 internal), byte determinism, atomic output, and
the fixture fallback for file resolutions.
"""

import json
import os

import pytest

from tatejoin import cyclic
from tatejoin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def factors_of(stdout):
    return [e["invariant_factors"] for e in json.loads(stdout)]


def test_homology_cyclic6(capsys):
    code, out, _ = run(capsys, "homology", "--group", "cyclic:6",
                       "--degrees", "1..4")
    assert code == 0
    assert factors_of(out) == [[6], [], [6], []]


def test_homology_trivial(capsys):
    code, out, _ = run(capsys, "homology", "--group", "trivial",
                       "--degrees", "1..3")
    assert code == 0
    assert factors_of(out) == [[], [], []]


def test_homology_s3_bar(capsys):
    code, out, _ = run(capsys, "homology", "--group", "sym:3",
                       "--resolution", "bar", "--depth", "4",
                       "--degrees", "1..3")
    assert code == 0
    assert factors_of(out) == [[2], [], [6]]


def test_homology_degree_list_and_schema(capsys):
    code, out, _ = run(capsys, "homology", "--group", "cyclic:2",
                       "--degrees", "0,2")
    assert code == 0
    docs = json.loads(out)
    assert [d["degree"] for d in docs] == [0, 2]
    for d in docs:
        assert set(d) == {"group", "degree", "invariant_factors",
                          "generators"}
    assert docs[0]["invariant_factors"] == [0]  # H_0 = Z


def test_tate_command(capsys):
    code, out, _ = run(capsys, "tate", "--group", "cyclic:4",
                       "--degrees", "-4..-1")
    assert code == 0
    docs = json.loads(out)
    assert [(d["degree"], d["invariant_factors"]) for d in docs] == \
        [(-4, [4]), (-3, []), (-2, [4]), (-1, [])]


def test_tate_rejects_nonnegative(capsys):
    code, _, err = run(capsys, "tate", "--group", "cyclic:4",
                       "--degrees", "0..1")
    assert code == 2
    assert "out of scope" in err


def test_product_table_cyclic2(capsys):
    code, out, _ = run(capsys, "product-table", "--group", "cyclic:2",
                       "--pairs", "1x1,1x3,3x3")
    assert code == 0
    doc = json.loads(out)
    assert all(e["agree"] for e in doc["entries"])
    assert all(e["join"] == [1] for e in doc["entries"])


def test_product_table_cyclic3_order(capsys):
    code, out, _ = run(capsys, "product-table", "--group", "cyclic:3",
                       "--pairs", "1x1")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["join"] == [1] and entry["agree"]


def test_product_table_q8_fixture_fallback(capsys):
    # bare file name resolves against the shipped fixtures directory
    code, out, _ = run(capsys, "product-table", "--group", "q8",
                       "--resolution", "file:q8_periodic.json",
                       "--pairs", "3x3")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["agree"] and any(entry["join"])


def test_product_table_csv(capsys):
    code, out, _ = run(capsys, "product-table", "--group", "cyclic:2",
                       "--pairs", "1x1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,m,a,b,join,composition,agree"


def test_csv_rejected_elsewhere(capsys):
    code, _, err = run(capsys, "homology", "--group", "cyclic:2",
                       "--degrees", "1..2", "--format", "csv")
    assert code == 2
    assert "product-table" in err


def test_verify_passes(capsys, tmp_path):
    out_path = str(tmp_path / "report.json")
    code, _, _ = run(capsys, "verify", "--group", "cyclic:4", "--depth", "7",
                     "--output", out_path)
    assert code == 0
    doc = json.loads(open(out_path).read())
    assert doc["passed"] is True
    assert doc["pass_count"] == doc["check_count"]


def test_verify_prints_named_lines(capsys):
    code, _, err = run(capsys, "verify", "--group", "cyclic:3",
                       "--depth", "5")
    assert code == 0
    assert "PASS group:associativity" in err
    assert "checks passed" in err


def test_verify_seed_changes_nothing_semantic(capsys, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert run(capsys, "verify", "--group", "cyclic:3", "--depth", "5",
               "--seed", "7", "--output", a)[0] == 0
    assert run(capsys, "verify", "--group", "cyclic:3", "--depth", "5",
               "--seed", "8", "--output", b)[0] == 0
    assert json.load(open(a))["passed"] and json.load(open(b))["passed"]


def test_doctored_resolution_file_exit_2(capsys, tmp_path):
    res_path = str(tmp_path / "c4.json")
    from tatejoin import periodic_cyclic_resolution
    periodic_cyclic_resolution(4, 4).save(res_path)
    doc = json.load(open(res_path))
    doc["differentials"][1][0][0][0] += 1
    bad = str(tmp_path / "doctored.json")
    json.dump(doc, open(bad, "w"))
    code, _, err = run(capsys, "homology", "--group", "cyclic:4",
                       "--resolution", f"file:{bad}", "--degrees", "1..2")
    assert code == 2
    assert "degree" in err


def test_resolution_file_group_mismatch(capsys, tmp_path):
    res_path = str(tmp_path / "c4.json")
    from tatejoin import periodic_cyclic_resolution
    periodic_cyclic_resolution(4, 4).save(res_path)
    code, _, err = run(capsys, "homology", "--group", "cyclic:5",
                       "--resolution", f"file:{res_path}",
                       "--degrees", "1..2")
    assert code == 2
    assert "different group" in err


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "homology", "--group", "sym:3",
                       "--resolution", "bar", "--depth", "6",
                       "--degrees", "1..5", "--max-zrank", "1000")
    assert code == 3
    assert "budget" in err


def test_env_budget_override(capsys, monkeypatch):
    monkeypatch.setenv("TATEJOIN_MAX_ZRANK", "600")
    code, _, err = run(capsys, "homology", "--group", "q8",
                       "--resolution", "bar", "--depth", "3",
                       "--degrees", "1..2")
    assert code == 3


def test_bad_degree_and_pair_tokens(capsys):
    assert run(capsys, "homology", "--group", "cyclic:2",
               "--degrees", "5..2")[0] == 2
    assert run(capsys, "homology", "--group", "cyclic:2",
               "--degrees", "two")[0] == 2
    assert run(capsys, "product-table", "--group", "cyclic:2",
               "--pairs", "1y1")[0] == 2
    assert run(capsys, "product-table", "--group", "cyclic:2",
               "--pairs", "0x1")[0] == 2


def test_depth_too_shallow_for_degrees(capsys):
    code, _, err = run(capsys, "homology", "--group", "cyclic:2",
                       "--degrees", "1..4", "--depth", "3")
    assert code == 2
    assert "depth" in err


def test_unknown_group_exit_2(capsys):
    code, _, err = run(capsys, "homology", "--group", "frieze:7",
                       "--degrees", "1..2")
    assert code == 2


def test_byte_determinism(capsys, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    for path in (a, b):
        code, _, _ = run(capsys, "product-table", "--group", "cyclic:4",
                         "--pairs", "1x1,1x3", "--output", path)
        assert code == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_output_is_atomic_no_partial_file(capsys, tmp_path):
    # a failing run must not leave the output file behind
    target = str(tmp_path / "out.json")
    code, _, _ = run(capsys, "homology", "--group", "sym:3",
                     "--resolution", "bar", "--depth", "6",
                     "--degrees", "1..5", "--max-zrank", "1000",
                     "--output", target)
    assert code == 3
    assert not os.path.exists(target)
    assert not os.path.exists(target + ".tmp")


def test_group_file_input(capsys, tmp_path):
    gpath = str(tmp_path / "c6.json")
    json.dump(cyclic(6).to_json(), open(gpath, "w"))
    code, out, _ = run(capsys, "homology", "--group", f"file:{gpath}",
                       "--degrees", "1..2")
    assert code == 0
    assert factors_of(out) == [[6], []]
