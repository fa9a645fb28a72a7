"""Command-line surface: formats, exit codes, determinism."""

import json

import pytest

from regmaps.cli import ATLAS_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--q", "8", "--t", "2")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 4
    assert records[0]["q"] == 8
    assert list(records[0]) == ["q", "t", "poly", "variant", "ell", "a", "b",
                                "c", "e", "f", "m", "n", "genus", "vertices",
                                "edges", "faces", "chiral", "self_dual",
                                "balanced_cayley", "wilson_orbit"]


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--q", "5", "--t", "3",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(ATLAS_COLUMNS)
    assert len(lines) == 3


def test_classify_empty_cases(capsys):
    code, out, _ = run(capsys, "classify", "--q", "6", "--t", "1")
    assert code == 0 and json.loads(out) == []
    code, out, _ = run(capsys, "classify", "--q", "5", "--t", "2")
    assert code == 0 and json.loads(out) == []


def test_classify_deterministic(capsys):
    _, out1, _ = run(capsys, "classify", "--q", "9", "--t", "3")
    _, out2, _ = run(capsys, "classify", "--q", "9", "--t", "3")
    assert out1 == out2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--q", "9", "--t", "3")
    assert code == 0
    assert "all checks passed" in out


def test_verify_quaternion_subcase(capsys):
    code, out, _ = run(capsys, "verify", "--q", "4", "--t", "4")
    assert code == 0
    assert "quaternion" in out


def test_verify_non_prime_power(capsys):
    code, out, _ = run(capsys, "verify", "--q", "10", "--t", "1")
    assert code == 0
    assert "not a prime power" in out


def test_census_check(capsys):
    code, out, _ = run(capsys, "census", "--r", "2", "--t", "6", "--check")
    assert code == 0
    assert "2 class(es)" in out and "matches classification" in out


def test_census_infeasible_exit_code(capsys):
    code, _, err = run(capsys, "census", "--r", "6", "--t", "2")
    assert code == 3
    assert "feasibility" in err


def test_census_node_limit_exit_code(capsys):
    code, _, err = run(capsys, "census", "--r", "3", "--t", "3",
                       "--node-limit", "50")
    assert code == 3
    assert "node limit" in err


def test_census_dump_parses(capsys):
    from regmaps.oracle import RotationSystem
    code, out, _ = run(capsys, "census", "--r", "3", "--t", "1", "--dump")
    assert code == 0
    block = out[out.index("3 1 6"):]
    assert RotationSystem.from_text(block).r == 3


def test_wilson(capsys):
    code, out, _ = run(capsys, "wilson", "--q", "4", "--t", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["orbit_count"] == 3
    assert sorted(len(o) for o in payload["orbits"]) == [1, 1, 2]


def test_polys(capsys):
    code, out, _ = run(capsys, "polys", "--p", "2", "--k", "4")
    assert code == 0
    assert "2 primitive polynomial(s)" in out
    code, out, _ = run(capsys, "polys", "--p", "2", "--k", "3",
                       "--format", "json")
    assert json.loads(out)[0]["coeffs"] == [1, 1, 0]


def test_polys_rejects_nonprime(capsys):
    code, _, err = run(capsys, "polys", "--p", "4", "--k", "1")
    assert code == 2


def test_order_command(tmp_path, capsys):
    from regmaps.construct import build_relators, param_sets
    from regmaps.cosetenum import Presentation
    pres = Presentation.of(build_relators(param_sets(7, 3)[0]))
    f = tmp_path / "presentation.txt"
    f.write_text(pres.to_text())
    code, out, _ = run(capsys, "order", str(f))
    assert code == 0
    assert "order 126" in out


def test_order_inconclusive_exit(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("x^2\ny^300\nx y x y\n")
    code, out, _ = run(capsys, "order", str(f), "--limit", "40")
    assert code == 3


def test_atlas_writes_files(tmp_path, capsys):
    code, out, _ = run(capsys, "atlas", "--out", str(tmp_path),
                       "--q-list", "5", "--t-list", "1,3", "--name", "mini")
    assert code == 0
    csv = (tmp_path / "mini.csv").read_text()
    md = (tmp_path / "mini.md").read_text()
    lines = csv.strip().splitlines()
    assert lines[0] == ",".join(ATLAS_COLUMNS)
    assert len(lines) == 5  # header + 2 maps x 2 multiplicities
    assert md.count("|") > 10
    # determinism: regenerate byte-identically
    run(capsys, "atlas", "--out", str(tmp_path), "--q-list", "5",
        "--t-list", "1,3", "--name", "mini2")
    assert (tmp_path / "mini2.csv").read_text() == csv


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--q", "8"])  # missing --t
    assert exc.value.code == 2
