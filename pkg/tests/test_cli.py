import json

from app.cli import main
from app.services import family_gf, parse_bound
from app.services import permutation_statistics
from tests.conftest import P2, P3, P4, P5, P6
from tests.test_permutation_codes import P3_B_CODE


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


def test_code_of_a_window(capsys):
    code, out, _ = run(capsys, "code", "--r", "3", "--kind", "b", P3)
    assert code == 0
    assert out == P3_B_CODE


def test_code_as_json(capsys):
    code, out, _ = run(capsys, "code", "--r", "2", "--kind", "c", "--format", "json", P5)
    assert code == 0
    data = json.loads(out)
    assert data["code"] == "(1,-1,-3,4,-1)"
    assert data["entries"] == [1, -1, -3, 4, -1]


def test_map_accepts_windows_starting_with_a_minus(capsys):
    code, out, _ = run(capsys, "map", "--r", "2", "--bijection", "psi", P5)
    assert code == 0
    assert out == P6


def test_map_phi(capsys):
    code, out, _ = run(capsys, "map", "--r", "3", "1,2^1")
    assert code == 0
    assert out == "1,2^2"


def test_stat_reports_type_d_block(capsys):
    code, out, _ = run(capsys, "stat", "--r", "2", P4)
    assert code == 0
    assert "type_d.sor_d: 10" in out
    assert "type_d.ell_d: 11" in out


def test_enumerate_restricted_as_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--r", "1", "--n", "4", "--ferrers", "2,3,3,4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("window,ell,sor,refl_len")
    assert len(lines) == 5


def test_gf_matches_the_service(capsys):
    code, out, _ = run(capsys, "gf", "main-b", "--r", "3", "--n", "2", "--ferrers", "1,2")
    assert code == 0
    assert out == family_gf("main-b", 3, 2, parse_bound("1,2")).to_text()


def test_gf_enumerative_side_agrees(capsys):
    _, closed, _ = run(capsys, "gf", "length", "--r", "2", "--n", "3")
    _, counted, _ = run(capsys, "gf", "length", "--r", "2", "--n", "3", "--enumerative", "sor")
    assert closed == counted


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "main-a", "--r", "3", "--n", "2", "--all-ferrers")
    assert code == 0
    assert out.startswith("main-a r=3 n=2 f=all: pass")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "main-a", "--r", "3", "--n", "2", "--ferrers", "1,2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "theorem": "main-a",
        "params": {"r": 3, "n": 2, "f": [1, 2]},
        "status": "pass",
        "checked": 9,
    }


def test_verify_failure_exits_with_one(capsys, monkeypatch):
    monkeypatch.setattr(permutation_statistics, "length", lambda pi: 0)
    code, out, _ = run(capsys, "verify", "main-a", "--r", "2", "--n", "2")
    assert code == 1
    assert "fail" in out


def test_oracle_sor_total(capsys):
    code, out, _ = run(capsys, "oracle", "sor", "--r", "3", "--format", "json", P2)
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 21
    assert [step["distance"] for step in data["steps"]] == [10, 5, 1, 3, 2]


def test_oracle_sor_window_before_options(capsys):
    code, out, _ = run(capsys, "oracle", "sor", P2, "--r", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["total"] == 21


def test_oracle_sor_needs_a_window(capsys):
    code, _, _ = run(capsys, "oracle", "sor", "--r", "3")
    assert code == 2


def test_stat_of_empty_window(capsys):
    code, out, _ = run(capsys, "stat", "--r", "2", "")
    assert code == 0
    assert "type_d.cyc_plus: 0" in out
    assert "type_d.rmin_plus: 0" in out


def test_oracle_bfs_histogram(capsys):
    code, out, _ = run(capsys, "oracle", "bfs", "--r", "3", "--n", "2")
    assert code == 0
    assert out == "1 + 2*q + 3*q^2 + 4*q^3 + 4*q^4 + 3*q^5 + q^6"


def test_bad_window_exits_with_two(capsys):
    code, _, err = run(capsys, "stat", "--r", "2", "1,1")
    assert code == 2
    assert err.startswith("ERROR:")


def test_missing_n_exits_with_two(capsys):
    code, _, err = run(capsys, "gf", "length", "--r", "2")
    assert code == 2
    assert "--n is required" in err


def test_unknown_command_exits_with_two(capsys):
    assert main(["frobnicate"]) == 2
