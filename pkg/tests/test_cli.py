import json

import pytest

from syzfermat.cli import main
from syzfermat.commands import cmd_check, cmd_delta
from syzfermat.fixtures import FIXTURES, run_fixtures
from syzfermat.report import RunReport, jsonable, recheck, witness_from_json


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def run_json(tmp_path, capsys, *argv):
    out = tmp_path / "out.json"
    code, _ = run(capsys, *argv, "--json", str(out), "--quiet")
    return code, json.loads(out.read_text()), out.read_text()


def test_delta_p7(tmp_path, capsys):
    code, doc, _ = run_json(tmp_path, capsys, "delta", "--d", "5", "--p", "7", "--powers", "14", "14", "14")
    assert code == 0
    assert set(doc) == {"command", "inputs", "results", "flags", "version"}
    res = doc["results"]
    assert res["degree"] == 20 and res["twist_degree"] == -10 and res["agreement"]
    assert res["witness"]["display"] == {"F": "-(X^6+2XY^5)", "G": "2X^5Y+Y^6", "H": "(X^5-Y^5)Z"}
    assert [1, 5, 0, 5] in res["witness"]["F"]


def test_delta_text_output(capsys):
    code, out = run(capsys, "delta", "--d", "5", "--p", "3", "--powers", "6", "6", "6")
    assert code == 0
    assert "delta = 8" in out.out and "twist degree = -10" in out.out
    assert "F = -YZ, G = -XZ, H = XY" in out.out


def test_delta_cubic(tmp_path, capsys):
    _, doc, _ = run_json(tmp_path, capsys, "delta", "--d", "3", "--p", "5", "--powers", "2", "2", "2")
    assert doc["results"]["degree"] == 3 and doc["results"]["twist_degree"] == 0


def test_exit_codes(capsys):
    assert run(capsys, "delta", "--d", "5", "--p", "5", "--powers", "2", "2", "2")[0] == 3
    assert run(capsys, "delta", "--d", "5", "--p", "9", "--powers", "2", "2", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["delta", "--d", "5", "--p", "7", "--powers", "2", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["delta", "--d", "0", "--p", "7", "--powers", "2", "2", "2"])
    assert exc.value.code == 2
    assert run(capsys, "check", "--d", "6", "--p", "3")[0] == 3


def test_bound_capped_flag(tmp_path, capsys):
    _, doc, _ = run_json(tmp_path, capsys, "delta", "--d", "5", "--p", "7", "--powers", "14", "14", "14", "--bound", "2")
    assert any(f["marker"] == "bound-capped" for f in doc["flags"])


def test_check_commands(tmp_path, capsys):
    _, doc, _ = run_json(tmp_path, capsys, "check", "--d", "5", "--p", "7")
    assert doc["results"]["first_e"] == 1
    _, doc, _ = run_json(tmp_path, capsys, "check", "--d", "5", "--p", "3")
    assert doc["results"]["direct_e"] == 1 and doc["results"]["criterion_e"] == 3
    _, doc, _ = run_json(tmp_path, capsys, "check", "--d", "5", "--p", "11", "--emax", "2")
    assert doc["results"]["status"] == "undetermined"
    assert doc["results"]["remainder_one"][0]["det"] == 6
    _, doc, _ = run_json(tmp_path, capsys, "check", "--d", "5", "--p", "7", "--cost-ceiling", "4")
    assert any(f["marker"] == "criterion-only" for f in doc["flags"])


def test_density_commands(tmp_path, capsys):
    _, doc, _ = run_json(tmp_path, capsys, "density", "--d", "31")
    res = doc["results"]
    assert res["covered_count"] == 20 and res["density_lower_bound"]["exact"] == "2/3"
    assert any(f["marker"] == "paper-discrepancy" for f in doc["flags"])
    _, doc, _ = run_json(tmp_path, capsys, "density", "--d", "167")
    assert doc["results"]["density_lower_bound"]["exact"] == "82/83"
    assert doc["results"]["published_bound"]["exact"] == "165/167"
    _, doc, _ = run_json(tmp_path, capsys, "exceptional", "--limit", "12")
    assert doc["results"]["exceptional"] == [6, 10]
    _, doc, _ = run_json(tmp_path, capsys, "sophie", "--limit", "30")
    assert doc["results"]["h"] == [2, 3, 5, 11, 23, 29]
    _, doc, _ = run_json(tmp_path, capsys, "scan", "--d", "5", "--p-max", "100000")
    assert abs(float(doc["results"]["empirical_fraction"]) - 0.5) < 0.02


def test_verify_paper(tmp_path, capsys):
    code, doc, _ = run_json(tmp_path, capsys, "verify-paper")
    assert code == 0
    assert doc["results"]["passed"] == doc["results"]["total"] == len(FIXTURES)
    code, doc, _ = run_json(tmp_path, capsys, "verify-paper", "--only", "p7-quintic")
    assert code == 0 and [f["name"] for f in doc["results"]["fixtures"]] == ["p7-quintic"]
    code, out = run(capsys, "verify-paper", "--list")
    assert code == 0 and "p11-quintic" in out.out


def test_fixture_failure_exit_code(monkeypatch, capsys):
    import syzfermat.fixtures as fx

    monkeypatch.setitem(fx.FIXTURES, "broken", lambda c: c.expect(False, "deliberate"))
    assert run(capsys, "verify-paper", "--only", "broken")[0] == 1


def test_every_fixture_passes():
    assert all(r.ok for r in run_fixtures()), [r.failures for r in run_fixtures() if not r.ok]


def test_deterministic_json(tmp_path, capsys):
    args = ("check", "--d", "5", "--p", "3", "--emax", "3")
    texts = [run_json(tmp_path, capsys, *args)[2] for _ in range(2)]
    assert texts[0] == texts[1]
    texts = [run_json(tmp_path, capsys, "density", "--d", "59")[2] for _ in range(2)]
    assert texts[0] == texts[1]


def test_round_trip():
    rep = cmd_check(5, 3, 3)
    doc = rep.to_dict()
    again = RunReport.from_json(rep.to_json())
    assert again.to_dict() == doc
    assert again.to_json() == rep.to_json()


def test_big_ints_become_strings():
    assert jsonable({"q": 1 << 60, "r": 5}) == {"q": str(1 << 60), "r": 5}
    rep = cmd_check(5, 1000003, 3)
    doc = json.loads(rep.to_json())
    assert doc["results"]["levels"][3]["q"] == str(1000003**3)


def test_recheck_flag(capsys):
    code, out = run(capsys, "check", "--d", "5", "--p", "3", "--recheck")
    assert code == 0 and "recheck: 3/3 witnesses verified" in out.out
    rep = cmd_delta(5, 7, (14, 14, 14))
    doc = rep.to_dict()
    assert recheck(doc["results"]) == (1, 1)
    doc["results"]["witness"]["F"][0][3] += 1
    assert recheck(doc["results"]) == (1, 0)
    w, d, p = witness_from_json(rep.to_dict()["results"]["witness"])
    assert (w.m, d, p) == (20, 5, 7)
