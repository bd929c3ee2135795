import json
import subprocess
import sys

import pytest

from sp3geom.algebra import SymMat3
from sp3geom.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from sp3geom.sp3 import Point13, exp_map

from conftest import Y0


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("point, orbit", [
    (exp_map(SymMat3.zero()), "Sigma"),
    (Point13.from_blocks(0, SymMat3.zero(), Y0, 1), "FMinusOmega"),
    (Point13.from_blocks(1, SymMat3.zero(), SymMat3.zero(), 1), "Generic"),
])
def test_classify(tmp_path, capsys, point, orbit):
    code, out = run(capsys, "classify", "--in", write(tmp_path, "p.json", point.to_json()))
    assert code == EXIT_OK
    assert json.loads(out)["orbit"] == orbit


def test_classify_malformed_input(tmp_path, capsys):
    code, _ = run(capsys, "classify", "--in", write(tmp_path, "p.json", {"u": "1"}))
    assert code == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["classify", "--in", str(bad)]) == EXIT_INPUT


def test_usage_errors_exit_3():
    with pytest.raises(SystemExit) as info:
        main(["section", "frobnicate"])
    assert info.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as info:
        main(["section", "verify", "--prec", "10"])
    assert info.value.code == EXIT_INPUT


def test_project(tmp_path, capsys):
    line = write(tmp_path, "l.json", {"axis": [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]})
    u = write(tmp_path, "u.json", exp_map(SymMat3.diag(1, 2, 3)).to_json())
    code, out = run(capsys, "project", "--line", line, "--point", u)
    assert code == EXIT_OK
    # (adj11 : adj12 : adj13 : det) = (6 : 0 : 0 : 6)
    assert json.loads(out) == {"image": ["1", "0", "0", "1"]}
    origin = write(tmp_path, "o.json", exp_map(SymMat3.zero()).to_json())
    code, out = run(capsys, "project", "--line", line, "--point", origin)
    assert code == EXIT_OK and json.loads(out) == {"error": "base_locus"}
    off = write(tmp_path, "off.json", Point13.from_blocks(1, SymMat3.zero(), SymMat3.zero(), 1).to_json())
    assert run(capsys, "project", "--line", line, "--point", off)[0] == EXIT_INPUT
    bad_line = write(tmp_path, "b.json", {"axis": [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]]})
    assert run(capsys, "project", "--line", bad_line, "--point", u)[0] == EXIT_INPUT


def test_section_new_and_dual_quartic(tmp_path, capsys):
    sec = tmp_path / "sec.json"
    assert main(["section", "new", "--seed", "1", "--out", str(sec)]) == EXIT_OK
    data = json.loads(sec.read_text())
    assert data["seed"] == 1 and len(data["covectors"]) == 3
    code, out = run(capsys, "section", "dual-quartic", "--in", str(sec))
    assert code == EXIT_OK
    dq = json.loads(out)
    assert dq["smooth"] and dq["form"]["deg"] == 4
    assert len(dq["form"]["coeffs"]) <= 15


def test_degenerate_section_exits_nonzero(tmp_path, capsys):
    ys = []
    for k in (7, 9, 12):
        v = [0] * 14
        v[k] = 1
        ys.append(Point13(tuple(v)).to_json())
    path = write(tmp_path, "y.json", {"covectors": ys, "seed": None})
    code, out = run(capsys, "section", "dual-quartic", "--in", path)
    assert code == EXIT_FAIL and json.loads(out)["degenerate"]


def test_section_verify_is_deterministic(tmp_path, capsys):
    sec = tmp_path / "sec.json"
    main(["section", "new", "--seed", "2", "--out", str(sec)])
    reports = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        code = main(["section", "verify", "--in", str(sec), "--checks", "pivots,fibration",
                     "--points", "8", "--out", str(out)])
        assert code == EXIT_OK
        reports.append(json.loads(out.read_text()))
    for r in reports:
        r.pop("wall_time")
    assert reports[0] == reports[1]
    names = [c["name"] for c in reports[0]["checks"]]
    assert "fibration" in names and "conic-transport" not in names
    assert reports[0]["seed"] == 2 and reports[0]["precision"] == 60


def test_section_verify_line(tmp_path, capsys):
    line = write(tmp_path, "l.json", {"axis": [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]})
    sec = tmp_path / "sec.json"
    assert main(["section", "new", "--seed", "3", "--line", line, "--out", str(sec)]) == EXIT_OK
    assert "line" in json.loads(sec.read_text())
    code, out = run(capsys, "section", "verify", "--in", str(sec), "--checks", "line-section", "--points", "6")
    assert code == EXIT_OK
    assert [c["name"] for c in json.loads(out)["checks"]] == ["smooth-quartic", "line-section"]
    plain = tmp_path / "plain.json"
    main(["section", "new", "--seed", "3", "--out", str(plain)])
    assert run(capsys, "section", "verify", "--in", str(plain), "--checks", "line-section")[0] == EXIT_INPUT
    assert run(capsys, "section", "verify", "--in", str(plain), "--checks", "bogus")[0] == EXIT_INPUT


def test_verify_lemmas(capsys):
    code, out = run(capsys, "verify-lemmas", "--suite", "core", "--trials", "0")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["passed"] and report["seed"] == 0
    code, out = run(capsys, "verify-lemmas", "--suite", "projection", "--seed", "7", "--trials", "10")
    assert code == EXIT_OK and json.loads(out)["passed"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sp3geom", "verify-lemmas", "--trials", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "verify-lemmas core"
