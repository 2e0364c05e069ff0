import json
import subprocess
import sys

import pytest

from injcolor.cli import main
from injcolor.formats import parse_edge_list


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


C4 = "p inj 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
K4 = "p inj 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
C3 = "p inj 3 3\ne 1 2\ne 2 3\ne 1 3\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mad_c4(tmp_path, capsys):
    code, out, _ = run(capsys, "mad", write(tmp_path, "c4", C4), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["mad"] == "2/1" and rep["mad_decimal"] == "2.000000"


def test_mad_text(tmp_path, capsys):
    code, out, _ = run(capsys, "mad", write(tmp_path, "c4", C4))
    assert code == 0 and "mad: 2/1" in out


def test_exact_k4(tmp_path, capsys):
    code, out, _ = run(capsys, "exact", write(tmp_path, "k4", K4), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["chi"] == 6 and rep["validation"] == "valid"


def test_color_ineligible(tmp_path, capsys):
    code, out, err = run(capsys, "color", write(tmp_path, "k4", K4))
    assert code == 2 and out == "" and "mad 3 >= 8/3" in err


def test_color_then_validate(tmp_path, capsys):
    src = write(tmp_path, "c4", C4)
    col = str(tmp_path / "c4.col")
    code, out, _ = run(capsys, "color", src, "--output", col, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["valid"] and rep["constructive_colors"] <= 7
    assert rep["min_final_charge"] == "2/1" and rep["deficiency_count"] == 4
    code, out, _ = run(capsys, "validate", src, col, "--json")
    assert code == 0 and json.loads(out)["valid"]


def test_validate_invalid(tmp_path, capsys):
    src = write(tmp_path, "c3", C3)
    col = write(tmp_path, "c3.col", "1 2 1\n2 3 1\n1 3 2\n")
    code, out, _ = run(capsys, "validate", src, col, "--json")
    rep = json.loads(out)
    assert code == 1 and not rep["valid"] and rep["conflicts"] == [[[1, 2], [2, 3]]]


def test_validate_palette(tmp_path, capsys):
    src = write(tmp_path, "c3", C3)
    col = write(tmp_path, "c3.col", "1 2 1\n2 3 2\n1 3 3\n")
    assert run(capsys, "validate", src, col)[0] == 0
    assert run(capsys, "validate", src, col, "--colors", "2")[0] == 1


def test_parse_error_exit(tmp_path, capsys):
    code, _, err = run(capsys, "mad", write(tmp_path, "bad", "p inj 3 1\ne 1 5\n"))
    assert code == 2 and "line 2" in err and "out of range" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "mad", str(tmp_path / "nope"))
    assert code == 2 and "cannot read" in err


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_eligible(tmp_path, capsys):
    code, out, _ = run(capsys, "eligible", write(tmp_path, "k4", K4), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["eligible"] is False and rep["mad"] == "3/1"


def test_audit(tmp_path, capsys):
    code, out, _ = run(capsys, "audit", write(tmp_path, "c4", C4), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["unexplained"] == [] and rep["conserved"]


def test_gen_and_roundtrip(tmp_path, capsys):
    out_path = str(tmp_path / "g.txt")
    assert run(capsys, "gen", "--random", "20", "5", "--output", out_path)[0] == 0
    g = parse_edge_list(open(out_path).read())
    assert g.order == 20
    code, out, _ = run(capsys, "gen", "--gadget", "DoubleThreeTwo")
    assert code == 0 and out.startswith("c gadget DoubleThreeTwo") and "c role v 1" in out
    code, out, _ = run(capsys, "gen", "--gadget", "DoubleThreeTwo", "--variant", "3_2")
    assert code == 2


def test_batch_deterministic(capsys):
    code, out, _ = run(capsys, "batch", "--count", "8", "--size", "20", "--seed", "3", "--json")
    first = json.loads(out)
    code2, out2, _ = run(capsys, "batch", "--count", "8", "--size", "20", "--seed", "3", "--json")
    second = json.loads(out2)
    first.pop("elapsed_ms")
    second.pop("elapsed_ms")
    assert code == code2 == 0 and first == second and first["failures"] == 0


def test_batch_parallel_matches(capsys):
    code, out, _ = run(capsys, "batch", "--count", "6", "--size", "15", "--jobs", "2", "--json")
    par = json.loads(out)
    code_s, out_s, _ = run(capsys, "batch", "--count", "6", "--size", "15", "--json")
    ser = json.loads(out_s)
    for r in (par, ser):
        r.pop("elapsed_ms")
    assert code == code_s == 0 and par == ser


def test_no_floats_in_json(tmp_path, capsys):
    src = write(tmp_path, "c4", C4)
    for cmd in ("mad", "eligible", "exact", "color", "audit"):
        _, out, _ = run(capsys, cmd, src, "--json")
        json.loads(out, parse_float=lambda s: pytest.fail(f"float {s} in {cmd} report"))


def test_verbose_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("INJCOLOR_VERBOSITY", "verbose")
    _, out, _ = run(capsys, "color", write(tmp_path, "c4", C4), "--json")
    assert "trace" in json.loads(out)
    monkeypatch.setenv("INJCOLOR_VERBOSITY", "terse")
    _, out, _ = run(capsys, "color", write(tmp_path, "c4", C4), "--json")
    assert "trace" not in json.loads(out)


def test_module_entry_point(tmp_path):
    src = write(tmp_path, "c4", C4)
    proc = subprocess.run([sys.executable, "-m", "injcolor", "mad", src], capture_output=True, text=True)
    assert proc.returncode == 0 and "mad: 2/1" in proc.stdout
