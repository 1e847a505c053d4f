import io
import json
import subprocess
import sys

import pytest

from qlc.cli import run
from qlc.qpoly import QPoly
from qlc.triangles import Triangle, build, builtin


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_triangle_csv():
    code, out, _ = call("triangle", "--family", "catalan-aigner", "--rows", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["1", "1,1", "2,3,1", "5,9,5,1"]


def test_triangle_csv_renders_polynomials():
    code, out, _ = call("triangle", "--family", "eulerian-poly", "--rows", "4", "--format", "csv")
    assert out.splitlines()[-1] == "q^2+4*q+1,q^2+10*q+7,3*q+6,1"


def test_triangle_json_round_trip():
    code, out, _ = call("triangle", "--family", "bell-poly", "--rows", "7", "--format", "json")
    assert code == 0
    assert Triangle.from_json(json.loads(out)).rows == build(builtin("bell-poly"), 7).rows


def test_triangle_column_and_eval():
    code, out, _ = call("triangle", "--family", "bell-poly", "--rows", "6", "--column", "0",
                        "--eval-q", "1", "--format", "json")
    assert json.loads(out) == ["1", "1", "2", "5", "15", "52"]
    code, out, _ = call("triangle", "--family", "narayana-poly", "--rows", "3", "--eval-q", "1/2")
    assert out.splitlines()[-1].split() == ["3/4", "2", "1"]


def test_triangle_from_spec_file(tmp_path):
    spec = write(tmp_path, "spec.json", {"name": "pascal", "f": "1", "g": "1", "h": "0"})
    code, out, _ = call("triangle", "--spec", spec, "--rows", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[-1] == "1,4,6,4,1"


def test_triangle_is_deterministic():
    runs = {call("triangle", "--family", "eulerian-poly", "--rows", "9", "--format", "json")[1]
            for _ in range(3)}
    assert len(runs) == 1


def test_check_narayana_row(tmp_path):
    row = [p.to_json() for p in build(builtin("narayana-poly"), 4)[3]]
    path = write(tmp_path, "row.json", row)
    code, out, err = call("check", "strong-q-log-concave", "--input", path)
    assert code == 0 and err == ""
    assert json.loads(out)["verdict"] is True


def test_check_failure_writes_witness_to_stderr(tmp_path):
    path = write(tmp_path, "bad.json", [["1"], ["0", "1"], ["1"]])
    code, out, err = call("check", "strong-q-log-concave", "--input", path)
    assert code == 1
    witness = json.loads(err)["witness"]
    assert (witness["i"], witness["j"], witness["degree"]) == (1, 1, 0)


def test_check_numeric(tmp_path):
    path = write(tmp_path, "nums.json", ["1", "1", "2", "5", "14"])
    assert call("check", "log-convex", "--input", path)[0] == 0
    assert call("check", "log-concave", "--input", path)[0] == 1
    assert call("check", "tp2-window", "--input", write(tmp_path, "w.json", ["1", "2", "1"]))[0] == 0


def test_check_eval_q(tmp_path):
    path = write(tmp_path, "row.json", [["0", "1", "1"], ["1", "2"], ["1"]])
    assert call("check", "log-concave", "--input", path, "--eval-q", "1")[0] == 0
    # non-constant input without --eval-q is a usage error
    assert call("check", "log-concave", "--input", path)[0] == 2
    assert call("check", "q-log-concave", "--input", path, "--eval-q", "1")[0] == 2


def test_check_internal_zeros(tmp_path):
    assert call("check", "internal-zeros", "--input", write(tmp_path, "a.json", ["0", "1", "2"]))[0] == 0
    code, _, err = call("check", "internal-zeros", "--input", write(tmp_path, "b.json", ["1", "0", "2"]))
    assert code == 1 and json.loads(err)["index"] == 1


def test_check_internal_zero_input_is_an_error(tmp_path):
    code, _, err = call("check", "log-concave", "--input", write(tmp_path, "z.json", ["1", "0", "1"]))
    assert code == 2 and "internal zero" in err.lower()


def test_transform_binomial(tmp_path):
    path = write(tmp_path, "x.json", ["1", "1", "1", "1"])
    code, out, _ = call("transform", "binomial", "--a", "0", "--b", "0", "--input", path, "--upto", "3")
    assert code == 0
    assert [QPoly.from_json(p) for p in json.loads(out)] == [1, 2, 4, 8]
    assert call("transform", "binomial", "--a", "0", "--input", path, "--upto", "3")[0] == 2
    assert call("transform", "binomial", "--a", "0", "--b", "0", "--input", path, "--upto", "9")[0] == 2


def test_transform_window_and_multinomial(tmp_path):
    w = write(tmp_path, "w.json", ["1", "2", "1"])
    x = write(tmp_path, "x.json", ["1", "3", "4", "3", "1"])
    code, out, _ = call("transform", "window", "--weights", w, "--input", x, "--upto", "2")
    assert [QPoly.from_json(p) for p in json.loads(out)] == [11, 14, 11]
    ones = write(tmp_path, "ones.json", ["1"] * 9)
    w3 = write(tmp_path, "w3.json", ["1", "1", "1"])
    code, out, _ = call("transform", "multinomial", "--weights", w3, "--input", ones, "--upto", "4")
    assert json.loads(out) == ["1", "3", "9", "27", "81"]


def test_transform_rejects_bad_window(tmp_path):
    w = write(tmp_path, "w.json", ["1", "1", "3"])
    x = write(tmp_path, "x.json", ["1"] * 6)
    code, _, err = call("transform", "window", "--weights", w, "--input", x, "--upto", "1")
    assert code == 2 and "log-concave" in err


def test_verify_thm41():
    code, out, err = call("verify", "thm41", "--family", "bell-poly", "--max-n", "8")
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["overall"] is True and report["max_n"] == 8
    code, out, err = call("verify", "thm41", "--family", "eulerian-poly", "--max-n", "8")
    assert code == 1
    assert json.loads(err)["fh-cross"] == {"verdict": False, "n": 1, "k": 1, "l": 1, "degree": 1}


def test_verify_proposition_and_conclusion():
    assert call("verify", "proposition", "--family", "narayana-poly")[0] == 0
    assert call("verify", "proposition", "--family", "bell-poly")[0] == 2
    assert call("verify", "conclusion", "--family", "eulerian-poly", "--max-n", "8")[0] == 0


def test_identities_command():
    code, out, err = call("identities", "--max-a", "30")
    assert code == 1
    assert json.loads(err)[0]["counterexample"] == {"a": 2, "b": 1, "lhs": "1", "rhs": "2"}
    code, out, _ = call("identities", "--max-a", "30", "--corrected")
    assert code == 0 and json.loads(out)["overall"] is True


@pytest.mark.parametrize("argv", [
    ["triangle", "--rows", "3"],
    ["triangle", "--family", "motzkin", "--spec", "x.json", "--rows", "3"],
    ["triangle", "--family", "nope", "--rows", "3"],
    ["triangle", "--family", "motzkin", "--rows", "0"],
    ["check", "log-concave", "--input", "/nonexistent/file.json"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2 and err


def test_bad_spec_expression_is_reported(tmp_path):
    spec = write(tmp_path, "s.json", {"f": "1", "g": "2q", "h": "1"})
    code, _, err = call("triangle", "--spec", spec, "--rows", "3")
    assert code == 2 and "byte 1" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qlc", "triangle", "--family", "motzkin",
                           "--rows", "3", "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["1", "1,1", "2,2,1"]
