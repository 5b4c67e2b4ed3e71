import json
import subprocess
import sys

import pytest

from hodgelocus import FieldSpec, variables
from hodgelocus.cli import run
from hodgelocus.cycles import ci_class_rep, make_ci_hypersurface
from hodgelocus.formats import format_polys
from hodgelocus.report import strip_timings


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_json(argv, capsys):
    code, _ = run(argv)
    return code, json.loads(capsys.readouterr().out)


def checks(report):
    return {c["name"]: c["status"] for c in report["checks"]}


@pytest.fixture
def fermat4(tmp_path):
    return write(tmp_path, "fermat4.txt", "x0^4\nx1^4\nx2^4\nx3^4\n")


def test_macaulay_fermat(fermat4, capsys):
    code, rep = run_json(["macaulay", "--ideal", fermat4], capsys)
    assert code == 0 and rep["status"] == "pass"
    assert rep["results"]["N"] == 12
    assert set(checks(rep).values()) == {"pass"}


def test_dims_surface(tmp_path, capsys):
    f = write(tmp_path, "q.txt", "x0^5 + x1^5 + x2^5 + x3^5\n")
    code, rep = run_json(["dims", "--surface", f], capsys)
    assert code == 0
    dims = rep["results"]["dims"]
    assert (dims[6], dims[12], dims[13]) == (44, 1, 0)


def test_dims_ideal_needs_up_to(tmp_path, capsys):
    f = write(tmp_path, "i.txt", "x0\nx1\n")
    assert run_json(["dims", "--ideal", f], capsys)[0] == 2
    code, rep = run_json(["dims", "--ideal", f, "--up-to", "3"], capsys)
    assert code == 0 and rep["results"]["dims"] == [1, 2, 3, 4]


def test_smooth_and_jacobian(tmp_path, capsys):
    good = write(tmp_path, "g.txt", "x0^3 + x1^3 + x2^3 + x3^3\n")
    bad = write(tmp_path, "b.txt", "x0^3 + x1^3 + x2^3\n")
    assert run_json(["smooth", "--surface", good], capsys)[0] == 0
    code, rep = run_json(["smooth", "--surface", bad], capsys)
    assert code == 1 and checks(rep) == {"smooth": "fail"}
    code, rep = run_json(["jacobian", "--surface", good], capsys)
    assert code == 0 and rep["results"]["sigma"] == 4
    code, rep = run_json(["jacobian", "--surface", bad], capsys)
    assert code == 2 and rep["error"]["type"] == "SingularHypersurfaceError"


def test_tangent_line_instance(tmp_path, capsys):
    x = variables(1, FieldSpec.prime())
    ci = make_ci_hypersurface([x[0], x[1]], d=5, seed=0)
    surface = write(tmp_path, "quintic.txt", format_polys([ci.F]))
    rep_file = write(tmp_path, "rep.txt", format_polys([ci_class_rep(ci).P]))
    code, rep = run_json(["tangent", "--surface", surface, "--class", rep_file,
                          "--expect-codim", "2"], capsys)
    assert code == 0
    assert rep["results"]["codim"] == 2
    code, rep = run_json(["tangent", "--surface", surface, "--class", rep_file,
                          "--expect-codim", "3"], capsys)
    assert code == 1 and checks(rep)["expected_codim"] == "fail"


def test_class_rep_round_trip(tmp_path, capsys):
    cycle = write(tmp_path, "line.txt", "x0\nx1\n")
    out = tmp_path / "rep.txt"
    code, rep = run_json(["class-rep", "--cycle", cycle, "--d", "5", "--seed", "4",
                          "--rep-out", str(out)], capsys)
    assert code == 0 and out.exists()
    inst = write(tmp_path, "inst.txt", "[P]\n{}\n[Q]\n{}\n".format(
        "\n".join(rep["results"]["P"]), "\n".join(rep["results"]["Q"])))
    code, rep2 = run_json(["ci-verify", "--instance", inst, "--expect-codim", "2"], capsys)
    assert code == 0
    assert rep2["results"]["representative"] == rep["results"]["representative"]


def test_ci_verify_cycle(tmp_path, capsys):
    cycle = write(tmp_path, "line.txt", "x0\nx1\n")
    code, rep = run_json(["ci-verify", "--cycle", cycle, "--d", "5"], capsys)
    assert code == 0 and rep["results"]["codim"] == 2
    assert run_json(["ci-verify", "--cycle", cycle], capsys)[0] == 2


def test_link_twisted_cubic(capsys):
    code, rep = run_json(["link", "--twisted-cubic", "--d", "5"], capsys)
    assert code == 0 and rep["results"]["codim"] == 4
    assert rep["results"]["curve_ideal_codim_d_minus_4"] == 4


def test_link_instance_file(tmp_path, capsys):
    text = ("[P]\nx0\nx1*x2\n[CURVE]\nx0\nx1\n[LINK]\nx0\nx2\n"
            "[Q]\nx0^4 + x1^4 + x2^4 + x3^4\nx1^3 + x2^3 + 3*x3^3 + x0*x3^2\n")
    code, rep = run_json(["link", "--instance", write(tmp_path, "l.txt", text),
                          "--expect-codim", "2"], capsys)
    assert code == 0 and rep["results"]["codim"] == 2


def test_lines_experiment(capsys):
    code, rep = run_json(["lines-experiment", "--d", "5"], capsys)
    assert code == 0
    assert rep["results"]["skew"]["codims"] == [4, 4, 4]
    assert all(c < 4 for c in rep["results"]["meeting"]["codims"])


def test_divisor_bound(tmp_path, capsys):
    data = write(tmp_path, "line.json", json.dumps({"components": [{"a": 1, "e": 1, "rho": 0}]}))
    code, rep = run_json(["divisor-bound", "--data", data, "--d", "5"], capsys)
    assert code == 0 and rep["results"]["values"] == [-3]
    code, rep = run_json(["divisor-bound", "--data", data, "--d", "4"], capsys)
    assert code == 2 and "degree bound" in rep["error"]["message"]
    broken = write(tmp_path, "broken.json", "{\n  \"components\": [\n")
    code, rep = run_json(["divisor-bound", "--data", broken], capsys)
    assert code == 2 and rep["error"]["line"] == 3


def test_table(capsys):
    code, rep = run_json(["table"], capsys)
    assert code == 0
    assert rep["results"]["hilbert_scheme_dims"] == [4, 8, 12]
    assert rep["results"]["expected_codims"][0] == {"d": 5, "line": 2, "conic": 3,
                                                    "twisted_cubic": 4}


def test_parse_error_location(tmp_path, capsys):
    f = write(tmp_path, "bad.txt", "x0^4\nx1^4 +\n")
    code, _ = run(["macaulay", "--ideal", f])
    captured = capsys.readouterr()
    rep = json.loads(captured.out)
    assert code == 2
    assert rep["error"]["type"] == "ParseError" and rep["error"]["line"] == 2
    assert "ParseError" in captured.err


def test_non_regular_is_usage_error(tmp_path, capsys):
    f = write(tmp_path, "nr.txt", "x0^2\nx1^2\nx2^2\nx0*x1\n")
    code, rep = run_json(["macaulay", "--ideal", f], capsys)
    assert code == 2 and rep["error"]["degree"] == 5


def test_missing_file_and_bad_flags(capsys):
    assert run(["smooth", "--surface", "/nonexistent/file"])[0] == 2
    capsys.readouterr()
    assert run(["smooth"])[0] == 2
    assert run(["nosuchcommand"])[0] == 2
    assert run(["table", "--field", "prime:12"])[0] == 2


def test_out_flag_and_determinism(tmp_path, capsys):
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        assert run(["lines-experiment", "--d", "5", "--seed", "3", "--out", str(out)])[0] == 0
        outs.append(out.read_text())
    assert capsys.readouterr().out == ""
    assert strip_timings(outs[0]) == strip_timings(outs[1])
    assert json.loads(outs[0])["seed"] == 3


@pytest.mark.parametrize("argv, code", [
    (["table", "--d-max", "6"], 0),
    (["table", "--d-min", "4"], 2),
])
def test_subprocess_exit_codes(argv, code):
    proc = subprocess.run([sys.executable, "-m", "hodgelocus", *argv], capture_output=True,
                          text=True)
    assert proc.returncode == code
    assert json.loads(proc.stdout)["command"] == "table"


def test_subprocess_verification_failure(tmp_path):
    bad = write(tmp_path, "b.txt", "x0^3 + x1^3 + x2^3\n")
    proc = subprocess.run([sys.executable, "-m", "hodgelocus", "smooth", "--surface", bad],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["status"] == "fail"
