import json
import subprocess
import sys

import pytest

from bioctonion import jordan, veronese
from bioctonion.cli import main
from bioctonion.randgen import Stream
from bioctonion.tensor import algebra


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_identities_pass(capsys):
    code, out = run_cli(capsys, "identities", "--samples", "10")
    assert code == 0
    assert "status: **pass**" in out
    assert "O:moufang_1" in out and "CsxOs:composition" in out
    assert "O:associativity" in out


def test_norms_dichotomy(capsys):
    code, out = run_cli(capsys, "norms", "--samples", "20")
    assert code == 0
    assert "canonical witness" in out and "0 != 4" in out


def test_norms_unknown_algebra_is_usage_error(capsys):
    assert main(["norms", "--algebra", "QxO"]) == 2


def test_veronese_check_random(capsys):
    code, out = run_cli(capsys, "veronese-check", "--samples", "5")
    assert code == 0
    for kind in ("real",):
        code, out = run_cli(capsys, "veronese-check", "--kind", kind,
                            "--samples", "3")
        assert code == 0


def test_veronese_check_input_file(tmp_path, capsys):
    kc = veronese.PlaneKind(veronese.COMPLEX, algebra("C", "O"))
    v = veronese.random_complex_veronese(kc, Stream(5))
    path = tmp_path / "triple.json"
    path.write_text(json.dumps(v.to_json()))
    code, out = run_cli(capsys, "veronese-check", "--input", str(path))
    assert code == 0
    assert "attached matrix rank" in out


def test_malformed_json_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["veronese-check", "--input", str(path)]) == 2
    err = capsys.readouterr().err
    assert "malformed JSON" in err and "line" in err


def test_jordan_rank_input_matrix(tmp_path, capsys):
    m = jordan.random_hermitian(algebra("R", "O"), Stream(8))
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps(jordan.matrix_to_json(m)))
    code, out = run_cli(capsys, "jordan-rank", "--input", str(path))
    assert code == 0
    assert "hamilton-cayley residual" in out


def test_adjacency_demo(capsys):
    code, out = run_cli(capsys, "adjacency-demo")
    assert code == 0
    assert "points distinct" in out


def test_lie_der_single_algebra(capsys):
    code, out = run_cli(capsys, "lie-der", "--algebra", "O")
    assert code == 0
    assert "dim der(O)" in out and "| 14 |" in out


def test_lie_char_single_algebra_json(capsys):
    code, out = run_cli(capsys, "lie-char", "--algebra", "Os", "--format",
                        "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass"
    names = {c["name"]: c for c in rep["checks"]}
    assert names["character of der(Os)"]["computed"] == 2


def test_lie_unknown_carrier(capsys):
    assert main(["lie-der", "--algebra", "bogus"]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_csv_format(capsys):
    code, out = run_cli(capsys, "adjacency-demo", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "name,expected,computed,status"


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "bioctonion.cli", "veronese-check",
           "--samples", "3", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout
    assert a.returncode == 0
