import csv
import io
import json
from fractions import Fraction

import pytest

from ratapprox.cli import run
from ratapprox.decompose import verify
from ratapprox.serialize import from_json


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), stdout=out)
    return status, out.getvalue()


def test_decompose_worked_instance():
    status, text = call("decompose", "--a", "1", "--q", "101", "--Q", "25600", "--n", "3", "--c", "2")
    assert status == 0
    data = json.loads(text)
    assert data["path"] == "theorem-search"
    assert [(t["num"], t["den"]) for t in data["terms"]] == [("2", "23"), ("31", "37"), ("-43", "47")]
    assert data["error"] == {"num": "1", "den": "4039697"}
    assert data["b"] == "396" and data["product"] == "39997"
    assert set(data) == {"a", "q", "Q", "n", "c", "path", "terms", "b", "product", "error",
                         "hypothesis_Q_ge_q2eps"}


def test_decompose_trivial():
    status, text = call("decompose", "--a", "3", "--q", "7", "--Q", "49", "--n", "3")
    assert status == 0
    data = json.loads(text)
    assert data["path"] == "trivial" and data["error"] == {"num": "0", "den": "1"}


def test_decompose_not_found_exit_code():
    status, text = call("decompose", "--a", "1", "--q", "1009", "--Q", "16", "--n", "4")
    assert status == 2
    assert json.loads(text)["path"] == "not-found"


def test_json_round_trip():
    _, text = call("decompose", "--a", "5", "--q", "2003", "--Q", str(2003 ** 3), "--n", "3")
    d = from_json(text)
    again = from_json(text)
    assert verify(d) == verify(again)
    assert verify(d).passed


def test_verify_command(tmp_path):
    path = tmp_path / "d.json"
    assert call("decompose", "--a", "1", "--q", "101", "--Q", "25600", "--out", str(path))[0] == 0
    status, text = call("verify", "--in", str(path))
    assert status == 0 and json.loads(text)["passed"] is True

    data = json.loads(path.read_text())
    data["terms"][0]["num"] = "3"
    path.write_text(json.dumps(data))
    status, text = call("verify", "--in", str(path))
    assert status == 1 and json.loads(text)["error_identity"] is False


def test_moments_command():
    status, text = call("moments", "--q", "5", "--X", "1,2", "--Y", "2", "--Z", "0")
    assert status == 0
    (row,) = csv.DictReader(io.StringIO(text))
    assert (row["moment_num"], row["moment_den"]) == ("14", "5")
    assert (row["ratio_num"], row["ratio_den"]) == ("7", "20")


def test_oracle_command():
    status, text = call("oracle", "--a", "1", "--q", "5", "--n", "3", "--D", "3")
    assert status == 0
    assert json.loads(text)["best_error"] == {"num": "1", "den": "30"}
    status, text = call("oracle", "--a", "1", "--q", "5", "--n", "3", "--D", "3", "--format", "csv")
    assert status == 0 and "1,30" in text


def test_sweep_header_only():
    status, text = call("sweep", "--count", "0")
    assert status == 0
    assert text == "q,a,Q,R,S,P,L,found,product,verify_pass\n"


def test_sweep_single_instance():
    status, text = call("sweep", "--seed", "1", "--count", "1", "--q-min", "101", "--q-max", "101",
                        "--exponent", "11/5", "--n", "3", "--c", "2")
    assert status == 0
    rows = list(csv.reader(io.StringIO(text)))
    # ceil(101**2.2) = 25675 and 59**3 <= 8 * 25675
    assert rows[1][2:4] == ["25675", "59"]
    assert rows[-1][0] == "summary"


def test_sweep_with_a_equal_one_reproduces_worked_instance():
    from ratapprox.sweep import run_sweep, sample_instances

    seed = next(s for s in range(1000) if sample_instances(s, 1, 101, 101) == [(101, 1)])
    (row,) = run_sweep(seed, 1, 101, 101, Fraction(11, 5), 3)
    assert row.found and row.product == 39997 and row.verify_pass


@pytest.mark.parametrize("argv", [
    ["decompose", "--a", "1"],
    ["decompose", "--a", "1", "--q", "0", "--Q", "5"],
    ["decompose", "--a", "1", "--q", "5", "--Q", "5", "--c", "1"],
    ["decompose", "--a", "1", "--q", "5", "--Q", "5", "--c", "x/y"],
    ["frobnicate"],
    ["oracle", "--a", "1", "--q", "1009", "--n", "5", "--D", "1000"],
])
def test_errors_exit_one(argv):
    assert call(*argv)[0] == 1


def test_deterministic_output():
    argv = ["sweep", "--seed", "3", "--count", "5", "--n", "4"]
    assert call(*argv) == call(*argv)
