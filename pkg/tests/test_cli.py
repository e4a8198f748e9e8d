import json

import pytest

from incgen import cli
from incgen.generation import check_generates
from incgen.io import load_tuple, tuple_from_json, tuple_to_json
from incgen.errors import IncGenError, ShapeMismatch


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.fixture
def chain2_file(tmp_path):
    path = tmp_path / "chain2.poset"
    path.write_text("# the 2-chain\nn 2\nrel 1 2\n")
    return str(path)


@pytest.fixture
def chain3_file(tmp_path):
    path = tmp_path / "chain3.poset"
    path.write_text("n 3\nrel 1 2\nrel 2 3\n")
    return str(path)


def test_count(capsys, chain2_file):
    status, out, _ = run(capsys, "count", "--poset", chain2_file, "--ring", "GF(2)", "-m", "2")
    js = json.loads(out)
    assert status == 0
    assert js["count"] == "24" and js["probability"] == {"num": "3", "den": "8"}


def test_prob_includes_closed_form(capsys, chain2_file):
    status, out, _ = run(capsys, "prob", "--poset", chain2_file, "--ring", "M(2,GF(2))", "-m", "1", "--precision", "5")
    js = json.loads(out)
    assert js["closed_form"] == {"num": "105", "den": "128"} and js["closed_form_agrees"]
    assert js["probability_decimal"] == "0.82031"


def test_mgen(capsys, chain2_file):
    status, out, _ = run(capsys, "mgen", "--poset", chain2_file, "--ring", "GF(2)")
    assert status == 0 and json.loads(out)["mgen"] == 2


def test_poset(capsys, tmp_path):
    path = tmp_path / "v.poset"
    path.write_text("n 3\nrel 1 3\nrel 2 3\n")
    _, out, _ = run(capsys, "poset", "--poset", str(path))
    assert json.loads(out) == {"covers": [[1, 3], [2, 3]], "rho": 5, "c": 2}


def test_mc(capsys, chain3_file, tmp_path):
    csv_path = tmp_path / "margins.csv"
    status, out, _ = run(capsys, "mc", "--poset", chain3_file, "--field", "real", "-m", "2",
                         "--trials", "10000", "--seed", "42", "--margins-csv", str(csv_path))
    js = json.loads(out)
    assert status == 0 and js["fraction"] == {"num": "1", "den": "1"} and js["seed"] == 42
    assert len(csv_path.read_text().splitlines()) == 10001


def test_byte_identical_output(capsys, chain3_file):
    args = ("mc", "--poset", chain3_file, "--field", "complex", "-m", "2", "--trials", "500", "--seed", "1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_enumerate(capsys, chain2_file):
    status, out, _ = run(capsys, "enumerate", "--poset", chain2_file, "--ring", "Z/4", "-m", "1")
    js = json.loads(out)
    assert status == 0 and js["equal"] and js["enumerated"] == js["formula"] == "0"


def test_enumerate_mismatch_exits_1(capsys, chain2_file, monkeypatch):
    monkeypatch.setattr(cli, "formula_count", lambda p, R, m: 25)
    status, out, _ = run(capsys, "enumerate", "--poset", chain2_file, "--ring", "GF(2)", "-m", "2")
    assert status == 1 and json.loads(out)["equal"] is False


def test_radical(capsys, chain2_file):
    _, out, _ = run(capsys, "radical", "--poset", chain2_file, "--ring", "Z/4")
    js = json.loads(out)
    assert js["size"] == "16"
    assert js["basis"][0] == [[2, 0], [0, 0]]


def test_check(capsys, tmp_path):
    path = tmp_path / "tuple.json"
    path.write_text(json.dumps({
        "poset": {"n": 2, "rel": [[1, 2]]},
        "ring": "GF(2)",
        "matrices": [[[1, 1], [0, 0]], [[0, 1], [0, 0]]],
    }))
    status, out, _ = run(capsys, "check", "--tuple", str(path))
    js = json.loads(out)
    assert status == 0 and js["verdict"] is True and js["cover_ranks"] == [[1, 2, 2]]


def test_check_rejects_off_pattern(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"poset": "n 2\nrel 1 2\n", "ring": "GF(2)", "matrices": [[[1, 0], [1, 0]]]}))
    status, _, err = run(capsys, "check", "--tuple", str(path))
    assert status == 1 and "outside the order relation" in err
    with pytest.raises(ShapeMismatch):
        load_tuple(path)


def test_domain_errors_exit_1(capsys, chain2_file):
    status, _, err = run(capsys, "count", "--poset", chain2_file, "--ring", "GF(6)", "-m", "1")
    assert status == 1 and "prime power" in err
    status, _, err = run(capsys, "count", "--poset", "missing.poset", "--ring", "GF(2)", "-m", "1")
    assert status == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--ring", "GF(2)", "-m", "1"],
        ["count", "--poset", "chain:2", "--ring", "GF(2)", "-m", "0"],
        ["mc", "--poset", "chain:2", "-m", "2", "--field", "quaternion"],
        ["mc", "--poset", "chain:2", "-m", "2", "--tol", "-1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_table_output(capsys):
    status, out, _ = run(capsys, "count", "--poset", "chain:2", "--ring", "GF(2)", "-m", "2", "--output", "table")
    assert "probability: 3/8" in out and "count: 24" in out


def test_tuple_json_round_trip():
    data = {
        "poset": "n 3\nrel 1 3\nrel 2 3\n",
        "ring": "GF(2)xGF(4)",
        "matrices": [[[[1, [0, 1]], [0, [0]], [0, [1, 1]]],
                      [[0, [0]], [1, [1]], [1, [0, 1]]],
                      [[0, [0]], [0, [0]], [0, [1]]]]],
    }
    poset, ring, mats = tuple_from_json(data)
    again = tuple_from_json(json.loads(json.dumps(tuple_to_json(poset, ring, mats))))
    assert again[2] == mats
    assert check_generates(mats).verdict == check_generates(again[2]).verdict


def test_missing_field():
    with pytest.raises(IncGenError):
        tuple_from_json({"ring": "GF(2)", "matrices": []})
