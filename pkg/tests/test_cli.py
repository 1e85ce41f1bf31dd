import json

import pytest

from bott_towers.cli import main


@pytest.fixture
def tower_file(tmp_path):
    def write(name, n, coeffs):
        path = tmp_path / name
        path.write_text(json.dumps({"n": n, "coeffs": coeffs}))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mul(tower_file, capsys):
    t = tower_file("t.json", 2, [[], [1]])
    x2 = json.dumps({"terms": [{"subset": [2], "coeff": 1}]})
    code, out, _ = run(capsys, "mul", t, "--u", x2, "--v", x2)
    assert code == 0
    assert json.loads(out) == {"terms": [{"subset": [1, 2], "coeff": 1}]}


def test_chern(tower_file, capsys):
    t = tower_file("t.json", 2, [[], [1]])
    x2 = json.dumps({"terms": [{"subset": [2], "coeff": 1}]})
    partner = json.dumps(
        {"terms": [{"subset": [1], "coeff": 1}, {"subset": [2], "coeff": -1}]}
    )
    code, out, _ = run(capsys, "chern", t, "--alpha", x2, "--beta", partner)
    assert code == 0
    data = json.loads(out)
    assert data["splits_trivially"] is True
    assert data["c2"] == {"terms": []}


def test_proj_iso_positive_and_negative(tower_file, capsys):
    t = tower_file("t.json", 1, [[]])
    zero = json.dumps({"terms": []})
    two = json.dumps({"terms": [{"subset": [1], "coeff": 2}]})
    one = json.dumps({"terms": [{"subset": [1], "coeff": 1}]})
    code, out, _ = run(capsys, "proj-iso", t, "--alpha", zero, "--beta", two)
    assert code == 0
    assert json.loads(out)["s"] == 1
    code, out, _ = run(capsys, "proj-iso", t, "--alpha", one, "--beta", zero)
    assert code == 1
    assert "not isomorphic" in out


def test_tower_iso_exit_codes(tower_file, capsys):
    a = tower_file("a.json", 2, [[], [3]])
    b = tower_file("b.json", 2, [[], [1]])
    c = tower_file("c.json", 2, [[], [0]])
    code, out, _ = run(capsys, "tower-iso", a, b)
    assert code == 0
    assert json.loads(out)["signs"] == [1, 1]
    code, out, _ = run(capsys, "tower-iso", b, c)
    assert code == 1
    assert "not isomorphic" in out


def test_ring_iso(tower_file, capsys):
    a = tower_file("a.json", 2, [[], [1]])
    c = tower_file("c.json", 2, [[], [0]])
    code, out, _ = run(capsys, "ring-iso", a, a, "--bound", "1")
    assert code == 0
    assert json.loads(out) == {"images": [[1, 0], [0, 1]]}
    code, out, _ = run(capsys, "ring-iso", a, c, "--bound", "3")
    assert code == 1
    assert "none within bound" in out


def test_pairs(tower_file, capsys):
    t = tower_file("t.json", 1, [[]])
    code, out, _ = run(capsys, "pairs", t, "--bound", "1")
    assert code == 0
    pairs = json.loads(out)
    assert len(pairs) == 4
    assert all("lemma_form" in p for p in pairs)


def test_classify(tower_file, capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "classify", "--n", "2", "--bound", "2",
        "--cross-validate", "--oracle-bound", "4",
        "--out", str(out_path),
    )
    assert code == 0
    assert "partitions agree: 2 classes" in out
    report = json.loads(out_path.read_text())
    assert report["classes"] == [[0, 2, 4], [1, 3]]
    assert report["agree"] is True


def test_malformed_input_exits_2(tower_file, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "coeffs": [[], [1, 2]]}')
    code, _, err = run(capsys, "tower-iso", str(bad), str(bad))
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "tower-iso", str(tmp_path / "missing.json"), str(bad))
    assert code == 2
