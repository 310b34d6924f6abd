from __future__ import annotations

import io
import json

import pytest

from sdquiver.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from sdquiver.ratfun import parse


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_validate():
    code, text = run("validate", "point:+")
    assert code == EXIT_OK
    assert "Q0+ (fixed, orthogonal): pt" in text and "vertices: 1, arrows: 0" in text
    assert run("validate", "atilde1:+,++")[0] == EXIT_OK


def test_validate_reports_bad_arrow(tmp_path):
    doc = {"vertices": [{"id": "a", "sign": 1}],
           "arrows": [{"id": "fine", "src": "a", "tgt": "a", "sign": -1},
                      {"id": "p", "src": "a", "tgt": "a", "dual": "q", "sign": 1},
                      {"id": "q", "src": "a", "tgt": "a", "dual": "p", "sign": -1}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, text = run("validate", str(path))
    assert code == EXIT_INPUT
    assert "invalid" in text
    assert "arrow p:" in text and "arrow q:" in text and "fine" not in text


@pytest.mark.parametrize("argv, expected", [
    (["--quiver", "point:+", "--class", "2", "--selfdual"], "1 / (2*L + 2)"),
    (["--quiver", "point:+", "--class", "0", "--selfdual"], "1"),
    (["--quiver", "loop:3:+:++-", "--class", "4", "--selfdual", "--kind", "chiJ"], "149/32"),
    (["--quiver", "point:+", "--class", "1", "--kind", "DT"], "1"),
    (["--quiver", "point:+", "--class", "2", "--selfdual", "--at", "3"], "1/8"),
])
def test_invariant(argv, expected):
    code, text = run("invariant", *argv)
    assert code == EXIT_OK
    assert text.strip() == expected


def test_invariant_errors(capsys):
    assert run("invariant", "--quiver", "point:+", "--class", "1", "--at", "1")[0] == EXIT_INPUT
    assert run("invariant", "--quiver", "point:-", "--class", "3", "--selfdual")[0] == EXIT_INPUT
    assert run("invariant", "--quiver", "point:+", "--class", "x")[0] == EXIT_INPUT
    assert run("invariant", "--quiver", "nope", "--class", "1")[0] == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_table_csv_loop():
    code, text = run("table", "--quiver", "loop:1:-:+", "--selfdual", "--kind", "chiJ",
                     "--max", "10", "--format", "csv")
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0] == "class,chiJsd"
    values = [line.split(",")[1] for line in lines[1:]]
    assert values[1:] == ["-1/4", "-3/32", "-7/128", "-77/2048", "-231/8192"]


def test_table_b_equals_c():
    _, sp = run("table", "--quiver", "point:-", "--selfdual", "--max", "10", "--format", "json")
    _, orth = run("table", "--quiver", "point:+", "--selfdual", "--max", "11", "--format", "json")
    sp_rows = json.loads(sp)["rows"]
    orth_rows = {r["class"]: r for r in json.loads(orth)["rows"]}
    for row in sp_rows:
        d = int(row["class"])
        partner = orth_rows[str(d + 1)]
        assert {k: v for k, v in row.items() if k != "class"} == \
            {k: v for k, v in partner.items() if k != "class"}


def test_table_json_round_trips_through_parser():
    code, text = run("table", "--quiver", "atilde1:+,+-", "--stability=-1,1",
                     "--kind", "I", "--kind", "J", "--max", "3", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["columns"] == ["class", "I", "J"]
    for row in doc["rows"]:
        for col in ("I", "J"):
            assert str(parse(row[col])) == row[col]


def test_output_is_deterministic():
    argv = ("table", "--quiver", "a2:+,+", "--stability=-1,1", "--max", "4")
    assert run(*argv) == run(*argv)
    assert run("verify", "--suite", "lambda", "--seed", "3", "--cases", "10") == \
        run("verify", "--suite", "lambda", "--seed", "3", "--cases", "10")


def test_series_command():
    code, text = run("series", "--quiver", "atilde1:+,++", "--conjecture-stability", "--max", "2")
    assert code == EXIT_OK
    assert "q^(1/2)" in text and text.strip().endswith("(9 coefficients checked)")
    assert "conjecture status: holds" in text
    code, text = run("series", "--quiver", "point:+", "--max", "6")
    assert code == EXIT_OK and "holds" in text


def test_series_mismatch_is_reported_without_failing():
    code, text = run("series", "--quiver", "atilde1:+,++", "--max", "2")
    assert code == EXIT_OK
    assert "MISMATCH" in text and "fails on" in text


@pytest.mark.parametrize("suite", ["bernoulli", "chains"])
def test_verify_suites(suite):
    code, text = run("verify", "--suite", suite)
    assert code == EXIT_OK and "checks passed" in text


def test_verify_small_randomized():
    code, text = run("verify", "--suite", "wallcross", "--cases", "20", "--seed", "5")
    assert code == EXIT_OK and "seed=5" in text
    assert EXIT_FAIL == 1
