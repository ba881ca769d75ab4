import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matx import catalog
from matx.cli import emit_matroid, main, parse_matroid
from matx.errors import ParseError
from matx.isomorph import are_isomorphic
from matx.matroid import make

P9_TEXT = """# the nine-element matroid
rank 4
size 9
name P9
D
01111
10111
11010
11110
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_frozen():
    M = parse_matroid(P9_TEXT)
    assert M == catalog.get("P9").with_name("P9")
    assert M.name == "P9"


def test_emit_frozen():
    assert emit_matroid(catalog.get("P9")) == P9_TEXT.split("\n", 1)[1]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))).flatmap(
    lambda nr: st.tuples(st.just(nr), st.lists(st.integers(0, (1 << (nr[0] - nr[1])) - 1),
                                               min_size=nr[1], max_size=nr[1]))))
def test_round_trip(shape_rows):
    (n, r), rows = shape_rows
    M = make(r, n, rows)
    assert parse_matroid(emit_matroid(M)) == M


@pytest.mark.parametrize("text,line,col", [
    ("rank 4\nsize 9\nD\n0111\n", 4, 1),
    ("rank x\n", 1, 6),
    ("size 9\n", 1, 1),
    ("rank 2\nsize 4\nD\n1a\n01\n", 4, 2),
    ("rank 2\nsize 4\nD\n10\n01\nextra\n", 6, 1),
])
def test_parse_errors_locate_the_problem(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_matroid(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_parse_error_at_end_of_input():
    with pytest.raises(ParseError, match="end of input"):
        parse_matroid("rank 2\nsize 4\nD\n10\n")


def test_show_file_and_name(capsys, tmp_path):
    path = tmp_path / "m.bm"
    path.write_text(P9_TEXT)
    code, out, _ = run(capsys, "show", str(path))
    assert code == 0 and out == P9_TEXT.split("\n", 1)[1]
    code, out, _ = run(capsys, "show", "P9", "--json")
    assert code == 0 and json.loads(out)["D"] == ["01111", "10111", "11010", "11110"]


def test_dual_output_is_the_dual(capsys):
    code, out, _ = run(capsys, "dual", "F7")
    assert code == 0
    assert are_isomorphic(parse_matroid(out), catalog.get("F7*")) is not None


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "minor", "R17", "P9")[0] == 0
    assert run(capsys, "minor", "M12", "E4")[0] == 1
    assert run(capsys, "iso", "E5", "E5-lemma")[0] == 0
    assert run(capsys, "iso", "E4", "E5")[0] == 1
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "--claim", "nope")[0] == 2
    assert run(capsys, "census", "--seed", "E4", "--exclude", "P9", "--max-size", "11")[0] == 2
    code, _, err = run(capsys, "show", "no-such-thing")
    assert code == 3 and "neither a catalog name nor a file" in err
    bad = tmp_path / "bad.bm"
    bad.write_text("rank 4\nsize 9\nD\n0111\n")
    code, _, err = run(capsys, "show", str(bad))
    assert code == 3 and "line 4, column 1" in err


def test_minor_witness_json(capsys):
    code, out, _ = run(capsys, "minor", "D1", "P9", "--witness", "--json")
    data = json.loads(out)
    assert code == 0 and data["minor"] and data["contract"] == [] and len(data["delete"]) == 1


def test_conn(capsys):
    code, out, _ = run(capsys, "conn", "P9", "--json")
    data = json.loads(out)
    assert data == {"threeConnected": True, "internally4Connected": False,
                    "separations": [[1, 2, 5, 6], [1, 2, 5, 6, 8], [1, 2, 5, 6, 9]]}


def test_ext_classes_and_filter(capsys):
    code, out, _ = run(capsys, "ext", "P9", "--classes", "--json")
    assert [c["name"] for c in json.loads(out)] == ["D3", "D2", "D1"]
    code, out, _ = run(capsys, "coext", "E5-lemma", "--exclude", "E4")
    assert out.split() == ["00111", "01001", "01010", "01100", "10011", "10101", "11101"]


def test_census_command(capsys):
    code, out, _ = run(capsys, "census", "--seed", "P9", "--exclude", "E4", "--max-size", "10", "--max-rank", "5")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 11
    assert lines[0] == "9\t4\tP9\tP9"


def test_verify_single_claim(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--claim", "L22.M12.splitter", "--report", str(report))
    data = json.loads(report.read_text())
    assert code == 0 and data["claims"][0]["id"] == "L22.M12.splitter" and data["claims"][0]["status"] == "pass"
