import json
import os
import re
import shutil
import subprocess
import sys

import pytest

from gretl_mini.case import FIXTURE_DIR, NEGATIVE_DIR
from gretl_mini.case.fixtures import REFERENCE_TRANSFORMATION
from gretl_mini.cli import main

ERROR_LINE = re.compile(r"^ERROR (\w+) (\S+) (.+)$")
A = str(FIXTURE_DIR / "A.graph")
RULES = str(REFERENCE_TRANSFORMATION)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def error_kind(err):
    lines = [line for line in err.splitlines() if line.startswith("ERROR")]
    assert len(lines) == 1, err
    m = ERROR_LINE.match(lines[0])
    assert m, lines[0]
    return m.group(1), m.group(2)


def test_transform_writes_outputs(capsys, tmp_path):
    out, dot, trace = tmp_path / "out.graph", tmp_path / "out.dot", tmp_path / "t.json"
    code, stdout, _ = run(capsys, "transform", "--source", A, "--rules", RULES, "--out", str(out),
                          "--dot", str(dot), "--trace", str(trace))
    assert code == 0 and stdout == ""
    assert len(json.loads(out.read_text())["graph"]["edges"]) == 4
    assert dot.read_text().startswith("digraph G {")
    assert set(json.loads(trace.read_text())) == {"img_State", "img_Transition"}


def test_transform_missing_source(capsys, tmp_path):
    code, _, err = run(capsys, "transform", "--source", str(tmp_path / "nope.graph"), "--rules", RULES,
                       "--out", str(tmp_path / "o"))
    assert code == 1 and error_kind(err) == ("IoError", "-")


def test_transform_missing_rules(capsys, tmp_path):
    code, _, err = run(capsys, "transform", "--source", A, "--rules", str(tmp_path / "x.gretl"),
                       "--out", str(tmp_path / "o"))
    assert code == 1 and error_kind(err)[0] == "IoError"


def test_transform_syntax_error(capsys, tmp_path):
    rules = tmp_path / "bad.gretl"
    rules.write_text("import classifiers.*;\n\nCreateVertexClass State <== from c: V{Class} reportSet c;\n")
    code, _, err = run(capsys, "transform", "--source", A, "--rules", str(rules), "--out", str(tmp_path / "o"))
    assert code == 1
    kind, location = error_kind(err)
    assert kind == "SyntaxError" and location == "3:57"
    assert not (tmp_path / "o").exists()


def test_transform_negative_fixture(capsys, tmp_path):
    code, _, err = run(capsys, "transform", "--source", str(NEGATIVE_DIR / "DuplicateState.graph"),
                       "--rules", RULES, "--out", str(tmp_path / "o"))
    assert code == 1 and error_kind(err) == ("NotSingleton", "statement[0]@3")


def test_validate(capsys, tmp_path):
    out = tmp_path / "out.graph"
    assert run(capsys, "transform", "--source", A, "--rules", RULES, "--out", str(out))[0] == 0
    assert run(capsys, "validate", "--source", str(out)) == (0, "", "")
    doc = json.loads(out.read_text())
    doc["graph"]["edges"][0]["to"] = "ghost"
    out.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "--source", str(out))
    assert code == 1 and error_kind(err) == ("ValidationError", doc["graph"]["edges"][0]["id"])
    assert "[dangling-endpoint]" in err


def test_query(capsys):
    code, out, _ = run(capsys, "query", "--source", A, "from c: V{Class} reportSet c.name end")
    assert code == 0 and out == '{"Exception", "Locked", "State", "Unlocked"}\n'
    code, out, _ = run(capsys, "query", "--source", A, "from c: V{Class} with false reportSet c end")
    assert code == 0 and out == "{}\n"
    code, _, err = run(capsys, "query", "--source", A, "from c: V{Class} reportSet d end")
    assert code == 1 and error_kind(err)[0] == "UnboundVariable"
    code, _, err = run(capsys, "query", "--source", A, "from c:")
    assert code == 1 and error_kind(err) == ("SyntaxError", "1:8")


def test_case_all_pass(capsys):
    code, out, err = run(capsys, "case")
    assert code == 0
    assert out.splitlines() == ["PASS A", "PASS B", "PASS C"]
    assert [line.split(":")[0] for line in err.splitlines()] == ["A", "B", "C"]


def test_case_corrupted_fixture(capsys, tmp_path):
    shutil.copytree(FIXTURE_DIR, tmp_path / "fx")
    doc = json.loads((tmp_path / "fx" / "B.graph").read_text())
    doc["graph"]["edges"][0]["from"] = "ghost"
    (tmp_path / "fx" / "B.graph").write_text(json.dumps(doc))
    code, out, _ = run(capsys, "case", "--source", str(tmp_path / "fx"))
    lines = out.splitlines()
    assert code == 1
    assert lines[0] == "PASS A" and lines[2] == "PASS C"
    assert lines[1].startswith("FAIL B: ValidationError")


def test_case_out_directory(capsys, tmp_path):
    assert run(capsys, "case", "--out", str(tmp_path))[0] == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["A.out.graph", "B.out.graph", "C.out.graph"]


def test_case_empty_directory(capsys, tmp_path):
    code, _, err = run(capsys, "case", "--source", str(tmp_path))
    assert code == 1 and error_kind(err)[0] == "IoError"


@pytest.mark.parametrize("argv", [
    [],
    ["transform", "--source", A],
    ["frobnicate"],
    ["query", "--source", A],
    ["validate"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert capsys.readouterr().out == ""


def test_verbose_flag_either_position():
    for argv in (["-v", "validate", "--source", A], ["validate", "--source", A, "-vv"]):
        assert main(argv) == 0


def test_colour_only_when_requested(monkeypatch, capsys):
    monkeypatch.setenv("GRETL_MINI_COLOR", "1")
    _, out, _ = run(capsys, "case")
    assert out.splitlines()[0] == "\033[32mPASS\033[0m A"
    monkeypatch.setenv("GRETL_MINI_COLOR", "0")
    _, out, _ = run(capsys, "case")
    assert out.splitlines()[0] == "PASS A"


def test_subprocess_transform_is_byte_identical(tmp_path):
    outputs = []
    for i in range(2):
        d = tmp_path / str(i)
        d.mkdir()
        proc = subprocess.run(
            [sys.executable, "-m", "gretl_mini", "transform", "--source", A, "--rules", RULES,
             "--out", str(d / "o.graph"), "--dot", str(d / "o.dot"), "--trace", str(d / "t.json")],
            capture_output=True, text=True, env={**os.environ, "GRETL_MINI_COLOR": "0"})
        assert proc.returncode == 0, proc.stderr
        outputs.append([(d / f).read_bytes() for f in ("o.graph", "o.dot", "t.json")])
    assert outputs[0] == outputs[1]


def test_subprocess_usage_and_query():
    proc = subprocess.run([sys.executable, "-m", "gretl_mini"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == ""
    runs = [subprocess.run([sys.executable, "-m", "gretl_mini", "query", "--source", A,
                            "from c: V{Method} reportMap c.name -> 1 end"], capture_output=True, text=True)
            for _ in range(2)]
    assert runs[0].returncode == 0 and runs[0].stdout == runs[1].stdout
