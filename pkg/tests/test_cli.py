import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from knowtell import cli
from knowtell.checks import CheckReport, Violation
from knowtell.cli import emit_report, load_scenario, load_trace, main

SRC = str(Path(__file__).resolve().parents[1] / "src")

WORKED = {
    "facts": ["a", "b", "c"],
    "side_a": ["a"],
    "side_b": ["b"],
    "model": "communication",
}


@pytest.fixture
def scenario_path(write_json):
    return write_json(WORKED)


def test_load_scenario(scenario_path):
    scenario = load_scenario(scenario_path)
    assert scenario.facts == ("a", "b", "c")
    assert scenario.side_a == {"a"}


@pytest.mark.parametrize(
    "payload,needle",
    [
        ({**WORKED, "side_a": ["z"]}, "side_a"),
        ({**WORKED, "model": "quantum"}, "model"),
        ({**WORKED, "facts": ["a", "a", "b"]}, "duplicate"),
        ({**WORKED, "facts": "abc"}, "array"),
        ({"facts": ["a"], "side_a": [], "side_b": []}, "model"),
        ([1, 2], "object"),
    ],
)
def test_load_scenario_errors(write_json, payload, needle):
    with pytest.raises(cli.InputError) as err:
        load_scenario(write_json(payload))
    assert needle in str(err.value)


def test_load_scenario_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(cli.InputError) as err:
        load_scenario(str(path))
    assert "bad JSON" in str(err.value)


def test_load_trace(write_json):
    events = load_trace(write_json([{"from": 1, "to": 2, "msg": "a"}]))
    assert len(events) == 1
    assert events[0].sender == 1 and str(events[0].message) == "a"
    assert load_trace(write_json([])) == []


@pytest.mark.parametrize(
    "payload,needle",
    [
        ([{"from": 1, "to": 2, "msg": "a.3"}], "[0]"),
        ([{"from": 1, "to": 2}], "msg"),
        ([{"from": 1, "to": 1, "msg": "a"}], "different"),
        ([{"from": 3, "to": 2, "msg": "a"}], "1 or 2"),
        ({"from": 1}, "array"),
        ([42], "object"),
    ],
)
def test_load_trace_errors(write_json, payload, needle):
    with pytest.raises(cli.InputError) as err:
        load_trace(write_json(payload))
    assert needle in str(err.value)


def test_check_clean_run(capsys):
    code = main(["check", "--max-facts", "1", "--traces", "5", "--depth", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "all checks passed" in out
    assert "PASS language-equivalence" in out


def test_check_json_schema(capsys):
    code = main(["check", "--max-facts", "1", "--traces", "5", "--depth", "3",
                 "--format", "json"])
    assert code == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert isinstance(payload, list) and len(payload) == 5
    expected_keys = ["check", "scenarios", "violations", "status", "millis"]
    ordered = json.loads(out, object_pairs_hook=list)
    for entry in ordered:
        assert [key for key, _ in entry] == expected_keys
    assert all(item["status"] == "pass" for item in payload)


def test_check_mutated_fails_with_witness(capsys):
    code = main(["check", "--max-facts", "1", "--traces", "5", "--depth", "3",
                 "--mutate", "no-understanding", "--format", "json"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    failing = [item for item in payload if item["status"] == "fail"]
    assert [item["check"] for item in failing] == ["success-theorems"]
    witnesses = failing[0]["violations"]
    assert witnesses
    assert "understanding" in witnesses[0]["scenario"]


def test_emit_report_byte_identical():
    reports = [CheckReport("demo", 3, (Violation("s", "w"),), 17)]
    assert emit_report(reports, "json") == emit_report(reports, "json")
    assert emit_report(reports, "text") == emit_report(reports, "text")


def test_saturate_summary(capsys, scenario_path):
    assert main(["saturate", scenario_path]) == 0
    out = capsys.readouterr().out
    assert "side 1 knows: a" in out
    assert "languages equal: false" in out
    assert "project success: false" in out


def test_saturate_emit_regex(capsys, scenario_path):
    assert main(["saturate", scenario_path, "--emit-regex"]) == 0
    out = capsys.readouterr().out
    assert "side 1 fact a: 1*(12+1*)*" in out
    assert "side 2 fact c: 0" in out


def test_saturate_selection(capsys, scenario_path):
    assert main(["saturate", scenario_path, "--emit-regex", "--side", "1",
                 "--fact", "a"]) == 0
    out = capsys.readouterr().out
    assert "side 1 fact a" in out
    assert "side 1 fact b" not in out
    assert "side 2 fact" not in out


def test_saturate_dot_export(capsys, scenario_path, tmp_path):
    dot_path = tmp_path / "a.dot"
    assert main(["saturate", scenario_path, "--side", "1", "--fact", "a",
                 "--emit-dot", str(dot_path)]) == 0
    text = dot_path.read_text(encoding="utf-8")
    assert text.startswith("digraph side1_a {")
    assert "doublecircle" in text


def test_saturate_dot_needs_single_selection(capsys, scenario_path, tmp_path):
    code = main(["saturate", scenario_path, "--emit-dot",
                 str(tmp_path / "x.dot")])
    assert code == 3
    assert "exactly one acceptor" in capsys.readouterr().err


def test_saturate_unknown_fact(capsys, scenario_path):
    assert main(["saturate", scenario_path, "--fact", "z",
                 "--emit-regex"]) == 3


def test_trace_queries(capsys, scenario_path, write_json):
    trace_path = write_json([
        {"from": 1, "to": 2, "msg": "a"},
        {"from": 2, "to": 1, "msg": "a.1"},
    ])
    code = main(["trace", scenario_path, trace_path,
                 "--query", "knows 2 a.1",
                 "--query", "knows 1 a.1.2",
                 "--query", "knows 1 b",
                 "--query", "ck a"])
    assert code == 0
    assert capsys.readouterr().out.splitlines() == [
        "true", "true", "false", "false"
    ]


def test_trace_summary(capsys, scenario_path, write_json):
    trace_path = write_json([])
    assert main(["trace", scenario_path, trace_path]) == 0
    out = capsys.readouterr().out
    assert "side 1 knows: a" in out
    assert "side 2 knows: b" in out


def test_trace_untruthful_event(capsys, scenario_path, write_json):
    trace_path = write_json([{"from": 1, "to": 2, "msg": "b"}])
    assert main(["trace", scenario_path, trace_path]) == 3
    assert "event 0" in capsys.readouterr().err


def test_trace_bad_query(capsys, scenario_path, write_json):
    trace_path = write_json([])
    assert main(["trace", scenario_path, trace_path,
                 "--query", "believes 1 a"]) == 3


def test_oracle_compare(capsys, scenario_path):
    assert main(["oracle-compare", scenario_path, "--depth", "4"]) == 0
    assert "zero mismatches" in capsys.readouterr().out


def test_usage_errors():
    assert main(["check", "--nope"]) == 2
    assert main([]) == 2
    assert main(["--help"]) == 0


def test_missing_file(capsys):
    assert main(["saturate", "/no/such/file.json"]) == 3
    assert "cannot read" in capsys.readouterr().err


def test_repl_session(capsys, scenario_path, monkeypatch):
    script = "\n".join([
        "facts",
        "tell 1 2 a",
        "knows 2 a.1",
        "tell 1 2 b",
        "ck a",
        "frobnicate",
        "knows 2 a.3",
        "quit",
    ]) + "\n"
    monkeypatch.setattr(sys, "stdin", io.StringIO(script))
    assert main(["repl", scenario_path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "side 1 knows: a",
        "side 2 knows: b",
        "ok",
        "true",
        "error: side 1 does not know 'b'",
        "false",
        "error: unknown command 'frobnicate'",
        "error: agent mark must be '1' or '2', got '3' (at position 2)",
    ]


def test_module_entry_point(scenario_path):
    proc = subprocess.run(
        [sys.executable, "-m", "knowtell", "saturate", scenario_path],
        capture_output=True, text=True,
        env={"PYTHONPATH": SRC, "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0
    assert "side 1 knows: a" in proc.stdout
