import contextlib
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from usym import fixture_path, schema_path
from usym.cli import main
from usym.io import digest_bytes


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def fx(name: str) -> str:
    return str(fixture_path(name))


def test_present_dual_golden_text():
    code, out, _ = run_cli(["present", fx("dual_q.json")])
    digest = digest_bytes(fixture_path("dual_q.json").read_bytes())
    expected = f"""command: present dual_q.json --max-degree 4 --format text
input: algebra dual_q.json {digest}
status: ok
field: QQ
dimension: 2
max-degree: 4
generators (2): x[1,2] x[2,2]
eliminated (2):
  x[1,1] -> 1 * 1
  x[2,1] -> 0
rules (2):
  x[1,2] x[1,2] -> 0
  x[2,2] x[1,2] -> -1 * x[1,2] x[2,2]
delta:
  x[1,2] -> 1 * x[1,2] (x) x[2,2] + 1 * 1 (x) x[1,2]
  x[2,2] -> 1 * x[2,2] (x) x[2,2]
eps:
  x[1,2] -> 0
  x[2,2] -> 1
coaction:
  e[1] -> e[1] (x) (1 * 1)
  e[2] -> e[1] (x) (1 * x[1,2]) + e[2] (x) (1 * x[2,2])
"""
    assert code == 0
    assert out == expected


def test_present_ground_field_empty():
    code, out, _ = run_cli(["present", fx("ground_field_q.json")])
    assert code == 0
    assert "generators (0): none" in out
    assert "rules (0):" in out


def test_check_exit_zero_on_both_fixtures():
    for name in ("dual_q.json", "triangular_q.json"):
        code, out, _ = run_cli(["check", fx(name)])
        assert code == 0
        assert "status: ok" in out
        assert "FAIL" not in out


def test_endo_report_counts():
    code, out, _ = run_cli(["endo", fx("dual_gf5.json"), "--field-check", "--oracle"])
    assert code == 0
    assert "points (5):" in out
    assert "oracle-match: pass" in out
    assert "gamma-algebra-map: pass" in out


def test_aut_report_counts():
    code, out, _ = run_cli(["aut", fx("dual_gf7.json"), "--oracle"])
    assert code == 0
    assert "points (6):" in out
    assert "inverses: pass" in out


def test_gradings_with_group_file():
    code, out, _ = run_cli(
        ["gradings", fx("dual_gf2.json"), "--group", fx("group_klein.json"), "--classify"]
    )
    assert code == 0
    assert "group: group_klein.json order=4" in out
    assert "orbit-count-agreement: pass" in out


def test_gradings_cyclic_shorthand_classify_oracle():
    code, out, _ = run_cli(
        ["gradings", fx("dual_gf3.json"), "--group", "cyclic:2", "--classify", "--oracle"]
    )
    assert code == 0
    assert "points (2):" in out
    assert "grading-classes: 2" in out
    assert "orbit-correspondence: pass" in out


SCHEMA = json.loads(schema_path().read_text())


@pytest.mark.parametrize(
    "argv",
    [
        ["present", fx("dual_q.json")],
        ["present", fx("triangular_q.json")],
        ["check", fx("dual_q.json")],
        ["endo", fx("dual_gf3.json"), "--oracle", "--field-check"],
        ["aut", fx("triangular_gf2.json"), "--oracle"],
        ["gradings", fx("dual_gf3.json"), "--group", "cyclic:2", "--classify", "--oracle"],
        ["gradings", fx("triangular_gf2.json"), "--group", fx("group_c2.json")],
    ],
)
def test_json_reports_validate_against_schema(argv):
    code, out, _ = run_cli(argv + ["--format", "json"])
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["status"] == "ok"


def test_exit_1_on_missing_file(tmp_path):
    code, out, err = run_cli(["present", str(tmp_path / "absent.json")])
    assert code == 1
    assert not out
    assert "cannot read" in err


def test_exit_1_on_invalid_algebra(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "field": "QQ",
                "dimension": 2,
                "basis": ["1", "t"],
                "unit_index": 1,
                "tau": [[1, 1, 1, "1"]],
            }
        )
    )
    code, _, err = run_cli(["present", str(bad)])
    assert code == 1
    assert "not a valid algebra" in err


def test_exit_1_on_bad_max_degree():
    code, _, err = run_cli(["present", fx("dual_q.json"), "--max-degree", "1"])
    assert code == 1
    assert "--max-degree" in err


def test_exit_3_on_search_bound(monkeypatch):
    monkeypatch.setenv("USYM_MAX_SEARCH", "10")
    code, _, err = run_cli(["endo", fx("triangular_gf3.json")])
    assert code == 3
    assert "bound" in err


def test_env_bound_must_be_integer(monkeypatch):
    monkeypatch.setenv("USYM_MAX_SEARCH", "lots")
    code, _, err = run_cli(["endo", fx("dual_gf3.json")])
    assert code == 1
    assert "USYM_MAX_SEARCH" in err


def test_exit_2_on_completion_bound(monkeypatch):
    from usym.errors import CompletionBoundError
    import usym.cli as cli_mod

    def boom(algebra, degree):
        raise CompletionBoundError("no fixpoint")

    monkeypatch.setattr(cli_mod, "build_presentation", boom)
    code, _, err = run_cli(["present", fx("dual_q.json")])
    assert code == 2
    assert "no fixpoint" in err


def test_exit_1_on_endo_over_rationals():
    code, _, err = run_cli(["endo", fx("dual_q.json")])
    assert code == 1
    assert "prime fields" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "usym.cli", "present", fx("dual_q.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "generators (2): x[1,2] x[2,2]" in proc.stdout


def test_repeated_runs_byte_identical():
    argv = ["gradings", fx("triangular_gf2.json"), "--group", "cyclic:2",
            "--classify", "--oracle", "--format", "json"]
    first = run_cli(argv)
    second = run_cli(argv)
    assert first == second
