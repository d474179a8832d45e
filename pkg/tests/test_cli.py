import json
import subprocess
import sys

import pytest

from knotcert.cli import main
from knotcert.corpus import FIGURE_EIGHT_PD, HOPF_PD, TREFOIL_PD

EXAMPLES = f"""# three examples
{TREFOIL_PD}
BR(2; 1 1 1 1)

{FIGURE_EIGHT_PD}
"""


@pytest.fixture
def examples(tmp_path):
    p = tmp_path / "examples.txt"
    p.write_text(EXAMPLES)
    return p


def _lines(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines()]


def test_analyze_json(examples, capsys):
    assert main(["analyze", str(examples)]) == 0
    out = _lines(capsys)
    assert [r.get("primeness") for r in out[:3]] == ["prime-certified", "prime-certified",
                                                     "inconclusive"]
    assert [r["input"]["line"] for r in out[:3]] == [2, 3, 5]
    summary = out[-1]["summary"]
    assert summary["records"] == 3 and summary["prime-certified"] == 2


def test_empty_file(tmp_path, capsys):
    p = tmp_path / "empty.txt"
    p.write_text("")
    assert main(["analyze", str(p)]) == 0
    (only,) = _lines(capsys)
    assert only["summary"]["records"] == 0


def test_malformed_line(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text(f"{TREFOIL_PD}\nX(1,2,3\n")
    assert main(["analyze", str(p)]) == 1
    out = _lines(capsys)
    assert "error" in out[1] and out[0]["primeness"] == "prime-certified"
    assert out[-1]["summary"]["errors"] == 1


def test_invariants_subcommand(examples, capsys):
    assert main(["invariants", str(examples)]) == 0
    out = _lines(capsys)
    assert out[0]["invariants"]["writhe"] == 3 and "splitness" not in out[0]


def test_bridges_subcommand(examples, capsys):
    assert main(["bridges", str(examples), "--format", "pd"]) == 1  # braid line is not PD
    out = _lines(capsys)
    assert out[0]["bridges"]["n"] == 3 and "error" in out[1]


def test_text_output(examples, capsys):
    assert main(["analyze", "--text", str(examples)]) == 0
    text = capsys.readouterr().out
    assert "primeness=prime-certified" in text and text.splitlines()[-1].startswith("summary:")


def test_assume_nontrivial(tmp_path, capsys):
    p = tmp_path / "kink.txt"
    p.write_text("X(1,2,2,1)\n")
    main(["analyze", str(p), "--assume-nontrivial"])
    assert _lines(capsys)[0]["nontrivial"]["status"] == "asserted-by-flag"


def test_json_array_input(tmp_path, capsys):
    p = tmp_path / "records.json"
    p.write_text(json.dumps([{"braid": [1, 1, 1], "strands": 2}, {"gauss": "O1+U2+;U1+O2+"}]))
    assert main(["analyze", str(p)]) == 0
    out = _lines(capsys)
    assert out[0]["input"]["format"] == "json" and out[1]["splitness"] == "nonsplit-certified"


def test_validate_round_trip(examples, tmp_path, capsys):
    main(["analyze", str(examples)])
    report = tmp_path / "report.jsonl"
    report.write_text(capsys.readouterr().out)
    assert main(["validate", str(report)]) == 0
    assert capsys.readouterr().out.count(": ok") == 3

    lines = report.read_text().splitlines()
    bad = json.loads(lines[0])
    bad["connectivity"] = False
    lines[0] = json.dumps(bad)
    report.write_text("\n".join(lines))
    assert main(["validate", str(report)]) == 1
    assert "REJECT" in capsys.readouterr().out


def test_usage_errors(examples):
    with pytest.raises(SystemExit) as err:
        main(["analyze", str(examples), "--jobs", "0"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["analyze", "/nonexistent/file"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_module_entry_point(examples):
    res = subprocess.run([sys.executable, "-m", "knotcert", "analyze", str(examples)],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.count("\n") == 4


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(HOPF_PD + "\n"))
    assert main(["analyze", "-"]) == 0
    assert _lines(capsys)[0]["splitness"] == "nonsplit-certified"
