import json
import subprocess
import sys

import pytest

from edgering import config
from edgering.cli import main
from edgering.families import petersen
from edgering.graph import format_graph
from edgering.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, text, name="g.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# --- analyze ---------------------------------------------------------------


def test_analyze_file_json(tmp_path, capsys):
    code, out, err = run(capsys, "analyze", write(tmp_path, format_graph(petersen())))
    assert code == 0 and err == ""
    report = Report.model_validate_json(out)
    assert report.hilbert.h_vector == [1, 5, 15, 25, 5, 1]
    assert report.classification.almost_gorenstein is True
    assert report.classification.condition_star is False
    assert report.canonical.mu == 11
    assert report.structure.hamiltonian is False
    assert report.schema_version == "1.0"
    assert set(report.timing_ms) == {"structure", "normality", "classification", "certificates"}


def test_analyze_family_pretty(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "gmnr", "4", "4", "2", "--pretty")
    assert code == 0
    assert "h-vector" in out and "[1, 7, 9, 1]" in out


def test_report_round_trip(capsys):
    code, out, _ = run(capsys, "family", "h2")
    assert code == 0
    report = Report.model_validate_json(out)
    assert Report.model_validate_json(report.model_dump_json()) == report
    assert report.certificates.phi_bruteforce == 2
    assert report.input.family == "h2"


def test_degenerate_single_edge(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, "2\n1 2\n"))
    assert code == 0
    report = json.loads(out)
    assert report["hilbert"]["h_vector"] == [1]
    assert report["classification"]["degenerate"] is True
    assert any("polynomial ring" in w for w in report["warnings"])


def test_non_normal_report(tmp_path, capsys):
    text = "7\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n3 7\n4 7\n"
    code, out, _ = run(capsys, "analyze", write(tmp_path, text))
    assert code == 0
    report = json.loads(out)
    assert report["normality"]["normal"] is False
    assert report["canonical"] is None
    assert report["classification"]["gorenstein"] is None
    assert report["hilbert"]["cohen_macaulay_assumed"] is False


def test_guard_skips_hamiltonicity(capsys):
    # the wheel on 10 vertices has 18 edges, above the default search guard
    code, out, _ = run(capsys, "family", "wheel", "9")
    assert code == 0
    report = json.loads(out)
    assert report["structure"]["hamiltonian"] is None
    assert report["certificates"]["phi_bruteforce"] is None
    assert any("hamiltonicity skipped" in w for w in report["warnings"])
    assert report["canonical"]["mu"] == 7


# --- family --oracle -------------------------------------------------------


@pytest.mark.parametrize(
    "argv, formula",
    [
        (("kmn", "4", "5"), [1, 12, 18, 4]),
        (("gmnr", "3", "3", "3"), [1, 1, 1]),
        (("frak_g", "3"), [1, 3, 3, 1]),
    ],
)
def test_family_oracle(capsys, argv, formula):
    code, out, _ = run(capsys, "family", *argv, "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["oracle"] == {"formula": formula, "match": True}


def test_family_oracle_unknown(capsys):
    code, _, err = run(capsys, "family", "petersen", "--oracle")
    assert code == 1
    assert json.loads(err)["exit_code"] == 1


# --- errors ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, kind",
    [
        ("3\n1 1\n", "loop"),
        ("2\n1 2\n1 2\n", "duplicate edge"),
        ("3\n1 4\n", "vertex out of range"),
        ("3\n1 2\n", "isolated vertex"),
        ("3\nfoo\n", "malformed line"),
    ],
)
def test_input_errors(tmp_path, capsys, text, kind):
    code, out, err = run(capsys, "analyze", write(tmp_path, text))
    assert code == 1 and out == ""
    payload = json.loads(err)
    assert payload["error"] == kind and payload["exit_code"] == 1


def test_disconnected_graph(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", write(tmp_path, "4\n1 2\n3 4\n"))
    assert code == 1
    assert "connected" in json.loads(err)["message"]


def test_invalid_family_parameters(capsys):
    code, _, err = run(capsys, "family", "gmnr", "2", "3", "1")
    assert code == 1
    code, _, err = run(capsys, "family", "kmn", "a", "b")
    assert code == 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "absent.txt"))
    assert code == 1


def test_dilate_guard_exit_code(capsys):
    before = config.guards()
    code, out, err = run(capsys, "family", "petersen", "--max-dilate", "3")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "guard exceeded"
    # the override does not leak past the call
    assert config.guards() == before


def test_explore_exhaustive_guard(capsys):
    code, _, err = run(capsys, "explore", "--mode", "exhaustive", "--max-vertices", "9")
    assert code == 2


# --- explore ---------------------------------------------------------------


def test_explore_deterministic(capsys):
    argv = ["explore", "--seed", "42", "--samples", "40", "--max-vertices", "8"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    last = json.loads(out1.strip().splitlines()[-1])["summary"]
    assert last["examined"] == 40 and last["seed"] == 42


def test_explore_exhaustive_bipartite_small(capsys):
    code, out, _ = run(capsys, "explore", "--mode", "exhaustive", "--bipartite", "--max-vertices", "6")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])["summary"]
    assert summary["examined"] == 1 + 1 + 3 + 5 + 17
    assert summary["violations"] == 0


def test_console_script_entry_point(tmp_path):
    path = write(tmp_path, "4\n1 2\n2 3\n3 4\n1 4\n")
    proc = subprocess.run(
        [sys.executable, "-m", "edgering.cli", "analyze", path],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hilbert"]["h_vector"] == [1, 1]
