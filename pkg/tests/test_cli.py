import json
import pathlib
import subprocess
import sys

import pytest

from modvar import presentations as P
from modvar.cli import main

REPO = pathlib.Path(__file__).resolve().parent.parent
IDS = REPO / "presentations"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_shipped_files_match_canonical_texts():
    for name, text in P.FILES.items():
        assert (IDS / name).read_text() == text


def test_check_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "check", str(IDS / "v1_repaired.ids"))
    assert code == 0 and "status: Modular" in out
    code, out, _ = run(capsys, "check", str(IDS / "v1.ids"))
    assert code == 1 and "status: NotModular" in out
    code, out, _ = run(capsys, "check", str(IDS / "v1_meet_v2.ids"))
    assert code == 1
    empty = tmp_path / "empty.ids"
    empty.write_text("")
    code, _, err = run(capsys, "check", str(empty))
    assert code == 3 and "error" in err
    code, _, err = run(capsys, "check", str(tmp_path / "missing.ids"))
    assert code == 3


def test_check_join_flags(capsys):
    code, out, _ = run(capsys, "check", "--join-sl", str(IDS / "commut_modular.ids"))
    assert code == 0 and "join: SL" in out


def test_check_json_round_trip(capsys):
    code, out, _ = run(capsys, "check", "--json", str(IDS / "v1_meet_v2.ids"))
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "NotModular"
    assert data["conditions"]["c"]["passed"] is False
    code2, out2, _ = run(capsys, "check", "--json", str(IDS / "v1_meet_v2.ids"))
    assert out2 == out  # byte-identical reruns


def test_check_report_dir(capsys, tmp_path):
    report = tmp_path / "report"
    code, _, _ = run(capsys, "check", "--report-dir", str(report),
                     str(IDS / "v1_repaired.ids"))
    assert code == 0
    assert json.loads((report / "verdict.json").read_text())["status"] == "Modular"
    table = (report / "classes.tsv").read_text().splitlines()
    assert table[0] == "word\tclass_size\tzero\tstabilizer_order\tstabilizer"
    assert any(line.startswith("a^2 b c\t2\tno\t2\tT23") for line in table)
    figure = report / "stabilizers_s3.png"
    assert figure.exists() and figure.stat().st_size > 0


def test_sublattice_listing(capsys):
    code, out, _ = run(capsys, "sublattice", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "name\torder\tmodular"
    assert len(lines) == 7
    assert all(line.endswith("yes") for line in lines[1:])
    code, out, _ = run(capsys, "sublattice", "4", "--modular-only")
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 7
    names = {row.split("\t")[0] for row in rows}
    assert names == {"T", "V4", "I12,34", "I13,24", "I14,23", "A4", "S4"}


def test_sublattice_dot_and_figure(capsys, tmp_path):
    code, out, _ = run(capsys, "sublattice", "3", "--dot")
    assert code == 0 and out.startswith("digraph sub_s3")
    assert out.count("->") == 8
    figure = tmp_path / "sub3.png"
    table = tmp_path / "sub3.tsv"
    code, out, _ = run(capsys, "sublattice", "3", "--figure", str(figure),
                       "--out", str(table))
    assert code == 0 and out == ""
    assert figure.stat().st_size > 0
    assert table.read_text().startswith("name\torder\tmodular")


def test_sublattice_range(capsys):
    code, _, err = run(capsys, "sublattice", "7")
    assert code == 3 and "degree" in err


def test_word_order(capsys):
    code, out, _ = run(capsys, "word-order", "x x y z", "x y z z")
    assert code == 0 and out.strip() == "incomparable"
    code, out, _ = run(capsys, "word-order", "x y", "x y z")
    assert out.strip() == "less"
    code, _, err = run(capsys, "word-order", "x y", "NOT A WORD")
    assert code == 3


def test_stabilizer_verb(capsys):
    code, out, _ = run(capsys, "stabilizer", str(IDS / "v1.ids"), "x^2 y z")
    assert code == 0 and out.strip() == "order 2, generated by (y z)"
    code, out, _ = run(capsys, "stabilizer", str(IDS / "v1.ids"), "x")
    assert out.strip() == "order 1, trivial"
    code, out, _ = run(capsys, "stabilizer", str(IDS / "v1.ids"), "x1 x2 x3 x4 x5")
    assert "zero in the variety" in out


def test_gset_verify(capsys):
    code, out, _ = run(capsys, "gset-verify", "--group", "s3", "--orbits", "2")
    assert code == 0
    assert "FAIL" not in out
    assert "lemma checks passed" in out
    code, out, _ = run(capsys, "gset-verify", "--group", "s2", "--orbits", "2")
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "modvar", "word-order", "x y", "y x"],
                          capture_output=True, text=True, cwd=REPO)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "equivalent"
