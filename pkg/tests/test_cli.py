"""End-to-end CLI behavior: output, CSV reports, exit codes."""

import csv

import pytest

from unleaved import cli
from unleaved.schedule import WorkerFailure


def run(argv):
    return cli.main(argv)


def test_count_prints_the_number(capsys):
    assert run(["count", "--genus", "10"]) == 0
    assert capsys.readouterr().out == "204\n"


def test_count_complete_mode(capsys):
    assert run(["count", "--genus", "6", "--mode", "complete"]) == 0
    assert capsys.readouterr().out == "23\n"


def test_count_small_genus_falls_back_to_complete(tmp_path, capsys):
    report = tmp_path / "runs.csv"
    assert run(["count", "--genus", "5", "--stats-out", str(report)]) == 0
    assert capsys.readouterr().out == "12\n"
    row = next(csv.DictReader(report.open()))
    assert row["mode"] == "complete"
    assert row["workers"] == "1"


def test_count_appends_csv_rows(tmp_path, capsys):
    report = tmp_path / "runs.csv"
    run(["count", "--genus", "10", "--workers", "2", "--stats-out", str(report)])
    run(["count", "--genus", "10", "--workers", "2", "--stats-out", str(report)])
    capsys.readouterr()
    lines = report.read_text().splitlines()
    assert lines[0] == "genus,mode,count,visited,encoded,trimmed,wall_time_ms,workers"
    rows = list(csv.DictReader(report.open()))
    assert len(rows) == 2
    for row in rows:
        assert (row["genus"], row["mode"], row["count"]) == ("10", "unleaved", "204")
        assert (row["visited"], row["encoded"]) == ("364", "61")
        assert int(row["wall_time_ms"]) >= 0
        assert row["workers"] == "2"


def test_count_rejects_bad_arguments(capsys):
    assert run(["count", "--genus", "0"]) == 2
    assert run(["count", "--genus", "10", "--workers", "0"]) == 2
    capsys.readouterr()


def test_verify_reports_each_genus(capsys):
    assert run(["verify", "--max-genus", "9"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 10
    assert all(line.startswith("PASS genus=") for line in lines[:9])
    assert "unleaved=118" in lines[8]
    assert lines[9] == "verified genera 1..9; n_9 = 118"


def test_verify_flags_a_mismatch(monkeypatch, capsys):
    monkeypatch.setattr(cli.oracle, "genus_histogram",
                        lambda n: {g: 999 for g in range(n + 1)})
    assert run(["verify", "--max-genus", "3"]) == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].startswith("FAIL genus=1")
    assert run(["verify", "--max-genus", "0"]) == 2


def _shape(text):
    lines = text.strip().splitlines()
    assert lines[0] == "digraph semigroup_tree {"
    assert lines[-1] == "}"
    nodes = [l for l in lines if l.endswith('";') and "->" not in l]
    edges = [l for l in lines if "->" in l]
    return len(nodes), len(edges)


def test_export_dot_variants(capsys):
    assert run(["export-dot", "--genus", "4"]) == 0
    assert _shape(capsys.readouterr().out) == (15, 14)
    assert run(["export-dot", "--genus", "4", "--variant", "unleaved"]) == 0
    assert _shape(capsys.readouterr().out) == (14, 13)
    assert run(["export-dot", "--genus", "4", "--variant", "difference"]) == 0
    out = capsys.readouterr().out
    assert _shape(out) == (2, 1)
    # the one genus-4 dead end: losing 5 from the gaps {1,2} node
    assert '"{1,2}" -> "{1,2,5}";' in out


def test_export_dot_writes_files_deterministically(tmp_path, capsys):
    target = tmp_path / "tree.dot"
    assert run(["export-dot", "--genus", "3", "--out", str(target)]) == 0
    assert run(["export-dot", "--genus", "3"]) == 0
    assert target.read_text() == capsys.readouterr().out
    assert run(["export-dot", "--genus", "13"]) == 2
    capsys.readouterr()


def test_usage_errors_exit_with_two():
    with pytest.raises(SystemExit) as info:
        run([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["count"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["count", "--genus", "9", "--mode", "pruned"])
    assert info.value.code == 2


def test_io_failures_exit_with_four(tmp_path, capsys):
    missing = tmp_path / "absent" / "runs.csv"
    assert run(["count", "--genus", "8", "--stats-out", str(missing)]) == 4
    err = capsys.readouterr().err
    assert err.startswith("i/o error:")


def test_internal_failures_exit_with_three(monkeypatch, capsys):
    def boom(items, workers):
        raise WorkerFailure("boom")
    monkeypatch.setattr(cli.schedule, "run_parallel", boom)
    assert run(["count", "--genus", "10"]) == 3
    assert capsys.readouterr().err == "internal error: boom\n"
