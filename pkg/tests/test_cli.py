from __future__ import annotations

from pathlib import Path

import pytest

from nearrings.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_c9(tmp_path, capsys):
    out = tmp_path / "c9.nr"
    code, stdout, _ = run(capsys, "construct", "--group", "C9", "--phi", "neg",
                          "--reps", "2,3,5,8", "--zero", "3", "--out", str(out))
    assert code == 0
    assert "distributive 3: [0, 3, 6]" in stdout
    assert "gc case 1" in stdout
    assert out.exists()


def test_construct_field_of_three(capsys):
    code, stdout, _ = run(capsys, "construct", "--group", "C3", "--phi", "neg",
                          "--reps", "1")
    assert code == 0
    assert "order 3" in stdout


def test_construct_zp2(capsys):
    code, stdout, _ = run(capsys, "construct", "--zp2", "5")
    assert code == 0
    assert "distributive 5: [0, 5, 10, 15, 20]" in stdout


def test_construct_invalid_data_exit_2(capsys):
    code, _, stderr = run(capsys, "construct", "--group", "C9", "--phi", "neg",
                          "--reps", "2,3,5")
    assert code == 2
    assert "miss" in stderr


def test_usage_error_exit_1(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1
    code, _, _ = run(capsys, "construct")
    assert code == 1


def _write_c9(tmp_path, capsys):
    out = tmp_path / "c9.nr"
    run(capsys, "construct", "--group", "C9", "--phi", "neg",
        "--reps", "2,3,5,8", "--zero", "3", "--out", str(out))
    return out


def test_analyze_document(tmp_path, capsys):
    path = _write_c9(tmp_path, capsys)
    code, stdout, _ = run(capsys, "analyze", str(path))
    assert code == 0
    assert "gc case 1: [0, 3, 6]" in stdout
    assert "two-sided" in stdout


def test_analyze_json(tmp_path, capsys):
    import json

    path = _write_c9(tmp_path, capsys)
    code, stdout, _ = run(capsys, "analyze", str(path), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["distributive"] == [0, 3, 6]
    assert payload["gc"] == {"case": 1, "members": [0, 3, 6]}
    assert payload["semidirect"] is None


def test_analyze_order15_split(tmp_path, capsys):
    out = tmp_path / "o15.nr"
    run(capsys, "construct", "--group", "C15", "--phi", "neg",
        "--reps", "1,3,4,6,7,10,13", "--zero", "3,6", "--out", str(out))
    code, stdout, _ = run(capsys, "analyze", str(out))
    assert code == 0
    assert "gc case 3: [0, 5, 10]" in stdout
    assert "kernel [0, 3, 6, 9, 12]" in stdout


def test_analyze_parse_failure_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.nr"
    bad.write_text("garbage\n")
    code, _, stderr = run(capsys, "analyze", str(bad))
    assert code == 2


def test_verify_exit_zero(tmp_path, capsys):
    path = _write_c9(tmp_path, capsys)
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "generalized-centre-case-agreement: pass" in stdout


def test_bibd_export(tmp_path, capsys):
    path = _write_c9(tmp_path, capsys)
    out = tmp_path / "design.txt"
    code, _, _ = run(capsys, "bibd", str(path), "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "9 30 3"
    assert lines[1].startswith("unbalanced")


def test_enumerate_counts(capsys, tmp_path):
    code, stdout, _ = run(capsys, "enumerate", "--max-order", "3")
    assert code == 0 and "1 classes" in stdout
    code, stdout, _ = run(capsys, "enumerate", "--max-order", "2")
    assert code == 0 and "0 classes" in stdout


def test_enumerate_manifest_and_tables(tmp_path, capsys):
    manifest = tmp_path / "m.txt"
    tables = tmp_path / "tables"
    code, stdout, _ = run(capsys, "enumerate", "--max-order", "5",
                          "--manifest", str(manifest), "--tables", str(tables))
    assert code == 0
    text = manifest.read_text()
    assert text.startswith("planar-nearring-manifest 1\n")
    docs = sorted(tables.glob("*.nr"))
    assert len(docs) > 0
    # every exported table parses and round-trips
    from nearrings import nearring_from_document, read_document

    for doc_path in docs:
        doc = read_document(doc_path.read_text())
        nearring_from_document(doc)


def test_nearvector_command(capsys):
    code, stdout, _ = run(capsys, "nearvector", "--field", "5",
                          "--twists", "id,pow:3", "--coordinate", "0")
    assert code == 0
    assert "quasi-kernel size 9" in stdout
    assert "splits over regular blocks: True" in stdout


def test_nearvector_dickson(capsys):
    code, stdout, _ = run(capsys, "nearvector", "--dickson9", "--twists", "id,id")
    assert code == 0
    assert "quasi-kernel size 33" in stdout
    assert "derived nearring distributive size 9" in stdout
