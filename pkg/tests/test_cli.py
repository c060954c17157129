import json

from landau.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--index", "2", "--noncentral", "1")
    assert code == 0
    body = json.loads(out)
    sources = {b["source"]: b["bound_G"] for b in body["bounds"]}
    assert sources == {"theorem-A": 32, "one-class": 18}


def test_bounds_rejects_bad_index(capsys):
    code, _, err = run(capsys, "bounds", "--index", "0", "--noncentral", "1")
    assert code == 1
    assert "positive integer" in err


def test_solve_command(capsys):
    code, out, _ = run(capsys, "solve", "--index", "2", "--parts", "2")
    assert code == 0
    assert out.splitlines() == ["1/3 + 1/6 = 1/2", "1/4 + 1/4 = 1/2"]


def test_candidates_command(capsys):
    code, out, _ = run(capsys, "candidates", "--mode", "one-class", "--index", "2")
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == ["6", "8", "12"]


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, "classify", "--mode", "bogus", "--index", "2",
                       "--catalog", "x")
    assert code == 1
    assert "invalid choice" in err
    code, _, _ = run(capsys, "no-such-command")
    assert code == 1


def test_classify_command(capsys, cat56_path):
    code, out, err = run(capsys, "classify", "--mode", "one-class", "--index", "2",
                         "--catalog", str(cat56_path), "--exhaustive")
    assert code == 0
    assert out.count("\n") == 8  # csv header + 7 rows
    assert "3 group(s), 7 row(s)" in err


def test_classify_writes_out_file(capsys, tmp_path, cat56_path):
    out_file = tmp_path / "table.md"
    code, out, _ = run(capsys, "classify", "--mode", "two-coprime", "--index", "1",
                       "--catalog", str(cat56_path), "--exhaustive",
                       "--format", "md", "--out", str(out_file))
    assert code == 0
    assert out == ""
    assert "S_3" in out_file.read_text(encoding="utf-8")


def test_classify_deterministic_across_jobs(capsys, cat56_path, tmp_path):
    texts = []
    for jobs in ("1", "2"):
        out_file = tmp_path / f"jobs{jobs}.csv"
        code, _, _ = run(capsys, "classify", "--mode", "one-class", "--index", "2",
                         "--catalog", str(cat56_path), "--jobs", jobs,
                         "--out", str(out_file))
        assert code == 0
        texts.append(out_file.read_bytes())
    assert texts[0] == texts[1]


def test_incomplete_catalog_exit_code(capsys, cat56_path):
    code, _, err = run(capsys, "classify", "--mode", "one-class", "--index", "5",
                       "--catalog", str(cat56_path), "--exhaustive")
    assert code == 3
    assert "incomplete" in err


def test_catalog_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.catalog"
    bad.write_text('{"schema": "wrong"}\n', encoding="utf-8")
    code, _, err = run(capsys, "classify", "--mode", "one-class", "--index", "2",
                       "--catalog", str(bad))
    assert code == 2
    assert "catalog error" in err
    code, _, err = run(capsys, "classify", "--mode", "one-class", "--index", "2",
                       "--catalog", str(tmp_path / "missing.catalog"))
    assert code == 2


def test_kpp_command(capsys, cat12_path):
    code, out, _ = run(capsys, "kpp", "--max-k", "3", "--catalog", str(cat12_path),
                       "--exhaustive")
    assert code == 0
    assert out.splitlines()[1:] == ["1,1,1,1", "2,2,1,C_2", "3,3,1,C_3", "3,6,2,S_3"]


def test_kpp_incomplete_exit_code(capsys, cat12_path):
    code, _, _ = run(capsys, "kpp", "--max-k", "4", "--catalog", str(cat12_path),
                     "--exhaustive")
    assert code == 3


def test_verify_command(capsys, cat12_path):
    code, out, _ = run(capsys, "verify", "--catalog", str(cat12_path), "--quiet")
    assert code == 0
    assert "0 violation(s)" in out
