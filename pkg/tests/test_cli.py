import csv
import io
import json

import pytest

from starmonoid.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_range():
    assert parse_range("4") == [4]
    assert parse_range("3..5") == [3, 4, 5]


def test_counts_table(capsys):
    code, out, _ = run(capsys, "counts", "--n", "3..5", "--classes", "all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 18
    assert all(r["formula"] == r["generated"] == r["predicate"] for r in rows)
    paut3 = next(r for r in rows if r["class"] == "PAut" and r["n"] == "3")
    assert paut3["formula"] == "22"


def test_counts_2pt(capsys):
    code, out, _ = run(capsys, "counts", "--n", "4", "--classes", "2PT")
    assert json.loads(out)[0]["formula"] == 128


def test_verify_both(capsys):
    code, out, _ = run(capsys, "verify-presentation", "--class", "PsEnd", "--n", "4", "--strategy", "both")
    assert code == 0
    assert json.loads(out)[0]["status"] == "Verified"


def test_verify_usage_error(capsys):
    code, _, err = run(capsys, "verify-presentation", "--class", "PsEnd", "--n", "3")
    assert code == 1 and "n >= 4" in err


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["counts", "--bogus"])
    assert exc.value.code == 1


def test_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "verify-presentation", "--class", "PsEnd", "--n", "4", "--strategy", "exact",
                       "--tc-cap", "10")
    assert code == 3 and json.loads(out)[0]["status"] == "Inconclusive"


def test_refuted_exit_code(capsys, tmp_path):
    # a mutated R0 relation no longer holds for the generators
    run(capsys, "derive-r0", "--n", "4", "-o", str(tmp_path / "r0.pres"))
    text = (tmp_path / "r0.pres").read_text()
    assert "a0^2 = 1\n" in text
    (tmp_path / "bad.pres").write_text(text.replace("a0^2 = 1\n", "a0^2 = a0\n"))
    code, out, _ = run(capsys, "verify-presentation", "--class", "2PT", "--n", "4", "--strategy", "exact",
                       "--r0", str(tmp_path / "bad.pres"))
    assert code == 2 and json.loads(out)[0]["status"] == "Refuted"


def test_export_csv(capsys):
    code, out, _ = run(capsys, "export", "--class", "PAut", "--n", "4", "--format", "csv")
    assert code == 0 and len(out.splitlines()) - 1 == 83


def test_derive_r0_round_trip(capsys, tmp_path):
    path = tmp_path / "r0.pres"
    assert run(capsys, "derive-r0", "--n", "4", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "verify-presentation", "--class", "PsEnd", "--n", "4", "--r0", str(path))
    assert code == 0 and json.loads(out)[0]["status"] == "Verified"


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", "--n", "4", "--samples", "3", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 15
    assert {r["result"] for r in rows} == {"Yes"}


def test_reports_are_deterministic(capsys):
    a = run(capsys, "verify-presentation", "--class", "IEnd", "--n", "4")[1]
    b = run(capsys, "verify-presentation", "--class", "IEnd", "--n", "4")[1]
    assert a == b and "timing_ms" not in a


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("STARMONOID_FORMAT", "csv")
    code, out, _ = run(capsys, "counts", "--n", "3", "--classes", "PAut")
    assert out.startswith("class,n,formula")


def test_jobs(capsys):
    serial = run(capsys, "counts", "--n", "3..4", "--format", "csv")[1]
    parallel = run(capsys, "counts", "--n", "3..4", "--format", "csv", "--jobs", "2")[1]
    assert serial == parallel
