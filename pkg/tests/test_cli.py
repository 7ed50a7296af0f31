from __future__ import annotations

import json

import pytest

from sinecert.cli import UsageError, main, parse_beta, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2 and "invalid choice" in err


def test_verify_h7b(capsys):
    code, out, _ = run(capsys, "verify", "H7b")
    assert code == 0
    assert "0.39281956258689586" in out and "0.67755077339437549" in out


def test_verify_h_certificates_writes_files(capsys, tmp_path):
    code, _, _ = run(capsys, "--out", str(tmp_path), "verify", "h-certificates")
    assert code == 0
    certs = sorted(p.name for p in tmp_path.glob("*.cert"))
    assert len(certs) == 11 and "h1-published-chain.cert" in certs
    for c in certs:
        assert run(capsys, "check", str(tmp_path / c))[0] == 0


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--json", "verify", "b5")
    assert code == 0 and json.loads(out)["status"] == "certified"


def test_verify_failing_report_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "tail14")
    assert code == 1 and "FAIL tail14" in out


def test_pipeline_commands(capsys):
    code, out, _ = run(capsys, "pipeline", "--n", "7", "--beta", "beta1")
    assert code == 0 and "verdict=proved" in out
    code, out, _ = run(capsys, "pipeline", "--n", "8")
    assert code == 0 and "branch=even" in out
    code, out, _ = run(capsys, "pipeline", "--n", "45")
    assert code == 0 and "branch=telescoped" in out


def test_pipeline_errors(capsys):
    assert run(capsys, "pipeline", "--n", "5")[0] == 2
    assert run(capsys, "pipeline", "--n", "9", "--beta", "0.6.1")[0] == 2
    assert run(capsys, "pipeline", "--n", "9", "--beta", "0.5")[0] == 1


def test_scan_commands(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3", "--beta", "0.58", "--cells", "2048")
    assert code == 1 and "x=3.0" in out
    code, out, _ = run(capsys, "scan", "--n", "2..2", "--beta", "0")
    assert code == 0 and "0.000e+00" in out
    code, out, _ = run(capsys, "--json", "scan", "--n", "2..10", "--cells", "1024")
    assert code == 0 and json.loads(out)["any_negative"] is False


def test_check_errors(capsys, tmp_path):
    run(capsys, "--out", str(tmp_path), "verify", "h-certificates")
    good = (tmp_path / "h1-published-chain.cert").read_text()
    trunc = tmp_path / "trunc.cert"
    trunc.write_text(good.replace("end\n", ""))
    assert run(capsys, "check", str(trunc))[0] == 2
    lines = good.splitlines()
    i = next(j for j, ln in enumerate(lines) if ln.startswith("link "))
    lines[i] = lines[i].rsplit("diff>=", 1)[0] + "diff>=5"
    bad = tmp_path / "bad.cert"
    bad.write_text("\n".join(lines) + "\n")
    assert run(capsys, "check", str(bad))[0] == 1
    assert run(capsys, "check", str(tmp_path / "missing.cert"))[0] == 2


def test_precision_flags(capsys, monkeypatch):
    assert run(capsys, "--precision", "20", "verify", "b5")[0] == 2
    monkeypatch.setenv("SINECERT_PRECISION", "abc")
    assert run(capsys, "verify", "b5")[0] == 2
    monkeypatch.setenv("SINECERT_PRECISION", "96")
    assert run(capsys, "verify", "b5")[0] == 0


def test_no_command(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_parsers():
    assert parse_beta("beta1", 128)[0] == "beta1"
    assert parse_beta("3/4", 128)[1].lo_fraction == 0.75
    with pytest.raises(UsageError):
        parse_beta("x", 128)
    assert list(parse_range("3..5")) == [3, 4, 5]
    assert list(parse_range("4")) == [4]
    with pytest.raises(UsageError):
        parse_range("5..3")
    with pytest.raises(UsageError):
        parse_range("a..b")


def test_deterministic_output(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        run(capsys, "--out", str(d), "verify", "fc")
        run(capsys, "--out", str(d), "pipeline", "--n", "11")
    for p in a.iterdir():
        assert p.read_bytes() == (b / p.name).read_bytes()
