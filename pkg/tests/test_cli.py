import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triplesym import cli
from triplesym.cache import BetaCache


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_redei_json(capsys):
    code, out, _ = run(capsys, "redei", "5", "29", "109", "--json", "--verify")
    assert code == 0
    assert json.loads(out) == {"exponent": 0, "fallbacks": [], "n": 2, "rendered": "+1",
                               "triple": [5, 29, 109], "verified": True}


def test_redei_text(capsys):
    code, out, _ = run(capsys, "redei", "29", "5", "109")
    assert code == 0 and "+1" in out


@pytest.mark.parametrize("argv,reason", [
    (("redei", "3", "5", "13"), "NotOneModFour"),
    (("redei", "5", "13", "17"), "LegendreObstruction"),
    (("redei", "5", "5", "29"), "NotDistinct"),
    (("redei", "5", "29", "9"), "NotAnOddPrime"),
])
def test_redei_inadmissible(capsys, argv, reason):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 2
    assert json.loads(out)["error"] == reason


def test_cubic_json(capsys):
    code, out, _ = run(capsys, "cubic", "17", "53", "71", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["exponent"] == 2 and rec["rendered"] == "ζ^2"
    assert rec["cohomological_exponent"] == 1 and rec["verified"]


def test_cubic_not_one_mod_nine(capsys):
    code, out, _ = run(capsys, "cubic", "7", "53", "71", "--json")
    assert code == 2 and json.loads(out)["error"] == "NotOneModNine"


def test_cubic_theta_not_found(capsys):
    code, out, _ = run(capsys, "cubic", "107", "89", "17", "--search-bound", "5", "--json")
    assert code == 3 and json.loads(out)["error"] == "ThetaNotFound"


def test_cubic_theta_file(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps([{"pi1": ["-17", "0"], "pi2": ["-53", "0"],
                                 "theta": [["-8", "0"], ["-3", "0"], ["0", "0"]]}]))
    code, out, _ = run(capsys, "cubic", "17", "53", "71", "--theta", str(good), "--json")
    assert code == 0 and json.loads(out)["exponent"] == 2

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"pi1": ["-17", "0"], "pi2": ["-53", "0"],
                                "theta": [["1", "0"], ["0", "0"], ["0", "0"]]}]))
    code, out, _ = run(capsys, "cubic", "17", "53", "71", "--theta", str(bad), "--json")
    assert code == 2 and json.loads(out)["error"] == "ThetaRejected"


def test_scan_header_only(capsys):
    code, out, _ = run(capsys, "scan", "--bound", "5")
    assert code == 0 and out == cli.CSV_HEADER + "\n"


def test_scan_contains_row(capsys):
    code, out, _ = run(capsys, "scan", "--bound", "110")
    assert code == 0 and "5,29,109,0,+1,true" in out.splitlines()


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "--bound", "110", "--out", "json")
    recs = json.loads(out)
    assert {"triple": [5, 29, 109], "exponent": 0, "rendered": "+1", "n": 2,
            "verified": True, "fallbacks": []} in recs


def test_scan_rejects_other_moduli(capsys):
    assert run(capsys, "scan", "--bound", "50", "--n", "3")[0] == 2


def test_scan_deterministic_across_jobs(capsys):
    _, one, _ = run(capsys, "scan", "--bound", "200", "--jobs", "1", "--no-cache")
    _, many, _ = run(capsys, "scan", "--bound", "200", "--jobs", "4", "--no-cache")
    assert one == many
    assert ",false" not in one


def test_cache_is_written_and_reused(capsys, tmp_path, monkeypatch):
    path = tmp_path / "c.json"
    monkeypatch.setenv("TRIPLESYM_BETA_CACHE", str(path))
    run(capsys, "redei", "5", "29", "109")
    data = json.loads(path.read_text())
    assert data["5,29"] == {"x": 7, "y": 2, "z": 1}
    assert BetaCache(path).get((5, 29)).triple == (7, 2, 1)


@pytest.mark.parametrize("content", ["not json", '{"5,29": {"x": 9, "y": 1, "z": 2}}', "[]"])
def test_corrupt_cache_exits_one(capsys, tmp_path, monkeypatch, content):
    path = tmp_path / "c.json"
    path.write_text(content)
    monkeypatch.setenv("TRIPLESYM_BETA_CACHE", str(path))
    code, out, _ = run(capsys, "redei", "5", "29", "109", "--json")
    assert code == 1 and json.loads(out)["error"] == "CacheCorrupt"


SUITE_IDS = {"lemma1": "lifting", "lemma2": "obstruction"}


@pytest.mark.parametrize("suite", sorted(cli.SUITES), ids=lambda s: SUITE_IDS.get(s, s))
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite)
    assert code == 0 and out.strip() == f"{suite}: pass"


@given(st.sampled_from([2, 3]), st.integers(0, 10), st.lists(st.text(max_size=10), max_size=3))
def test_record_round_trip(n, k, notes):
    from triplesym.redei import SymbolValue
    v = SymbolValue(k, n)
    rec = cli.ResultRecord(n, [5, 29, 109], v.exponent, v.rendered(), bool(k % 2), notes)
    assert cli.ResultRecord.from_json(rec.to_json()) == rec


def test_record_rejects_inconsistent_rendering():
    with pytest.raises(ValueError):
        cli.ResultRecord(2, [5, 29, 109], 1, "+1", True)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "triplesym", "redei", "5", "29", "109", "--no-cache"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "+1" in proc.stdout
