"""
End-to-end tests of the command-line front end: exit codes and output files.
"""
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open import logs
from drinfeld_open.cli import main as cli_main
from drinfeld_open.cli.main import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from drinfeld_open.cli.selftest import CheckResult, SelftestSettings, crossval_modules, run_selftest

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")
REFERENCE = os.path.join(DATA_DIR, "reference_family.json")
GOLDEN_REPORT = os.path.join(DATA_DIR, "golden", "certify_reference.json")


@pytest.fixture
def config(tmp_path):
    """A config that keeps the run log inside tmp_path."""
    path = tmp_path / "cfg.yaml"
    path.write_text(
        f"run:\n  log_path: {tmp_path / 'run.jsonl'}\n"
        "rootsys:\n  radius: 2\n",
        encoding="utf-8",
    )
    return str(path)


def _config_with(tmp_path, extra):
    path = tmp_path / "extra.yaml"
    path.write_text(f"run:\n  log_path: {tmp_path / 'run.jsonl'}\n" + extra, encoding="utf-8")
    return str(path)


def _module_file(tmp_path, data, name="mod.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data, indent=2), encoding="utf-8")
    return str(path)


def _run(argv, tmp_path, config):
    out = tmp_path / "out.json"
    code = main(argv + ["--config", config, "--out", str(out)])
    data = json.loads(out.read_text(encoding="utf-8")) if out.exists() else None
    return code, data


# ---------------------------------------------------------------------------
# charpoly
# ---------------------------------------------------------------------------

def test_charpoly_finite_module(tmp_path, config):
    path = _module_file(tmp_path, {"name": "t2", "q": 3, "base": "finite", "m_or_var": 1,
                                   "rank": 2, "phiT": ["0", "0", "1"]})
    code, data = _run(["charpoly", "--input", path], tmp_path, config)
    assert code == EXIT_OK
    assert data["deg"] == 1
    assert len(data["coeffs"]) == 3
    assert data["newton"]["ok"]
    assert data["newton"]["n_x"] == 2
    assert data["method"] == "motive"


def test_charpoly_family_at_place(tmp_path, config):
    code, data = _run(["charpoly", "--input", REFERENCE, "--place", "2:z+1"], tmp_path, config)
    assert code == EXIT_OK
    assert data["place"] == "2:z+1"
    assert data["deg"] == 2


def test_charpoly_honours_torsion_cap(tmp_path):
    path = _module_file(tmp_path, {"name": "t2", "q": 3, "base": "finite", "m_or_var": 1,
                                   "rank": 2, "phiT": ["0", "0", "1"]})
    config = _config_with(tmp_path, "charpoly:\n  method: torsion\n  torsion_cap: 1\n")
    code, _ = _run(["charpoly", "--input", path], tmp_path, config)
    assert code == EXIT_FAIL
    config = _config_with(tmp_path, "charpoly:\n  method: torsion\n")
    code, data = _run(["charpoly", "--input", path], tmp_path, config)
    assert code == EXIT_OK
    assert data["method"] == "torsion"


def test_charpoly_family_needs_place(tmp_path, config):
    code, _ = _run(["charpoly", "--input", REFERENCE], tmp_path, config)
    assert code == EXIT_USAGE


def test_charpoly_bad_reduction_is_reported(tmp_path, config):
    path = _module_file(tmp_path, {"name": "bad", "q": 3, "base": "rational", "m_or_var": "s",
                                   "rank": 2, "phiT": ["0", "1", "s"]})
    code, data = _run(["charpoly", "--input", path, "--place", "1:0"], tmp_path, config)
    assert code == EXIT_OK
    assert data["status"] == "bad_reduction"


def test_malformed_module_file(tmp_path, config):
    path = tmp_path / "broken.json"
    path.write_text("{ \"name\": ", encoding="utf-8")
    code, _ = _run(["charpoly", "--input", str(path)], tmp_path, config)
    assert code == EXIT_USAGE


def test_missing_module_file(tmp_path, config):
    code, _ = _run(["charpoly", "--input", str(tmp_path / "absent.json")], tmp_path, config)
    assert code == EXIT_USAGE


def test_bad_place_spec(tmp_path, config):
    code, _ = _run(["charpoly", "--input", REFERENCE, "--place", "zero"], tmp_path, config)
    assert code == EXIT_USAGE


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def test_closure_complete(tmp_path, config):
    code, data = _run(["closure", "--q", "3", "--m", "2"], tmp_path, config)
    assert code == EXIT_OK
    assert data["order"] == 648
    assert data["full"]
    assert data["status"] == "complete"


def test_closure_cap_exceeded(tmp_path, config):
    code, data = _run(["closure", "--q", "5", "--cap", "10"], tmp_path, config)
    assert code == EXIT_CAP
    assert data["status"] == "cap_exceeded"
    assert data["order"] is None
    log = (tmp_path / "run.jsonl").read_text(encoding="utf-8")
    assert "closure.cap" in log


# ---------------------------------------------------------------------------
# certify, rootsys-verify, usage
# ---------------------------------------------------------------------------

def test_certify_writes_report(tmp_path, config):
    code, data = _run(["certify", "--input", REFERENCE, "--prime-deg", "1", "--place-deg", "1"],
                      tmp_path, config)
    assert code == EXIT_OK
    assert list(data)[:5] == ["family", "sweep", "trad_field", "primes", "pairs"]
    assert data["meta"]["run"]["command"] == "certify"


def test_certify_matches_golden_report(tmp_path, config, monkeypatch):
    monkeypatch.chdir(os.path.dirname(DATA_DIR))
    out = tmp_path / "report.json"
    code = main(["certify", "--input", os.path.join("data", "reference_family.json"),
                 "--prime-deg", "3", "--place-deg", "4", "--config", config, "--out", str(out)])
    assert code == EXIT_OK
    text = out.read_text(encoding="utf-8")
    data = json.loads(text)
    statuses = [p["status"] for p in data["primes"]]
    assert statuses.count("CERTIFIED") == 8
    assert statuses.count("EXCLUDED") == 6
    if not os.path.exists(GOLDEN_REPORT):
        os.makedirs(os.path.dirname(GOLDEN_REPORT), exist_ok=True)
        with open(GOLDEN_REPORT, "w", encoding="utf-8") as f:
            f.write(text)
        pytest.skip("golden report written by this run")
    with open(GOLDEN_REPORT, "r", encoding="utf-8") as f:
        assert text == f.read()


def test_certify_rejects_zero_bound(tmp_path, config):
    code, _ = _run(["certify", "--input", REFERENCE, "--place-deg", "0"], tmp_path, config)
    assert code == EXIT_USAGE


def test_rootsys_verify(tmp_path, config):
    code, data = _run(["rootsys-verify", "--systems", "A1,A2,B2"], tmp_path, config)
    assert code == EXIT_OK
    assert data["ok"]
    assert data["radius"] == 2
    assert [row["system"] for row in data["systems"]] == ["A1", "A2", "B2"]


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc_info:
        main(["closure"])
    assert exc_info.value.code == 2


def test_crossval_modules_cover_base_degree_four():
    mods = crossval_modules(0)
    assert len(mods) == 37
    assert {phi.m for phi in mods} == {1, 2, 3, 4}
    assert all(phi.m * (phi.q ** phi.rank - 1) <= 64 for phi in mods)
    assert max(phi.m for phi in crossval_modules(0, max_degree=2)) == 2


def test_selftest_reads_its_config(tmp_path, monkeypatch):
    seen = {}

    def fake_selftest(seed, quick=False, settings=None):
        seen.update(seed=seed, quick=quick, settings=settings)
        return [CheckResult("stub", True, "ok", 0.0)]

    monkeypatch.setattr("drinfeld_open.cli.main.run_selftest", fake_selftest)
    config = _config_with(tmp_path, "charpoly:\n  crossval_max_degree: 2\neigenrel:\n  budget: 7\n")
    code, _ = _run(["selftest", "--quick", "--seed", "5"], tmp_path, config)
    assert code == EXIT_OK
    assert seen == {"seed": 5, "quick": True, "settings": SelftestSettings(crossval_degree=2, eigenrel_budget=7)}


def test_cli_colors_come_from_logs():
    assert cli_main.Fore is logs.Fore
    assert cli_main.Style is logs.Style


@pytest.mark.slow
def test_quick_selftest_passes():
    results = run_selftest(seed=0, quick=True)
    failed = [r.name for r in results if not r.ok]
    assert not failed, f"failed checks: {failed}"
