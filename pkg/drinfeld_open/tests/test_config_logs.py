"""
Tests for run configuration, the JSONL run log and the SweepTracker.
"""
import csv
import json
import os
import sys
import tempfile

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.config import load_config
from drinfeld_open.errors import ConfigError
from drinfeld_open.logs import RunLog, console
from drinfeld_open.metrics.tracker import SweepTracker


def _write_yaml(tmp_path, text, name="cfg.yaml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

def test_defaults():
    cfg = load_config()
    assert cfg.place_deg == 4
    assert cfg.prime_deg == 3, "cubic primes are the first ones not excluded over F_3"
    assert cfg.cap == 2_000_000
    assert cfg.mode == "full"
    assert cfg.section("charpoly")["method"] == "motive"
    assert cfg.section("charpoly")["torsion_cap"] is None
    assert cfg.section("run")["log_path"] == "results/run.jsonl"


def test_every_default_key_is_read():
    cfg = load_config()
    assert set(cfg.section("run")) == {"seed", "log_path", "progress"}
    assert set(cfg.section("charpoly")) == {"method", "torsion_cap", "crossval_max_degree"}
    assert set(cfg.section("eigenrel")) == {"budget"}


def test_flat_overrides():
    cfg = load_config(overrides={"cap": 5, "seed": 3, "mode": None})
    assert cfg.cap == 5
    assert cfg.seed == 3
    assert cfg.mode == "full", "None leaves the loaded value"


def test_nested_override():
    cfg = load_config(overrides={"sweep": {"exclusions": ["T^2 + 1"]}})
    assert cfg.section("sweep")["exclusions"] == ["T^2 + 1"]
    assert cfg.section("sweep")["exponent"] == 1


def test_yaml_file_merges_over_defaults(tmp_path):
    path = _write_yaml(tmp_path, "sweep:\n  place_degree: 2\n  mode: squares\n")
    cfg = load_config(path)
    assert cfg.place_deg == 2
    assert cfg.mode == "squares"
    assert cfg.prime_deg == 3


@pytest.mark.parametrize("text", [
    "plugins:\n  x: 1\n",
    "sweep: [1, 2\n",
    "- a\n- b\n",
    "sweep:\n  mode: cubes\n",
    "sweep:\n  place_degree: 0\n",
    "closure:\n  cap: 0\n",
    "charpoly:\n  torsion_cap: 0\n",
])
def test_bad_config_files(tmp_path, text):
    with pytest.raises(ConfigError):
        load_config(_write_yaml(tmp_path, text))


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "nope.yaml"))


def test_unknown_override():
    with pytest.raises(ConfigError):
        load_config(overrides={"colour": "red"})


def test_config_to_dict():
    cfg = load_config(overrides={"command": "certify", "input_path": "fam.json"})
    data = cfg.to_dict()
    assert data["command"] == "certify"
    assert data["input"] == "fam.json"


# ---------------------------------------------------------------------------
# Run log
# ---------------------------------------------------------------------------

def test_run_log_appends_jsonl(tmp_path):
    path = tmp_path / "logs" / "run.jsonl"
    log = RunLog(str(path))
    log.event("sweep.place", {"place": "1:0", "n_x": 2})
    log.event("sweep.bad", {"place": "1:1"})
    assert len(log) == 2
    lines = path.read_text(encoding="utf-8").splitlines()
    assert [json.loads(line)["event"] for line in lines] == ["sweep.place", "sweep.bad"]
    assert json.loads(lines[0])["payload"] == {"place": "1:0", "n_x": 2}
    assert json.loads(lines[0])["session_id"] == log.session_id


def test_run_log_in_memory():
    log = RunLog()
    entry = log.event("closure.done")
    assert entry["payload"] == {}
    assert log.entries == [entry]


def test_run_log_info_only_when_verbose(capsys):
    RunLog().info("sweep", "quiet")
    RunLog(verbose=True).info("sweep", "loud")
    out = capsys.readouterr().out
    assert "quiet" not in out
    assert "[sweep]" in out and "loud" in out


def test_console_format(capsys):
    console("certify", "2 certified", ok=True)
    assert "[certify]" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# SweepTracker
# ---------------------------------------------------------------------------

def _filled_tracker():
    tracker = SweepTracker()
    tracker.record_place("1:0", 1, 2, "motive", 0.01, 2, True)
    tracker.record_place("1:1", 1, 2, "motive", 0.02, 1, True)
    tracker.record_place("1:2", 1, None, "bad_reduction", 0.0, None, False)
    tracker.record_place("2:z", 2, 2, "motive", 0.05, 1, True)
    return tracker


def test_sweep_tracker_summary():
    """SweepTracker records places and get_summary aggregates them."""
    tracker = _filled_tracker()
    assert len(tracker) == 4
    summary = tracker.get_summary()
    for key in ("total_places", "good_places", "bad_places", "places_by_degree",
                "n_x_histogram", "mean_seconds", "max_seconds"):
        assert key in summary, f"Missing key '{key}' in summary"
    assert summary["good_places"] == 3
    assert summary["bad_places"] == 1
    assert summary["places_by_degree"] == {"1": 3, "2": 1}
    assert summary["n_x_histogram"] == {"2": 1, "1": 2}
    assert summary["max_seconds"] == 0.05


def test_sweep_tracker_to_csv():
    """SweepTracker.to_csv() writes one row per place."""
    tracker = _filled_tracker()
    with tempfile.NamedTemporaryFile(mode="w", suffix=".csv", delete=False) as f:
        tmp_path = f.name
    try:
        tracker.to_csv(tmp_path)
        with open(tmp_path, "r", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 4
        assert rows[2]["method"] == "bad_reduction"
    finally:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)


def test_sweep_tracker_to_json():
    """SweepTracker.to_json() writes the summary and the place records."""
    tracker = _filled_tracker()
    with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as f:
        tmp_path = f.name
    try:
        tracker.to_json(tmp_path)
        with open(tmp_path, "r", encoding="utf-8") as f:
            data = json.load(f)
        assert data["summary"]["total_places"] == 4
        assert [p["place"] for p in data["places"]] == ["1:0", "1:1", "1:2", "2:z"]
    finally:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)


def test_sweep_tracker_empty_and_clear():
    tracker = _filled_tracker()
    tracker.clear()
    summary = tracker.get_summary()
    assert summary["total_places"] == 0
    assert summary["mean_seconds"] == 0.0
    assert len(tracker) == 0
